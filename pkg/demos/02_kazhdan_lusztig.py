"""
Kazhdan-Lusztig polynomials in W_n
==================================

The polynomials are computed in the smallest W_n holding both elements and
do not change when n grows.
"""

import itertools
from collections import Counter

from liecat import KLCache, RootSystemKind, bruhat_leq, from_word, kl_poly, stabilization_check, to_reduced_word
from liecat.oracle import kl_from_r, weyl_group
from liecat.weyl import format_word

A, B = RootSystemKind.A, RootSystemKind.B
cache = KLCache()

x = from_word(A, [2])
y = from_word(A, [2, 1, 3, 2])
print("P_{x,y} =", kl_poly(A, x, y, cache), " (one-line y:", y.perm, ")")

# distribution of P over Bruhat pairs of S_4
group = weyl_group(A, 4)
dist = Counter(str(kl_poly(A, u, v, cache)) for u, v in itertools.product(group, repeat=2) if bruhat_leq(u, v))
print(dict(dist))

# the same values from R-polynomials, by a completely different route
assert all(kl_poly(A, u, v, cache) == kl_from_r(A, u, v) for u, v in itertools.product(group, repeat=2))

# type B: the first non-trivial polynomials show up in rank 3
groupB = weyl_group(B, 3)
for u, v in itertools.product(groupB, repeat=2):
    p = kl_poly(B, u, v, cache)
    if p.degree:
        print(format_word(to_reduced_word(u)), format_word(to_reduced_word(v)), p)
        break

print("stable from W_4 to W_6:", stabilization_check(A, x, y, extra_ranks=2))
