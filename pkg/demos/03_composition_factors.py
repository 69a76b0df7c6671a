"""
Composition factors of Verma modules
====================================

In a regular integral block the multiplicities [M(lambda) : L(mu)] are
values of KL polynomials at 1.  Peeling characters off from the top gives
the same table.
"""

from liecat import KLCache, RootSystemKind, apply_dot, composition_series_window, longest_element, parse_weight
from liecat.oracle import multiplicities_by_char_subtraction

cache = KLCache()
zero = parse_weight("A[]")
lo = apply_dot(longest_element(RootSystemKind.A, 4), zero)  # antidominant in W_4
lam = parse_weight("A[0,1,-1]")

table = composition_series_window(lam, lo, lam, cache)
for mu, m in table.rows():
    print(f"{str(mu):>16}  {m}")

peeled = multiplicities_by_char_subtraction(lam, lo)
print("character subtraction agrees:", peeled == table)

# a simple Verma module has one factor, even with an infinite tail
anti = parse_weight("A[;lin(0,-2)]")
simple = composition_series_window(anti, anti.translate((1, 0, -1)), anti, cache)
print({str(mu): m for mu, m in simple.entries.items()})
