"""
Weights, roots and the dot action
=================================

A weight is a finite prefix of coordinates plus a tail rule for the rest.
"""

from liecat import (
    RootLatticeElement, RootSystemKind, classify, interval, kostant_partition, leq, parse_root,
    parse_weight, reflect_dot, shifted_pairing, simple_root,
)

# the zero weight of sl(infinity) and a weight with an affine tail
zero = parse_weight("A[]")
anti = parse_weight("A[;lin(0,-2)]")
print(zero, anti, [str(c) for c in anti.coordinates(5)])

# shifted pairings (lambda + rho)(h_alpha)
alpha = parse_root("e3-e1", RootSystemKind.A)
print("shifted pairing of 0 with", alpha, "=", shifted_pairing(zero, alpha))

# the dot action of a simple reflection
a1 = simple_root(RootSystemKind.A, 1)
s0 = reflect_dot(zero, a1)
print("s_1 . 0 =", s0, " below 0:", leq(s0, zero))

# the six flags.  0 is dominant but infinitely many pairings are positive
for lam in (zero, anti, parse_weight("A[1/2]"), parse_weight("B[1,0;lin(0,-3)]")):
    flags = classify(lam).as_dict()
    print(f"{str(lam):>18}", " ".join(k for k, v in flags.items() if v))

# everything between 0 - alpha_1 - alpha_2 and 0
low = parse_weight("A[1,0,-1]")
for mu in interval(low, zero):
    print("  ", mu)

# Kostant partition counts: alpha_1 + alpha_2 = e3 - e1 splits two ways
beta = RootLatticeElement.from_simple(RootSystemKind.A, (1, 1))
print("K(alpha_1 + alpha_2) =", kostant_partition(RootSystemKind.A, beta))
