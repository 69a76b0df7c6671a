"""
Truncated categories and BGG reciprocity
========================================

Truncating at lambda_top keeps only weights below it.  Injective hulls then
have finite co-Verma flags and reciprocity can be checked row by row.
"""

from liecat import KLCache, injective_character_dim, parse_weight, truncated_reciprocity_table

cache = KLCache()
top, mu = parse_weight("A[0,1,-1]"), parse_weight("A[2,2,-2,-2]")

print(f"{'nu':>16}  (P:M(nu))  [M(nu):L(mu)]")
for row in truncated_reciprocity_table(top, mu, cache):
    print(f"{str(row.nu):>16}  {row.verma_mult_in_P:>9}  {row.comp_mult_in_M:>13}")

# truncating at mu itself leaves the co-Verma module V(mu)
zero, s0 = parse_weight("A[]"), parse_weight("A[1,-1]")
print(injective_character_dim(s0, s0, s0, cache), injective_character_dim(zero, s0, s0, cache))
