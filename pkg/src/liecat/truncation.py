"""Truncated categories: co-Verma and Verma filtration multiplicities.

For a truncation at lambda_top, the injective hull I(mu) has a finite
co-Verma filtration and the projective cover P(mu) a finite Verma
filtration, with {P(mu) : M(nu)} = {I(mu) : V(nu)} = [M(nu) : L(mu)].

The reciprocity table computes the two sides by different routes:
the filtration side by character subtraction, the composition side by the
KL formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .category_o import block_members, multiplicity, verma_weight_dim
from .errors import KindMismatch, NotInTruncation
from .kl import KLCache
from .oracle import multiplicities_by_char_subtraction
from .rootdata import Weight, interval, leq

__all__ = ["ReciprocityRow", "truncated_reciprocity_table", "injective_character_dim"]


@dataclass(frozen=True)
class ReciprocityRow:
    nu: Weight
    verma_mult_in_P: int
    comp_mult_in_M: int

    @property
    def holds(self) -> bool:
        return self.verma_mult_in_P == self.comp_mult_in_M


def _truncated_block(top: Weight, mu: Weight) -> list:
    if top.kind is not mu.kind:
        raise KindMismatch(f"{top.kind} vs {mu.kind}")
    if top.tail != mu.tail or not leq(mu, top):
        raise NotInTruncation(f"{mu} is not below {top}")
    return block_members(mu, interval(mu, top))


def truncated_reciprocity_table(top: Weight, mu: Weight, cache: KLCache | None = None,
                                extra_ranks: int = 1) -> list:
    """One row per block member nu of [mu, top], ordered from the bottom up."""
    rows = []
    for nu in reversed(_truncated_block(top, mu)):
        filtration = multiplicities_by_char_subtraction(nu, mu, cache)[mu]
        composition = multiplicity(nu, mu, cache, extra_ranks)
        rows.append(ReciprocityRow(nu, filtration, composition))
    return rows


def injective_character_dim(top: Weight, mu: Weight, zeta: Weight,
                            cache: KLCache | None = None, extra_ranks: int = 1) -> int:
    """dim I(mu)^zeta in the truncation at ``top``.

    Sums [M(nu) : L(mu)] dim V(nu)^zeta over the co-Verma layers; V(nu) and
    M(nu) have the same character.
    """
    total = 0
    for nu in _truncated_block(top, mu):
        m = multiplicity(nu, mu, cache, extra_ranks)
        if m:
            total += m * verma_weight_dim(nu, zeta)
    return total
