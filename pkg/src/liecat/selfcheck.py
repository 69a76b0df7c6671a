"""Sweeps comparing the main code paths with the oracle on small ranks.

Each sweep returns an :class:`~liecat.oracle.OracleReport`.  The blocks
swept are the dot-orbits of the zero weight: in rank r, nu = w0 . 0 is
antidominant for W_r and every x in W_r gives a window [nu, x . nu].
"""

from __future__ import annotations

import itertools

from .category_o import composition_series_window, simple_weight_dim, verma_weight_dim
from .kl import KLCache, kl_poly
from .oracle import (
    ORACLE_BOUND,
    OracleReport,
    brute_bruhat_leq,
    brute_kostant,
    kl_from_r,
    multiplicities_by_char_subtraction,
    weyl_group,
)
from .rootdata import (
    RootLatticeElement,
    RootSystemKind,
    Weight,
    interval,
    kostant_partition,
)
from .truncation import truncated_reciprocity_table
from .weyl import apply_dot, bruhat_leq, length, longest_element

__all__ = [
    "block_windows", "sweep_bruhat", "sweep_kl", "sweep_kostant",
    "sweep_multiplicities", "sweep_reciprocity", "run_all", "bound_from_rank",
]


def bound_from_rank(n: int) -> dict:
    """Rank n for A (the symmetric group on n letters) and n - 1 for B, C, D."""
    return {
        RootSystemKind.A: n,
        RootSystemKind.B: n - 1,
        RootSystemKind.C: n - 1,
        RootSystemKind.D: n - 1,
    }


def _sorted_group(kind: RootSystemKind, n: int) -> list:
    group = weyl_group(kind, n)
    return sorted(group, key=lambda w: (group[w], w.perm))


def block_windows(kind: RootSystemKind, n: int, base: Weight | None = None) -> list:
    """(lambda, lo) pairs: lo = w0 . base and lambda = x . lo for x in W_n."""
    base = base if base is not None else Weight.zero(kind)
    lo = apply_dot(longest_element(kind, n), base)
    return [(apply_dot(x, lo), lo) for x in _sorted_group(kind, n)]


def sweep_bruhat(kind: RootSystemKind, n: int) -> OracleReport:
    report = OracleReport()
    group = _sorted_group(kind, n)
    lengths = weyl_group(kind, n)
    for x in group:
        report.record(("length", x.perm), length(x), lengths[x])
        for y in group:
            report.record(("bruhat", x.perm, y.perm), bruhat_leq(x, y), brute_bruhat_leq(kind, x, y))
    return report


def sweep_kl(kind: RootSystemKind, n: int, cache: KLCache | None = None) -> OracleReport:
    cache = cache if cache is not None else KLCache()
    report = OracleReport()
    group = _sorted_group(kind, n)
    for x, y in itertools.product(group, repeat=2):
        if bruhat_leq(x, y):
            report.record(("kl", x.perm, y.perm), kl_poly(kind, x, y, cache), kl_from_r(kind, x, y))
    return report


def sweep_kostant(kind: RootSystemKind, max_sum: int = 6, rank: int = 6) -> OracleReport:
    report = OracleReport()
    for c in itertools.product(range(max_sum + 1), repeat=rank):
        if sum(c) > max_sum:
            continue
        beta = RootLatticeElement.from_simple(kind, c)
        report.record(("kostant", c), kostant_partition(kind, beta), brute_kostant(kind, c, rank))
    return report


def sweep_multiplicities(kind: RootSystemKind, n: int, cache: KLCache | None = None,
                         characters: bool = True) -> OracleReport:
    """KL multiplicities against character subtraction, plus the character identity
    dim M(lambda)^zeta = sum_mu [M(lambda):L(mu)] dim L(mu)^zeta."""
    cache = cache if cache is not None else KLCache()
    report = OracleReport()
    for lam, lo in block_windows(kind, n):
        kl_side = composition_series_window(lam, lo, lam, cache)
        peeled = multiplicities_by_char_subtraction(lam, lo, cache)
        report.record(("window", str(lam), str(lo)), kl_side.entries, peeled.entries)
        if characters:
            for zeta in interval(lo, lam):
                total = sum(m * simple_weight_dim(mu, zeta, cache) for mu, m in kl_side.entries.items())
                report.record(("character", str(lam), str(zeta)),
                              verma_weight_dim(lam, zeta), total)
    return report


def sweep_reciprocity(kind: RootSystemKind, n: int, cache: KLCache | None = None) -> OracleReport:
    """Every row of every table truncated at the top of the rank-n block."""
    cache = cache if cache is not None else KLCache()
    report = OracleReport()
    windows = block_windows(kind, n)
    top = windows[-1][0]
    for mu, _ in windows:
        for row in truncated_reciprocity_table(top, mu, cache):
            report.record(("reciprocity", str(top), str(mu), str(row.nu)),
                          row.verma_mult_in_P, row.comp_mult_in_M)
    return report


def run_all(bound: dict | None = None) -> dict:
    """All sweeps at every rank up to the bound; keys are sweep names."""
    bound = bound or ORACLE_BOUND
    reports: dict = {}

    def add(name: str, rep: OracleReport) -> None:
        reports[name] = reports.get(name, OracleReport()).merge(rep)

    for kind in RootSystemKind:
        floor = 2 if kind is RootSystemKind.D else 1
        top = bound[kind]
        cache = KLCache()
        for n in range(floor, top + 1):
            add("bruhat", sweep_bruhat(kind, n))
            add("kl", sweep_kl(kind, n, cache))
            add("multiplicity", sweep_multiplicities(kind, n, cache))
        if top >= floor:
            add("reciprocity", sweep_reciprocity(kind, top, cache))
        add("kostant", sweep_kostant(kind))
    return reports
