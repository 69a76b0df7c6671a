"""Acceptance criteria, each reported as one PASS/FAIL line.

Every criterion is exact; the runtime limits are part of the check.
"""

import itertools
import random
import time
from fractions import Fraction

import pytest

from liecat.category_o import classify, verma_has_finite_length, verma_hom_dim, verma_is_simple
from liecat.kl import KLCache, kl_poly, stabilization_check
from liecat.laurent import ONE, LaurentPolynomial
from liecat.oracle import ORACLE_BOUND, OracleReport, weyl_group
from liecat.rootdata import (
    RootLatticeElement,
    RootSystemKind,
    Weight,
    difference,
    kostant_partition,
    leq,
    parse_weight,
    positive_roots,
    reflect_dot,
    shifted_pairing,
)
from liecat.selfcheck import (
    sweep_bruhat,
    sweep_kl,
    sweep_kostant,
    sweep_multiplicities,
    sweep_reciprocity,
)
from liecat.truncation import injective_character_dim
from liecat.weyl import bruhat_leq

KINDS = list(RootSystemKind)
A = RootSystemKind.A
ONE_PLUS_Q = LaurentPolynomial.from_coefficients([1, 1])


def _floor(kind):
    return 2 if kind is RootSystemKind.D else 1


def _ranks(kind):
    return range(_floor(kind), ORACLE_BOUND[kind] + 1)


def _random_weight(rng, kind):
    coords = tuple(Fraction(rng.randint(-6, 6), rng.choice((1, 1, 2, 3))) for _ in range(rng.randint(0, 4)))
    tail = rng.choice([None, (rng.randint(-3, 3), rng.randint(-3, 2)),
                       (Fraction(rng.randint(-3, 3), 2), rng.randint(-3, 2))])
    return Weight(kind, coords, tail)


# ------------------------------------------------------------ criterion 1


@pytest.fixture(scope="module")
def kl_sweep():
    start = time.perf_counter()
    report = OracleReport()
    for kind in KINDS:
        # W_n for smaller n sits inside W_bound, so the top rank covers every pair
        report = report.merge(sweep_kl(kind, ORACLE_BOUND[kind], KLCache()))
    elapsed = time.perf_counter() - start
    cache = KLCache()
    group = weyl_group(A, 4)
    polys = {(x, y): kl_poly(A, x, y, cache) for x, y in itertools.product(group, repeat=2)
             if bruhat_leq(x, y)}
    return report, elapsed, polys


def test_criterion_1a_kl_matches_r_polynomial_oracle(criterion, kl_sweep):
    report, elapsed, polys = kl_sweep
    others_one = all(p in (ONE, ONE_PLUS_Q) for p in polys.values())
    ok = report.passed and elapsed < 30 and others_one
    criterion(1, "kl_poly == kl_from_r on all Bruhat pairs (A<=4, B/C/D<=3), every A4 value is 1 or 1+q",
              ok, f"{report.checked} pairs, {len(report.mismatches)} mismatches", elapsed)
    assert ok


@pytest.mark.xfail(strict=True, reason="A-kind W_4 has 6 pairs with P = 1+q, not 2 (see ledger)")
def test_criterion_1b_exactly_two_pairs_with_one_plus_q(criterion, kl_sweep):
    _, _, polys = kl_sweep
    hits = [(x, y) for (x, y), p in polys.items() if p == ONE_PLUS_Q]
    tops = sorted({y.perm for _, y in hits})
    ok = len(hits) == 2
    criterion(1, "exactly 2 pairs in A-kind W_4 have P = 1+q", ok,
              f"found {len(hits)} pairs over {len(tops)} distinct y: {tops}")
    assert ok


# ------------------------------------------------------------ criterion 2


def test_criterion_2_stabilization(criterion):
    rng = random.Random(20260415)
    start = time.perf_counter()
    failures = checked = 0
    for kind in KINDS:
        group = sorted(weyl_group(kind, ORACLE_BOUND[kind]), key=lambda w: w.perm)
        for _ in range(200):
            y = rng.choice(group)
            below = [x for x in group if bruhat_leq(x, y)]
            x = rng.choice(below)
            checked += 1
            failures += not stabilization_check(kind, x, y, extra_ranks=2)
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 60
    criterion(2, "stabilization_check(extra_ranks=2) on 200 random pairs per kind", ok,
              f"{checked} pairs, {failures} failures", elapsed)
    assert ok


# ------------------------------------------------------- criteria 3 and 4


@pytest.fixture(scope="module")
def multiplicity_sweep():
    start = time.perf_counter()
    report = OracleReport()
    for kind in KINDS:
        cache = KLCache()
        for n in _ranks(kind):
            report = report.merge(sweep_multiplicities(kind, n, cache))
    return report, time.perf_counter() - start


def test_criterion_3_multiplicity_pipelines_agree(criterion, multiplicity_sweep):
    report, elapsed = multiplicity_sweep
    windows = [m for m in report.mismatches if m[0][0] == "window"]
    n_windows = sum(1 for kind in KINDS for n in _ranks(kind) for _ in weyl_group(kind, n))
    ok = not windows and elapsed < 120
    criterion(3, "composition_series_window == multiplicities_by_char_subtraction on every block window",
              ok, f"{n_windows} windows, {len(windows)} mismatches", elapsed)
    assert ok


def test_criterion_4_character_consistency(criterion, multiplicity_sweep):
    report, elapsed = multiplicity_sweep
    chars = [m for m in report.mismatches if m[0][0] == "character"]
    ok = not chars and elapsed < 120
    criterion(4, "dim M(lambda)^zeta == sum_mu [M(lambda):L(mu)] dim L(mu)^zeta on every window",
              ok, f"{report.checked} checks in the sweep, {len(chars)} character mismatches")
    assert ok


# ------------------------------------------------------------ criterion 5


def test_criterion_5_verma_theorems(criterion):
    rng = random.Random(5)
    start = time.perf_counter()
    bad = []
    embeddings = 0
    for kind in KINDS:
        for _ in range(500):
            lam = _random_weight(rng, kind)
            n = max(lam.support, 2) + 2
            cls = classify(lam)
            if verma_is_simple(lam) != cls.antidominant:
                bad.append(("simple", lam))
            roots = positive_roots(kind, n)
            alpha = rng.choice(roots)
            k = shifted_pairing(lam, alpha)
            if k > 0 and k.denominator == 1:
                embeddings += 1
                if verma_hom_dim(reflect_dot(lam, alpha), lam) != 1:
                    bad.append(("verma", lam, alpha))
            # a random second weight below or beside lambda
            c = [rng.randint(-1, 2) for _ in range(rng.randint(1, 3))]
            mu = lam.translate(RootLatticeElement.from_simple(kind, c).coords)
            for lo, hi in ((mu, lam), (lam, mu), (reflect_dot(lam, alpha), lam)):
                if verma_hom_dim(lo, hi) == 1 and not leq(lo, hi):
                    bad.append(("embedding", lo, hi))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 30
    criterion(5, "Verma theorems on 500 random weights per kind", ok,
              f"{embeddings} integral reflections tested, {len(bad)} violations", elapsed)
    assert ok


# ------------------------------------------------------------ criterion 6


def test_criterion_6_infinite_rank_semantics(criterion):
    start = time.perf_counter()
    cls = classify(parse_weight("A[0]"))
    ok = cls.dominant and not cls.almost_antidominant and verma_has_finite_length(parse_weight("A[0]")) is False
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1
    criterion(6, "classify(A[0]) dominant and not almost antidominant, so M(0) has infinite length",
              ok, "", elapsed)
    assert ok


# ------------------------------------------------------------ criterion 7


def test_criterion_7_truncated_reciprocity(criterion):
    start = time.perf_counter()
    report = OracleReport()
    for kind in KINDS:
        cache = KLCache()
        for n in _ranks(kind):
            report = report.merge(sweep_reciprocity(kind, n, cache))
    elapsed = time.perf_counter() - start
    ok = report.passed and elapsed < 120
    criterion(7, "truncated BGG reciprocity rows balance on every swept block", ok,
              f"{report.checked} rows, {len(report.mismatches)} mismatches", elapsed)
    assert ok


# ------------------------------------------------------------ criterion 8


def test_criterion_8_dominant_truncation(criterion):
    rng = random.Random(8)
    start = time.perf_counter()
    bad = 0
    for _ in range(100):
        kind = rng.choice(KINDS)
        mu = _random_weight(rng, kind)
        c = [rng.randint(0, 3) for _ in range(rng.randint(1, 4))]
        zeta = mu.translate(RootLatticeElement.from_simple(kind, [-x for x in c]).coords)
        if injective_character_dim(mu, mu, zeta) != kostant_partition(kind, difference(mu, zeta)):
            bad += 1
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 5
    criterion(8, "injective_character_dim(mu, mu, zeta) == kostant_partition(mu - zeta)", ok,
              f"100 pairs, {bad} mismatches", elapsed)
    assert ok


# ------------------------------------------------------------ criterion 9


def test_criterion_9_kostant_oracle(criterion):
    start = time.perf_counter()
    report = OracleReport()
    for kind in KINDS:
        report = report.merge(sweep_kostant(kind, max_sum=6))
    elapsed = time.perf_counter() - start
    ok = report.passed and elapsed < 10
    criterion(9, "Kostant DP == exhaustive enumeration for simple-coefficient sum <= 6", ok,
              f"{report.checked} vectors, {len(report.mismatches)} mismatches", elapsed)
    assert ok


# ----------------------------------------------------------- criterion 10


def test_criterion_10_order_axioms(criterion):
    rng = random.Random(10)
    start = time.perf_counter()
    bad = 0
    for _ in range(400):
        kind = rng.choice(KINDS)
        tail = rng.choice([None, (rng.randint(-2, 2), rng.randint(-2, 2))])
        x, y, z = (Weight(kind, tuple(rng.randint(-2, 2) for _ in range(3)), tail) for _ in range(3))
        # bias towards comparable triples by stacking random positive combinations
        if rng.random() < 0.5:
            y = x.translate(RootLatticeElement.from_simple(kind, [rng.randint(0, 2) for _ in range(3)]).coords)
            z = y.translate(RootLatticeElement.from_simple(kind, [rng.randint(0, 2) for _ in range(3)]).coords)
        bad += not leq(x, x)
        bad += leq(x, y) and leq(y, x) and x != y
        bad += leq(x, y) and leq(y, z) and not leq(x, z)
    report = OracleReport()
    for kind in KINDS:
        report = report.merge(sweep_bruhat(kind, ORACLE_BOUND[kind]))
    elapsed = time.perf_counter() - start
    ok = bad == 0 and report.passed and elapsed < 30
    criterion(10, "leq partial-order axioms; bruhat_leq == brute_bruhat_leq on W_4 (A), W_3 (B/C/D)", ok,
              f"{bad} axiom violations, {report.checked} Bruhat checks, {len(report.mismatches)} mismatches",
              elapsed)
    assert ok
