from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liecat.errors import (
    IllegalRootShape,
    KindMismatch,
    NotComparable,
    ParseError,
    TailMismatch,
)
from liecat.oracle import brute_kostant
from liecat.rootdata import (
    Root,
    RootLatticeElement,
    RootShape,
    RootSystemKind,
    Weight,
    interval,
    kostant_partition,
    leq,
    pairing,
    parse_root,
    parse_weight,
    positive_roots,
    reflect_dot,
    rho_pairing,
    shifted_pairing,
    simple_root,
)

A, B, C, D = RootSystemKind.A, RootSystemKind.B, RootSystemKind.C, RootSystemKind.D
KINDS = list(RootSystemKind)
W = parse_weight


def alpha(kind, k):
    return simple_root(kind, k)


# ---------------------------------------------------------------- grammar


@pytest.mark.parametrize("text, canonical", [
    ("A[1,-1]", "A[1,-1]"),
    ("B[3/2,1;zero]", "B[3/2,1]"),
    ("A[;lin(0,-2)]", "A[;lin(0,-2)]"),
    ("A[0]", "A[]"),
    ("C[1,0,0;zero]", "C[1]"),
    ("D[2,4;lin(0,2)]", "D[;lin(0,2)]"),
    ("A[6/4]", "A[3/2]"),
    ("A[;lin(0,0)]", "A[]"),
])
def test_weight_grammar_canonical_form(text, canonical):
    assert str(W(text)) == canonical
    assert W(canonical) == W(text)


@pytest.mark.parametrize("bad", [
    "Z[0]", "A[", "A[1,]", "A[1;lin(1)]", "A[1/0]", "A[1.5]", "A[;foo]", "a[1]", "A[1 ,2]",
])
def test_weight_grammar_rejects(bad):
    with pytest.raises(ParseError):
        W(bad)


def test_equality_is_equality_of_coordinate_functions():
    assert W("A[0,0,0]") == W("A[]")
    assert hash(W("A[2,4;lin(0,2)]")) == hash(W("A[;lin(0,2)]"))
    assert W("A[1]") != W("B[1]")


@pytest.mark.parametrize("text, kind, expected", [
    ("e3-e1", A, Root(A, RootShape.MINUS, 1, 3)),
    ("e2+e1", B, Root(B, RootShape.PLUS, 1, 2)),
    ("e1", B, Root(B, RootShape.SHORT, 1)),
    ("2e4", C, Root(C, RootShape.LONG, 4)),
])
def test_root_grammar(text, kind, expected):
    assert parse_root(text, kind) == expected
    assert str(expected) == text


@pytest.mark.parametrize("text, kind", [
    ("e2+e1", A), ("e1", C), ("2e1", B), ("e1", D), ("e1-e2", A), ("e1-e1", B),
])
def test_illegal_root_shapes(text, kind):
    with pytest.raises(IllegalRootShape):
        parse_root(text, kind)


# ---------------------------------------------------------------- pairings


def test_pairing_examples():
    assert pairing(W("A[3,1]"), parse_root("e2-e1", A)) == -2
    assert pairing(W("B[1]"), parse_root("e1", B)) == 2
    # tail coordinates lambda_5 = 10 and lambda_2 = 4
    assert pairing(W("A[;lin(0,2)]"), parse_root("e5-e2", A)) == 6


def test_pairing_formulas_per_shape():
    lam = W("C[1,5]")
    assert pairing(lam, parse_root("e2-e1", C)) == 4
    assert pairing(lam, parse_root("e2+e1", C)) == 6
    assert pairing(lam, parse_root("2e2", C)) == 5


def test_pairing_kind_check():
    with pytest.raises(IllegalRootShape):
        pairing(W("A[1]"), parse_root("e1", B))


def test_rho_pairing_examples():
    assert rho_pairing(A, parse_root("e3-e1", A)) == 2
    assert rho_pairing(D, parse_root("e2+e1", D)) == 1
    assert rho_pairing(B, parse_root("e2", B)) == 3


def test_shifted_pairing_examples():
    assert shifted_pairing(W("A[]"), parse_root("e2-e1", A)) == 1
    assert shifted_pairing(W("A[1,-1]"), parse_root("e2-e1", A)) == -1
    assert shifted_pairing(W("C[1]"), parse_root("2e1", C)) == 2


@pytest.mark.parametrize("kind", KINDS)
def test_rho_is_one_on_simple_roots_at_every_rank(kind):
    for k in range(1, 8):
        assert rho_pairing(kind, alpha(kind, k)) == 1


def _coroot_height(root):
    # coroot of a long/short root in the dual system, expressed on simple coroots
    beta = RootLatticeElement.from_root(root)
    kind = root.kind
    if kind in (A, D):
        return sum(beta.simple_coordinates())
    # B and C are dual: the coroot of e_i (B) is 2e_i, which is a root of C, and vice versa
    dual = C if kind is B else B
    twice = {RootShape.SHORT: 2, RootShape.LONG: Fraction(1, 2)}.get(root.shape, 1)
    vec = RootLatticeElement(dual, tuple(twice * c for c in beta.coords))
    return sum(vec.simple_coordinates())


@pytest.mark.parametrize("kind", KINDS)
def test_rho_pairing_is_coroot_height(kind):
    for n in range(2, 6):
        simples = {alpha(kind, k) for k in range(1, n + 1)}
        for root in positive_roots(kind, n):
            value = rho_pairing(kind, root)
            assert value >= 1
            assert value == _coroot_height(root)
            assert (value == 1) == (root in simples)


# ------------------------------------------------------------------- order


def test_leq_examples():
    assert leq(W("A[1,-1]"), W("A[]"))
    assert not leq(W("A[]"), W("A[1,-1]"))
    # c_1 = sum/2 = 1 and the tail sums vanish
    assert leq(W("C[]"), W("C[2]"))


def test_leq_errors():
    with pytest.raises(KindMismatch):
        leq(W("A[]"), W("B[]"))
    with pytest.raises(TailMismatch):
        leq(W("A[]"), W("A[;lin(1,0)]"))


def test_simple_coordinates_round_trip():
    for kind in KINDS:
        for c in product(range(3), repeat=4):
            beta = RootLatticeElement.from_simple(kind, c)
            got = beta.simple_coordinates()
            assert tuple(got) + (0,) * (4 - len(got)) == c


def test_root_lattice_membership():
    assert not RootLatticeElement(A, (1,)).in_root_lattice()
    assert RootLatticeElement(B, (1,)).in_root_lattice()
    assert not RootLatticeElement(C, (1,)).in_root_lattice()
    assert RootLatticeElement(C, (1, 1)).in_root_lattice()
    assert not RootLatticeElement(D, (1, 0, 0)).in_root_lattice()


def test_interval_examples():
    lam = W("A[]")
    assert interval(lam, lam).members == (lam,)
    low = lam.translate(RootLatticeElement.from_simple(A, (-1,)).coords)
    assert set(interval(low, lam)) == {low, lam}
    low2 = lam.translate(RootLatticeElement.from_simple(A, (-1, -1)).coords)
    assert len(interval(low2, lam)) == 4
    with pytest.raises(NotComparable):
        interval(lam, low)


def test_interval_is_sorted_top_down():
    iv = interval(W("B[-2,-1,-1]"), W("B[]"))
    heights = [sum(RootLatticeElement(B, tuple(
        a - b for a, b in zip(iv.hi.coordinates(3), m.coordinates(3)))).simple_coordinates() or ())
        for m in iv]
    assert heights == sorted(heights)
    assert iv.members[0] == iv.hi and iv.members[-1] == iv.lo


def test_kostant_examples():
    assert kostant_partition(A, RootLatticeElement.from_simple(A, (1,))) == 1
    assert kostant_partition(A, RootLatticeElement.from_simple(A, (1, 1))) == 2
    assert kostant_partition(A, RootLatticeElement.from_simple(A, (2, 1))) == 2
    assert kostant_partition(A, RootLatticeElement(A, ())) == 1


def test_kostant_infeasible_is_zero():
    assert kostant_partition(A, RootLatticeElement(A, (1,))) == 0
    assert kostant_partition(C, RootLatticeElement(C, (1,))) == 0
    assert kostant_partition(B, RootLatticeElement(B, (-1,))) == 0


def test_reflect_dot_examples():
    assert reflect_dot(W("A[]"), alpha(A, 1)) == W("A[1,-1]")
    assert reflect_dot(W("B[]"), alpha(B, 1)) == W("B[-1]")
    fixed = W("A[1,0]")  # (lambda + rho) = (2, 2, ...)
    assert shifted_pairing(fixed, alpha(A, 1)) == 0
    assert reflect_dot(fixed, alpha(A, 1)) == fixed


# -------------------------------------------------------------- properties

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=3)
small_ints = st.integers(min_value=-3, max_value=3)
kinds = st.sampled_from(KINDS)


@st.composite
def weights(draw, kind=None, integral=False):
    kind = kind or draw(kinds)
    coords = draw(st.lists(small_ints if integral else rationals, max_size=4))
    tail = draw(st.one_of(st.none(), st.tuples(small_ints, small_ints)))
    return Weight(kind, tuple(coords), tail)


@st.composite
def weight_triples(draw):
    """Three weights with a common tail, so all differences are finite."""
    kind = draw(kinds)
    tail = draw(st.one_of(st.none(), st.tuples(small_ints, small_ints)))
    return tuple(Weight(kind, tuple(draw(st.lists(small_ints, min_size=3, max_size=3))), tail)
                 for _ in range(3))


@given(weight_triples())
@settings(max_examples=300, deadline=None)
def test_leq_partial_order_axioms(triple):
    x, y, z = triple
    assert leq(x, x)
    if leq(x, y) and leq(y, x):
        assert x == y
    if leq(x, y) and leq(y, z):
        assert leq(x, z)


@given(weights(), st.data())
@settings(max_examples=200, deadline=None)
def test_reflect_dot_is_an_involution(lam, data):
    root = data.draw(st.sampled_from(positive_roots(lam.kind, 5)))
    assert reflect_dot(reflect_dot(lam, root), root) == lam


@given(kinds, st.lists(st.integers(0, 2), min_size=1, max_size=2), st.data())
@settings(max_examples=40, deadline=None)
def test_interval_size_matches_exhaustive_count(kind, c, data):
    top = data.draw(weights(kind=kind, integral=True))
    lo = top.translate(RootLatticeElement.from_simple(kind, [-x for x in c]).coords)
    n = max(top.support, lo.support, len(c) + 1)
    # every weight with coordinates in a box around the endpoints, filtered by leq
    lo_c = lo.coordinates(n)
    span = 2 * sum(c)  # no coordinate moves further than this
    box = [range(int(a) - span, int(a) + span + 1) for a in lo_c]
    count = 0
    for coords in product(*box):
        mu = top.with_coordinates({i + 1: v for i, v in enumerate(coords)})
        count += leq(lo, mu) and leq(mu, top)
    assert len(interval(lo, top)) == count


@given(kinds, st.lists(st.integers(-2, 3), min_size=1, max_size=4))
@settings(max_examples=200, deadline=None)
def test_kostant_vanishes_off_the_positive_cone(kind, c):
    beta = RootLatticeElement.from_simple(kind, c)
    value = kostant_partition(kind, beta)
    if any(x < 0 for x in c):
        assert value == 0
    else:
        assert value == brute_kostant(kind, c, max(len(c), 2))


@given(kinds, st.lists(st.fractions(-3, 3, max_denominator=2), min_size=1, max_size=4))
@settings(max_examples=200, deadline=None)
def test_kostant_zero_for_non_integral_coordinates(kind, coords):
    beta = RootLatticeElement(kind, tuple(coords))
    c = beta.simple_coordinates()
    if c is None or any(x.denominator != 1 or x < 0 for x in c):
        assert kostant_partition(kind, beta) == 0
