import pytest
from hypothesis import given
from hypothesis import strategies as st

from liecat.laurent import ONE, Q, ZERO, LaurentPolynomial

L = LaurentPolynomial


def test_normalization():
    assert L(0, (0, 0)) == ZERO
    assert L(-2, (0, 1, 0)) == L.monomial(-1)
    assert ZERO.degree is None
    assert L.from_coefficients([1, 1]).degree == 1


def test_arithmetic_examples():
    p = ONE + Q
    assert p * p == L.from_coefficients([1, 2, 1])
    assert (Q - ONE) * (Q - ONE) == L.from_coefficients([1, -2, 1])
    assert p - p == ZERO
    assert 3 * p == L.from_coefficients([3, 3])
    assert p.shift(-1) == L(-1, (1, 1))


def test_bar_and_truncate():
    p = L.from_coefficients([1, 2, 3])
    assert p.bar() == L(-2, (3, 2, 1))
    assert p.truncate_above(1) == L.from_coefficients([1, 2])
    assert p.truncate_above(-1) == ZERO


def test_evaluate():
    p = L.from_coefficients([1, 1])
    assert p(1) == 2
    assert p(2) == 3
    assert L(-1, (1,)).evaluate(2) == 0.5


def test_str():
    assert str(ONE + Q) == "1 + q"
    assert str(L.from_coefficients([0, -1, 0, 2])) == "-q + 2q^3"
    assert str(ZERO) == "0"


def test_coefficient_list():
    assert L.from_coefficients([0, 0, 1]).coefficient_list() == [0, 0, 1]
    with pytest.raises(ValueError):
        L(-1, (1,)).coefficient_list()


polys = st.builds(L, st.integers(-4, 4), st.lists(st.integers(-5, 5), max_size=5).map(tuple))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys, polys)
def test_bar_is_a_ring_involution(a, b):
    assert a.bar().bar() == a
    assert (a * b).bar() == a.bar() * b.bar()
    assert (a + b).bar() == a.bar() + b.bar()


@given(polys, polys)
def test_evaluation_is_a_homomorphism(a, b):
    assert (a * b)(1) == a(1) * b(1)
    assert (a + b)(-1) == a(-1) + b(-1)
