"""Brute-force ground truth for small ranks.

The first three routes below avoid the KL recursion, the lifting-property
Bruhat test and the Kostant DP of the main modules:

* W_n is enumerated by breadth-first search, which also yields lengths;
* Bruhat order is the subword property checked over every reduced word;
* KL polynomials come from R-polynomials by the triangular solve
  q^{l(y)-l(x)} P_{x,y}(1/q) - P_{x,y}(q) = sum_{x<z<=y} R_{x,z} P_{z,y};
* Kostant partitions are counted by listing multisets of positive roots,
  the roots being generated from the simple roots by root strings;
* composition multiplicities come from peeling simple characters off a
  Verma character, highest weight first.  The simple characters still need
  KL values; they come from a private table, never a caller's cache.

The default bound is rank 4 for A and rank 3 for B, C and D.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .category_o import MultiplicityTable, block_members, simple_weight_dim
from .errors import OracleBoundExceeded
from .kl import KLCache
from .laurent import ONE, ZERO, LaurentPolynomial
from .rootdata import (
    RootSystemKind,
    Weight,
    difference,
    interval,
    kostant_partition,
)
from .weyl import WeylElement, from_word, generator, generator_indices, multiply

__all__ = [
    "OracleReport", "ORACLE_BOUND", "weyl_group", "r_polynomial", "kl_from_r",
    "brute_bruhat_leq", "brute_kostant", "brute_kostant_table", "multiplicities_by_char_subtraction",
    "check_bound",
]

ORACLE_BOUND = {
    RootSystemKind.A: 4,
    RootSystemKind.B: 3,
    RootSystemKind.C: 3,
    RootSystemKind.D: 3,
}


@dataclass
class OracleReport:
    checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def record(self, item, main, oracle) -> None:
        self.checked += 1
        if main != oracle:
            self.mismatches.append((item, main, oracle))

    def merge(self, other: OracleReport) -> OracleReport:
        return OracleReport(self.checked + other.checked, self.mismatches + other.mismatches)


def check_bound(kind: RootSystemKind, n: int, bound: dict | None = None) -> None:
    limit = (bound or ORACLE_BOUND)[kind]
    if n > limit:
        raise OracleBoundExceeded(f"rank {n} exceeds the oracle bound {limit} for kind {kind}")


def _rank_of(*elements: WeylElement) -> int:
    kind = elements[0].kind
    floor = 2 if kind is RootSystemKind.D else 1
    return max(floor, *(w.support for w in elements))


@lru_cache(maxsize=None)
def weyl_group(kind: RootSystemKind, n: int) -> dict:
    """Map each element of W_n to its length, found by BFS from the identity."""
    start = WeylElement(kind)
    depth = {start: 0}
    queue = deque([start])
    gens = [generator(kind, k) for k in generator_indices(kind, n)]
    while queue:
        w = queue.popleft()
        for s in gens:
            ws = multiply(w, s)
            if ws not in depth:
                depth[ws] = depth[w] + 1
                queue.append(ws)
    return depth


def _lengths(kind: RootSystemKind, n: int) -> dict:
    return weyl_group(kind, n)


_Q_MINUS_ONE = LaurentPolynomial.from_coefficients([-1, 1])
_Q = LaurentPolynomial.monomial(1)


@lru_cache(maxsize=None)
def _r(kind: RootSystemKind, n: int, x: WeylElement, y: WeylElement) -> LaurentPolynomial:
    ell = _lengths(kind, n)
    if not y.perm:
        return ONE if not x.perm else ZERO
    for k in generator_indices(kind, n):
        s = generator(kind, k)
        ys = multiply(y, s)
        if ell[ys] < ell[y]:
            break
    xs = multiply(x, s)
    if ell[xs] < ell[x]:
        return _r(kind, n, xs, ys)
    return _r(kind, n, x, ys) * _Q_MINUS_ONE + _r(kind, n, xs, ys) * _Q


def r_polynomial(kind: RootSystemKind, x: WeylElement, y: WeylElement,
                 bound: dict | None = None) -> LaurentPolynomial:
    n = _rank_of(x, y)
    check_bound(kind, n, bound)
    return _r(kind, n, x, y)


@lru_cache(maxsize=None)
def _kl_column(kind: RootSystemKind, n: int, y: WeylElement) -> dict:
    """P_{x,y} for every x in W_n, solved downward in length."""
    ell = _lengths(kind, n)
    column = {y: ONE}
    for x in sorted(ell, key=lambda w: (-ell[w], w.perm)):
        if x == y:
            continue
        delta = ZERO
        for z, pz in column.items():
            if ell[z] > ell[x] and not pz.is_zero():
                delta = delta + _r(kind, n, x, z) * pz
        d = ell[y] - ell[x]
        if d <= 0:
            column[x] = ZERO
            continue
        column[x] = -delta.truncate_above((d - 1) // 2)
    return column


def kl_from_r(kind: RootSystemKind, x: WeylElement, y: WeylElement,
              bound: dict | None = None) -> LaurentPolynomial:
    n = _rank_of(x, y)
    check_bound(kind, n, bound)
    return _kl_column(kind, n, y)[x]


def _reduced_words(kind: RootSystemKind, n: int, y: WeylElement) -> list:
    ell = _lengths(kind, n)
    if not y.perm:
        return [()]
    words = []
    for k in generator_indices(kind, n):
        ys = multiply(y, generator(kind, k))
        if ell[ys] < ell[y]:
            words.extend(w + (k,) for w in _reduced_words(kind, n, ys))
    return words


@lru_cache(maxsize=None)
def _below(kind: RootSystemKind, n: int, y: WeylElement) -> frozenset:
    ell = _lengths(kind, n)
    found = set()
    for word in _reduced_words(kind, n, y):
        for size in range(len(word) + 1):
            for picks in combinations(range(len(word)), size):
                z = from_word(kind, (word[i] for i in picks))
                if ell[z] == size:
                    found.add(z)
    return frozenset(found)


def brute_bruhat_leq(kind: RootSystemKind, x: WeylElement, y: WeylElement,
                     bound: dict | None = None) -> bool:
    """x <= y iff some reduced word of y has a reduced word of x as a subword."""
    n = _rank_of(x, y)
    check_bound(kind, n, bound)
    return x in _below(kind, n, y)


# ------------------------------------------------------------ Kostant


def _simple_vectors(kind: RootSystemKind, n: int) -> list:
    vecs = []
    for k in range(1, n + 1):
        v = [0] * (n + 1)
        if kind is RootSystemKind.A:
            v[k - 1], v[k] = -1, 1
        elif k >= 2:
            v[k - 2], v[k - 1] = -1, 1
        elif kind is RootSystemKind.B:
            v[0] = 1
        elif kind is RootSystemKind.C:
            v[0] = 2
        else:
            v[0] = v[1] = 1
        vecs.append(tuple(v))
    return vecs


def _all_roots(kind: RootSystemKind, n: int) -> set:
    """Orbit of the simple roots under the reflections they define."""
    simples = _simple_vectors(kind, n)

    def reflect(v, a):
        va = sum(x * y for x, y in zip(v, a))
        aa = sum(x * x for x in a)
        k = Fraction(2 * va, aa)
        return tuple(int(x - k * y) for x, y in zip(v, a))

    roots = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for v in frontier:
            for a in simples:
                r = reflect(v, a)
                if r not in roots:
                    roots.add(r)
                    nxt.append(r)
        frontier = nxt
    return roots


@lru_cache(maxsize=None)
def _positive_roots_with_height(kind: RootSystemKind, n: int) -> tuple:
    """Positive roots grown from the simple roots along root strings."""
    roots = _all_roots(kind, n)
    simples = _simple_vectors(kind, n)
    height = {a: 1 for a in simples}
    frontier = list(simples)
    h = 1
    while frontier:
        h += 1
        nxt = []
        for v in frontier:
            for a in simples:
                w = tuple(x + y for x, y in zip(v, a))
                if w in roots and w not in height:
                    height[w] = h
                    nxt.append(w)
        frontier = nxt
    return tuple(sorted(height.items(), key=lambda kv: (kv[1], kv[0])))


@lru_cache(maxsize=None)
def brute_kostant_table(kind: RootSystemKind, n: int, max_height: int) -> Counter:
    """Counter: epsilon-vector -> number of multisets of positive roots of rank n
    (simple roots alpha_1..alpha_n) with total height <= max_height."""
    roots = [(v, h) for v, h in _positive_roots_with_height(kind, n) if h <= max_height]
    table: Counter = Counter()
    zero = (0,) * (n + 1)

    def walk(start: int, budget: int, acc: tuple) -> None:
        table[acc] += 1
        for idx in range(start, len(roots)):
            v, h = roots[idx]
            if h <= budget:
                walk(idx, budget - h, tuple(x + y for x, y in zip(acc, v)))

    walk(0, max_height, zero)
    return table


def brute_kostant(kind: RootSystemKind, simple_coeffs, n: int | None = None) -> int:
    """Exhaustive count for beta = sum c_k alpha_k."""
    c = tuple(simple_coeffs)
    n = n or max(len(c), 2)
    simples = _simple_vectors(kind, n)
    beta = [0] * (n + 1)
    for ck, a in zip(c, simples):
        beta = [x + ck * y for x, y in zip(beta, a)]
    return brute_kostant_table(kind, n, sum(c))[tuple(beta)]


# ------------------------------------------------ character subtraction


# private table: the oracle never reads or writes a caller's KL cache
_ORACLE_KL = KLCache()


@lru_cache(maxsize=1 << 14)
def _subtraction(lam: Weight, lo: Weight) -> dict:
    window = interval(lo, lam)
    members = block_members(lam, window)  # window order is top-down by height
    table: dict = {}
    for xi in members:
        m = kostant_partition(lam.kind, difference(lam, xi))
        for done, mult in table.items():
            m -= mult * simple_weight_dim(done, xi, _ORACLE_KL)
        if m < 0:
            raise ArithmeticError(f"negative multiplicity for L({xi}) in M({lam})")
        if m:
            table[xi] = m
    return table


def multiplicities_by_char_subtraction(lam: Weight, lo: Weight, cache=None):
    """[M(lambda):L(xi)] for block members xi of [lo, lambda] by peeling characters.

    With m(lambda) = 1, each m(xi) is dim M(lambda)^xi minus the contributions
    sum m(xi') dim L(xi')^xi of the factors already found above xi.  ``cache``
    is accepted for signature symmetry and ignored.
    """
    return MultiplicityTable(lam, dict(_subtraction(lam, lo)), interval(lo, lam))
