"""Verma modules, strong linkage, blocks and composition multiplicities.

Everything here is phrased through shifted pairings (lambda + rho)(h_alpha).
For a weight with a prefix of length N and tail lambda_i = a + b*i, write
v = lambda + rho, so v_i = p + m*i for i > N.  Shifted pairings then fall
into finitely many explicit values plus a handful of affine families in
the tail, which makes every flag of :func:`classify` decidable.

Multiplicities in regular integral orbits use the KL formula
[M(x.nu) : L(y.nu)] = P_{w0 x, w0 y}(1) for nu antidominant inside a
truncation W_n, evaluated at two consecutive ranks and cross-checked.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    KindMismatch,
    StabilizationError,
    UnsupportedOrbit,
)
from .kl import KLCache, inverse_kl_at_one, kl_poly
from .rootdata import (
    RootSystemKind,
    Weight,
    WeightInterval,
    _RHO_OFFSET,
    difference,
    generator_rank_floor,
    interval,
    kostant_partition,
    leq,
    positive_roots,
    reflect_dot,
    shifted_pairing,
    simple_root,
)
from .weyl import from_word, generator_indices, longest_element, multiply

__all__ = [
    "WeightClass", "LinkageChain", "MultiplicityTable", "classify",
    "verma_is_simple", "verma_has_finite_length", "strong_linkage_chain",
    "verma_hom_dim", "same_block", "multiplicity", "verma_weight_dim",
    "simple_weight_dim", "composition_series_window", "block_members",
    "orbit_data", "antidominant_representative",
]


@dataclass(frozen=True)
class WeightClass:
    integral: bool
    regular: bool
    dominant: bool
    almost_dominant: bool
    antidominant: bool
    almost_antidominant: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass(frozen=True)
class LinkageChain:
    """start = s_{roots[-1]} ... s_{roots[0]} . end, decreasing at each step."""

    start: Weight
    end: Weight
    roots: tuple

    def weights(self) -> list:
        out = [self.end]
        for alpha in self.roots:
            out.append(reflect_dot(out[-1], alpha))
        return out


@dataclass(frozen=True)
class MultiplicityTable:
    base: Weight
    entries: dict
    window: WeightInterval

    def __getitem__(self, mu: Weight) -> int:
        return self.entries.get(mu, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiplicityTable):
            return NotImplemented
        return self.base == other.base and self.entries == other.entries

    __hash__ = None

    def rows(self) -> list:
        """Entries in window order (top-down by height, then coordinates)."""
        return [(mu, self.entries[mu]) for mu in self.window.members if mu in self.entries]


# ---------------------------------------------------------------- classify

_INF = math.inf


def _is_int(x: Fraction) -> bool:
    return x.denominator == 1


def _family_count(c: Fraction, d: Fraction, t0: int, sign: int) -> float:
    """Number of integers t >= t0 with c + d*t an integer of the given sign.

    Only the distinction zero / finite / infinite matters to callers.
    """
    if d == 0:
        return _INF if _is_int(c) and sign * c > 0 else 0
    q = d.denominator
    residues = [t for t in range(t0, t0 + q) if _is_int(c + d * t)]
    if not residues:
        return 0
    if sign * d > 0:
        return _INF
    # sign*(c + d t) > 0  <=>  t < -c/d
    bound = math.ceil(-c / d) - 1
    total = 0
    for r in residues:
        if bound >= r:
            total += (bound - r) // q + 1
    return total


def _family_has_zero(c: Fraction, d: Fraction, t0: int) -> bool:
    if d == 0:
        return c == 0
    t = -c / d
    return _is_int(t) and t >= t0


def _pairing_families(lam: Weight):
    """Explicit shifted pairings and affine tail families (c, d, t0)."""
    kind = lam.kind
    n = lam.support
    v = [lam.shifted_coordinate(i) for i in range(1, n + 1)]
    a, b = lam.tail if lam.tail is not None else (Fraction(0), Fraction(0))
    p, m = a + _RHO_OFFSET[kind], b + 1
    signed = kind is not RootSystemKind.A

    explicit = []
    for j in range(n):
        if kind is RootSystemKind.B:
            explicit.append(2 * v[j])
        elif kind is RootSystemKind.C:
            explicit.append(v[j])
        for i in range(j):
            explicit.append(v[j] - v[i])
            if signed:
                explicit.append(v[j] + v[i])

    families = []
    for vi in v:
        families.append((p - vi, m, n + 1))
        if signed:
            families.append((p + vi, m, n + 1))
    if kind is RootSystemKind.B:
        families.append((2 * p, 2 * m, n + 1))
    elif kind is RootSystemKind.C:
        families.append((p, m, n + 1))
    families.append((Fraction(0), m, 1))  # v_j - v_i over the tail, j - i = t
    if signed:
        families.append((2 * p, m, 2 * n + 3))  # v_j + v_i over the tail, i + j = t
    return explicit, families


@lru_cache(maxsize=1 << 14)
def classify(lam: Weight) -> WeightClass:
    """Decide the six weight flags exactly over all positive roots."""
    explicit, families = _pairing_families(lam)

    def hits(sign: int) -> float:
        total = sum(1 for x in explicit if _is_int(x) and sign * x > 0)
        for c, d, t0 in families:
            total += _family_count(c, d, t0, sign)
        return total

    integral = all(_is_int(x) for x in explicit) and all(
        _is_int(c) and _is_int(d) for c, d, _ in families
    )
    regular = all(x != 0 for x in explicit) and not any(
        _family_has_zero(c, d, t0) for c, d, t0 in families
    )
    pos, neg = hits(1), hits(-1)
    return WeightClass(
        integral=integral,
        regular=regular,
        dominant=neg == 0,
        almost_dominant=neg < _INF,
        antidominant=pos == 0,
        almost_antidominant=pos < _INF,
    )


def verma_is_simple(lam: Weight) -> bool:
    return classify(lam).antidominant


def verma_has_finite_length(lam: Weight) -> bool:
    return classify(lam).almost_antidominant


# ---------------------------------------------------------- linkage, homs


def _same_kind(lam: Weight, mu: Weight) -> None:
    if lam.kind is not mu.kind:
        raise KindMismatch(f"{lam.kind} vs {mu.kind}")


def _lowering_roots(nu: Weight, n: int):
    for alpha in positive_roots(nu.kind, n):
        k = shifted_pairing(nu, alpha)
        if k > 0 and _is_int(k):
            yield alpha


@lru_cache(maxsize=1 << 16)
def _children(nu: Weight, n: int) -> tuple:
    """Pairs (alpha, s_alpha . nu) over the roots of rank n that lower nu."""
    return tuple((alpha, reflect_dot(nu, alpha)) for alpha in _lowering_roots(nu, n))


def strong_linkage_chain(lam: Weight, mu: Weight) -> LinkageChain | None:
    """A witness that lambda is strongly linked to mu, or None."""
    _same_kind(lam, mu)
    if not leq(lam, mu):
        return None
    if lam == mu:
        return LinkageChain(lam, mu, ())
    n = max(lam.support, mu.support, generator_rank_floor(lam.kind))
    parent = {mu: None}
    queue = deque([mu])
    while queue:
        nu = queue.popleft()
        for alpha, nxt in _children(nu, n):
            if nxt in parent or not leq(lam, nxt):
                continue
            parent[nxt] = (nu, alpha)
            if nxt == lam:
                roots = []
                cur = lam
                while parent[cur] is not None:
                    cur, alpha = parent[cur]
                    roots.append(alpha)
                return LinkageChain(lam, mu, tuple(reversed(roots)))
            queue.append(nxt)
    return None


def verma_hom_dim(lam: Weight, mu: Weight) -> int:
    """dim Hom(M(lambda), M(mu)), which is 0 or 1."""
    return int(strong_linkage_chain(lam, mu) is not None)


def verma_weight_dim(lam: Weight, xi: Weight) -> int:
    """dim M(lambda)^xi."""
    _same_kind(lam, xi)
    if lam.tail != xi.tail:
        return 0
    return kostant_partition(lam.kind, difference(lam, xi))


# ------------------------------------------------------------------ blocks


def _working_rank(*weights: Weight) -> int:
    lam = weights[0]
    n = max(w.support for w in weights) + 2
    if lam.kind is RootSystemKind.D and lam.tail is not None:
        # a vanishing tail coordinate of lambda + rho lets e_j + e_i act
        a, b = lam.tail
        m = b + 1
        if m != 0:
            i = -(a + _RHO_OFFSET[lam.kind]) / m
            if _is_int(i) and i > 0:
                n = max(n, int(i) + 1)
    return max(n, generator_rank_floor(lam.kind))


@lru_cache(maxsize=1 << 16)
def antidominant_representative(lam: Weight, n: int) -> Weight:
    """The unique minimal element of W_n[lambda] . lambda."""
    while True:
        alpha = next(_lowering_roots(lam, n), None)
        if alpha is None:
            return lam
        lam = reflect_dot(lam, alpha)


def same_block(lam: Weight, mu: Weight) -> bool:
    """Whether mu lies in the integral dot-orbit W[lambda] . lambda."""
    _same_kind(lam, mu)
    beta = difference(mu, lam)
    if not beta.in_root_lattice():
        return False
    n = _working_rank(lam, mu)
    return antidominant_representative(lam, n) == antidominant_representative(mu, n)


@lru_cache(maxsize=1 << 16)
def orbit_data(lam: Weight, n: int) -> tuple:
    """(nu, x) with nu antidominant in rank n and lambda = x . nu.

    Walks down with simple reflections only, so lambda must be integral.
    """
    letters = []
    cur = lam
    while True:
        for k in generator_indices(lam.kind, n):
            alpha = simple_root(lam.kind, k)
            if shifted_pairing(cur, alpha) > 0:
                cur = reflect_dot(cur, alpha)
                letters.append(k)
                break
        else:
            return cur, from_word(lam.kind, letters)


def _require_regular_integral(lam: Weight) -> None:
    cls = classify(lam)
    if not (cls.integral and cls.regular):
        raise UnsupportedOrbit(f"{lam} is not in a regular integral orbit")


def multiplicity(lam: Weight, mu: Weight, cache: KLCache | None = None,
                 extra_ranks: int = 1) -> int:
    """[M(lambda) : L(mu)], evaluated at ranks n0..n0+extra_ranks and compared."""
    _same_kind(lam, mu)
    if lam == mu:
        return 1
    if lam.tail != mu.tail:
        return 0
    _require_regular_integral(lam)
    if not leq(mu, lam) or not same_block(lam, mu):
        return 0
    n0 = _working_rank(lam, mu)
    values = set()
    for n in range(n0, n0 + extra_ranks + 1):
        nu, x = orbit_data(lam, n)
        nu_mu, y = orbit_data(mu, n)
        if nu != nu_mu:
            raise StabilizationError(f"{lam} and {mu} reach different antidominant weights")
        w0 = longest_element(lam.kind, n)
        values.add(kl_poly(lam.kind, multiply(w0, x), multiply(w0, y), cache)(1))
    if len(values) != 1:
        raise StabilizationError(f"multiplicity of L({mu}) in M({lam}) varies with rank: {sorted(values)}")
    return values.pop()


def _linked_below(xi: Weight, zeta: Weight, n: int) -> list:
    """All eta strongly linked to xi with zeta <= eta."""
    seen = {xi}
    queue = deque([xi])
    while queue:
        nu = queue.popleft()
        for _, nxt in _children(nu, n):
            if nxt not in seen and leq(zeta, nxt):
                seen.add(nxt)
                queue.append(nxt)
    return list(seen)


@lru_cache(maxsize=1 << 16)
def _simple_weight_dim(xi: Weight, zeta: Weight, cache: KLCache | None) -> int:
    n = _working_rank(xi, zeta)
    _, x = orbit_data(xi, n)
    total = 0
    for eta in _linked_below(xi, zeta, n):
        _, y = orbit_data(eta, n)
        coeff = inverse_kl_at_one(xi.kind, x, y, cache)
        if coeff:
            total += coeff * kostant_partition(xi.kind, difference(eta, zeta))
    if total < 0:
        raise ArithmeticError(f"negative weight multiplicity for L({xi}) at {zeta}")
    return total


def simple_weight_dim(xi: Weight, zeta: Weight, cache: KLCache | None = None) -> int:
    """dim L(xi)^zeta through the inverse KL expansion of ch L in Verma characters.

    Only Verma modules M(eta) with eta strongly linked to xi contribute; the
    other coefficients vanish because they are indexed by Bruhat-incomparable
    Weyl group elements.
    """
    _same_kind(xi, zeta)
    if xi.tail != zeta.tail or not leq(zeta, xi):
        return 0
    if xi == zeta:
        return 1
    _require_regular_integral(xi)
    return _simple_weight_dim(xi, zeta, cache)


def block_members(lam: Weight, window: WeightInterval) -> list:
    """Members of the window lying in the block of lambda, in window order."""
    n = _working_rank(lam, window.lo, window.hi)
    if window.lo.tail != lam.tail:
        return []
    rep = antidominant_representative(lam, n)
    out = []
    for mu in window.members:
        if difference(mu, lam).in_root_lattice() and antidominant_representative(mu, n) == rep:
            out.append(mu)
    return out


def composition_series_window(lam: Weight, lo: Weight, hi: Weight,
                              cache: KLCache | None = None,
                              extra_ranks: int = 1) -> MultiplicityTable:
    """Multiplicities [M(lambda) : L(mu)] for block members mu of [lo, hi]."""
    _same_kind(lam, lo)
    window = interval(lo, hi)
    entries = {}
    for mu in block_members(lam, window):
        m = multiplicity(lam, mu, cache, extra_ranks)
        if m:
            entries[mu] = m
    return MultiplicityTable(lam, entries, window)
