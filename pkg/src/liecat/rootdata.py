"""Weights, roots and the dominance order for the four one-sided infinite kinds.

Coordinates are on the epsilon basis, indexed from 1.  Simple roots are
appended at growing indices, so that rank ``n`` truncations nest:

    A: alpha_k = e_{k+1} - e_k                       (k >= 1)
    B: alpha_1 = e_1,       alpha_k = e_k - e_{k-1}  (k >= 2)
    C: alpha_1 = 2 e_1,     alpha_k = e_k - e_{k-1}  (k >= 2)
    D: alpha_1 = e_1 + e_2, alpha_k = e_k - e_{k-1}  (k >= 2)

rho only ever enters through coroot pairings and is realized by the
coordinate vectors rho_i = i (A, C), i - 1/2 (B), i - 1 (D).

All arithmetic is exact (``fractions.Fraction``).

>>> lam = parse_weight("A[3,1]")
>>> pairing(lam, parse_root("e2-e1", lam.kind))
Fraction(-2, 1)
>>> leq(parse_weight("A[1,-1]"), parse_weight("A[]"))
True
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    IllegalRootShape,
    KindMismatch,
    NotComparable,
    ParseError,
    TailMismatch,
)

__all__ = [
    "RootSystemKind", "Weight", "Root", "RootShape", "RootLatticeElement",
    "WeightInterval", "parse_weight", "parse_root", "format_rational",
    "rho_coordinate", "generator_rank_floor", "simple_root", "positive_roots", "pairing",
    "rho_pairing", "shifted_pairing", "difference", "leq", "height",
    "interval", "kostant_partition", "reflect_dot", "roots_below",
]


class RootSystemKind(enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"

    def __str__(self) -> str:
        return self.value


_RHO_OFFSET = {
    RootSystemKind.A: Fraction(0),
    RootSystemKind.B: Fraction(-1, 2),
    RootSystemKind.C: Fraction(0),
    RootSystemKind.D: Fraction(-1),
}


def rho_coordinate(kind: RootSystemKind, i: int) -> Fraction:
    return i + _RHO_OFFSET[kind]


def generator_rank_floor(kind: RootSystemKind) -> int:
    """Smallest rank whose truncation is defined (D needs two coordinates)."""
    return 2 if kind is RootSystemKind.D else 1


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _tail_value(tail, i: int) -> Fraction:
    if tail is None:
        return Fraction(0)
    return tail[0] + tail[1] * i


@dataclass(frozen=True)
class Weight:
    """An element of h* given by an explicit prefix and a tail rule.

    ``tail`` is ``None`` for the zero tail, or ``(a, b)`` meaning
    ``lambda_i = a + b*i`` beyond the prefix.  Instances are canonical:
    prefix entries that agree with the tail are trimmed, so equality and
    hashing compare coordinate functions.
    """

    kind: RootSystemKind
    prefix: tuple = ()
    tail: tuple | None = None
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        prefix = tuple(Fraction(c) for c in self.prefix)
        tail = self.tail
        if tail is not None:
            a, b = Fraction(tail[0]), Fraction(tail[1])
            tail = None if a == 0 and b == 0 else (a, b)
        n = len(prefix)
        while n and prefix[n - 1] == _tail_value(tail, n):
            n -= 1
        object.__setattr__(self, "prefix", prefix[:n])
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "_hash", hash((self.kind, self.prefix, tail)))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Weight):
            return NotImplemented
        return (self._hash == other._hash and self.kind is other.kind
                and self.prefix == other.prefix and self.tail == other.tail)

    @classmethod
    def zero(cls, kind: RootSystemKind) -> Weight:
        return cls(kind)

    @property
    def support(self) -> int:
        """Length of the canonical prefix."""
        return len(self.prefix)

    def coordinate(self, i: int) -> Fraction:
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return _tail_value(self.tail, i)

    def coordinates(self, n: int) -> tuple:
        return tuple(self.coordinate(i) for i in range(1, n + 1))

    def shifted_coordinate(self, i: int) -> Fraction:
        """Coordinate ``i`` of lambda + rho."""
        return self.coordinate(i) + rho_coordinate(self.kind, i)

    def with_coordinates(self, updates: Mapping[int, Fraction]) -> Weight:
        if not updates:
            return self
        n = max(len(self.prefix), max(updates))
        coords = list(self.coordinates(n))
        for i, value in updates.items():
            coords[i - 1] = Fraction(value)
        return Weight(self.kind, tuple(coords), self.tail)

    def translate(self, coords: Sequence) -> Weight:
        """Add a finitely supported epsilon-coordinate vector."""
        return self.with_coordinates(
            {i: self.coordinate(i) + c for i, c in enumerate(coords, 1) if c}
        )

    def __str__(self) -> str:
        body = ",".join(format_rational(c) for c in self.prefix)
        if self.tail is not None:
            a, b = self.tail
            body += f";lin({format_rational(a)},{format_rational(b)})"
        return f"{self.kind.value}[{body}]"


_RATIONAL = r"-?\d+(?:/\d+)?"
_WEIGHT_RE = re.compile(r"^([A-Z])\[(.*)\]$")
_LIN_RE = re.compile(rf"^lin\(({_RATIONAL}),({_RATIONAL})\)$")
_RATIONAL_RE = re.compile(rf"^{_RATIONAL}$")


def _parse_rational(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text):
        raise ParseError(f"bad rational {text!r}")
    if "/" in text and int(text.split("/")[1]) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(text)


def parse_kind(text: str) -> RootSystemKind:
    try:
        return RootSystemKind(text)
    except ValueError:
        raise ParseError(f"unknown root-system kind {text!r}") from None


def parse_weight(text: str) -> Weight:
    """Parse ``KIND '[' coords? (';' tail)? ']'``, e.g. ``A[;lin(0,-2)]``."""
    m = _WEIGHT_RE.match(text.strip())
    if not m:
        raise ParseError(f"malformed weight {text!r}")
    kind = parse_kind(m.group(1))
    body = m.group(2)
    coords_part, sep, tail_part = body.partition(";")
    coords = ()
    if coords_part:
        coords = tuple(_parse_rational(c) for c in coords_part.split(","))
    tail = None
    if sep:
        if tail_part == "zero":
            tail = None
        else:
            lm = _LIN_RE.match(tail_part)
            if not lm:
                raise ParseError(f"malformed tail {tail_part!r}")
            tail = (_parse_rational(lm.group(1)), _parse_rational(lm.group(2)))
    return Weight(kind, coords, tail)


class RootShape(enum.Enum):
    MINUS = "JMinusI"  # e_j - e_i
    PLUS = "JPlusI"  # e_j + e_i
    SHORT = "Short"  # e_i, kind B only
    LONG = "Long"  # 2 e_i, kind C only


_LEGAL_SHAPES = {
    RootSystemKind.A: {RootShape.MINUS},
    RootSystemKind.B: {RootShape.MINUS, RootShape.PLUS, RootShape.SHORT},
    RootSystemKind.C: {RootShape.MINUS, RootShape.PLUS, RootShape.LONG},
    RootSystemKind.D: {RootShape.MINUS, RootShape.PLUS},
}


@dataclass(frozen=True)
class Root:
    """A positive root.  Two-index shapes need ``1 <= i < j``."""

    kind: RootSystemKind
    shape: RootShape
    i: int
    j: int = 0

    def __post_init__(self):
        if self.shape not in _LEGAL_SHAPES[self.kind]:
            raise IllegalRootShape(f"{self.shape.value} is not a root of kind {self.kind}")
        if self.i < 1:
            raise IllegalRootShape("root indices start at 1")
        if self.shape in (RootShape.MINUS, RootShape.PLUS):
            if not self.i < self.j:
                raise IllegalRootShape(f"need i < j, got i={self.i}, j={self.j}")
        elif self.j != 0:
            raise IllegalRootShape("single-index roots take no j")

    def vector(self) -> tuple:
        """Epsilon coordinates as ``((index, coefficient), ...)``."""
        if self.shape is RootShape.MINUS:
            return ((self.i, -1), (self.j, 1))
        if self.shape is RootShape.PLUS:
            return ((self.i, 1), (self.j, 1))
        if self.shape is RootShape.SHORT:
            return ((self.i, 1),)
        return ((self.i, 2),)

    @property
    def top(self) -> int:
        return max(self.i, self.j)

    def __str__(self) -> str:
        if self.shape is RootShape.MINUS:
            return f"e{self.j}-e{self.i}"
        if self.shape is RootShape.PLUS:
            return f"e{self.j}+e{self.i}"
        if self.shape is RootShape.SHORT:
            return f"e{self.i}"
        return f"2e{self.i}"


_ROOT_RE = re.compile(r"^(?:e(\d+)([+-])e(\d+)|(2?)e(\d+))$")


def parse_root(text: str, kind: RootSystemKind) -> Root:
    m = _ROOT_RE.match(text.strip())
    if not m:
        raise ParseError(f"malformed root {text!r}")
    if m.group(1):
        j, i = int(m.group(1)), int(m.group(3))
        shape = RootShape.MINUS if m.group(2) == "-" else RootShape.PLUS
        return Root(kind, shape, i, j)
    shape = RootShape.LONG if m.group(4) else RootShape.SHORT
    return Root(kind, shape, int(m.group(5)))


def _coroot_value(alpha: Root, coord) -> Fraction:
    if alpha.shape is RootShape.MINUS:
        return coord(alpha.j) - coord(alpha.i)
    if alpha.shape is RootShape.PLUS:
        return coord(alpha.j) + coord(alpha.i)
    if alpha.shape is RootShape.SHORT:
        return 2 * coord(alpha.i)
    return coord(alpha.i)


def _check_kind(kind: RootSystemKind, alpha: Root) -> None:
    if alpha.kind is not kind:
        raise IllegalRootShape(f"root {alpha} of kind {alpha.kind} used with kind {kind}")


def pairing(lam: Weight, alpha: Root) -> Fraction:
    """The coroot pairing <lambda, alpha^vee>."""
    _check_kind(lam.kind, alpha)
    return _coroot_value(alpha, lam.coordinate)


def rho_pairing(kind: RootSystemKind, alpha: Root) -> Fraction:
    _check_kind(kind, alpha)
    return _coroot_value(alpha, lambda i: rho_coordinate(kind, i))


def shifted_pairing(lam: Weight, alpha: Root) -> Fraction:
    """(lambda + rho)(h_alpha)."""
    _check_kind(lam.kind, alpha)
    return _coroot_value(alpha, lam.shifted_coordinate)


def simple_root(kind: RootSystemKind, k: int) -> Root:
    if k < 1:
        raise IllegalRootShape(f"simple roots are numbered from 1, got {k}")
    if kind is RootSystemKind.A:
        return Root(kind, RootShape.MINUS, k, k + 1)
    if k >= 2:
        return Root(kind, RootShape.MINUS, k - 1, k)
    if kind is RootSystemKind.B:
        return Root(kind, RootShape.SHORT, 1)
    if kind is RootSystemKind.C:
        return Root(kind, RootShape.LONG, 1)
    return Root(kind, RootShape.PLUS, 1, 2)


@lru_cache(maxsize=None)
def positive_roots(kind: RootSystemKind, n: int) -> tuple:
    """Positive roots of the rank-``n`` truncation (coordinates 1..n)."""
    roots = []
    for j in range(1, n + 1):
        if kind is RootSystemKind.B:
            roots.append(Root(kind, RootShape.SHORT, j))
        elif kind is RootSystemKind.C:
            roots.append(Root(kind, RootShape.LONG, j))
        for i in range(1, j):
            roots.append(Root(kind, RootShape.MINUS, i, j))
            if kind is not RootSystemKind.A:
                roots.append(Root(kind, RootShape.PLUS, i, j))
    return tuple(roots)


@dataclass(frozen=True)
class RootLatticeElement:
    """A finitely supported epsilon-coordinate vector (trailing zeros trimmed)."""

    kind: RootSystemKind
    coords: tuple = ()

    def __post_init__(self):
        coords = [Fraction(c) for c in self.coords]
        while coords and coords[-1] == 0:
            coords.pop()
        object.__setattr__(self, "coords", tuple(coords))

    @classmethod
    def from_simple(cls, kind: RootSystemKind, c: Sequence) -> RootLatticeElement:
        acc: dict[int, Fraction] = {}
        for k, ck in enumerate(c, 1):
            if ck:
                for idx, coeff in simple_root(kind, k).vector():
                    acc[idx] = acc.get(idx, 0) + coeff * ck
        n = max(acc, default=0)
        return cls(kind, tuple(acc.get(i, 0) for i in range(1, n + 1)))

    @classmethod
    def from_root(cls, alpha: Root) -> RootLatticeElement:
        vec = dict(alpha.vector())
        return cls(alpha.kind, tuple(vec.get(i, 0) for i in range(1, alpha.top + 1)))

    def simple_coordinates(self) -> tuple | None:
        """Coefficients on the simple roots, or None outside their rational span.

        Closed forms (beta = self): A: c_k = -sum_{i<=k} beta_i;
        B: c_k = sum_{i>=k} beta_i; C: as B for k >= 2 and c_1 = sum/2;
        D: as B for k >= 3, c_1 = sum/2, c_2 = c_1 - beta_1.
        """
        beta = self.coords
        n = len(beta)
        kind = self.kind
        if kind is RootSystemKind.A:
            if sum(beta) != 0:
                return None
            c, running = [], Fraction(0)
            for b in beta[:-1]:
                running += b
                c.append(-running)
        else:
            tails = [Fraction(0)] * (n + 2)
            for k in range(n, 0, -1):
                tails[k] = tails[k + 1] + beta[k - 1]
            c = tails[1:n + 1]
            if kind is RootSystemKind.C and n:
                c[0] = tails[1] / 2
            elif kind is RootSystemKind.D and n:
                if n == 1:
                    c.append(Fraction(0))
                c[0] = tails[1] / 2
                c[1] = c[0] - beta[0]
        while c and c[-1] == 0:
            c.pop()
        return tuple(c)

    def in_root_lattice(self) -> bool:
        c = self.simple_coordinates()
        return c is not None and all(x.denominator == 1 for x in c)

    def __str__(self) -> str:
        return ",".join(format_rational(c) for c in self.coords)


def difference(mu: Weight, lam: Weight) -> RootLatticeElement:
    """mu - lambda as a finitely supported vector."""
    if mu.kind is not lam.kind:
        raise KindMismatch(f"{mu.kind} vs {lam.kind}")
    if mu.tail != lam.tail:
        raise TailMismatch(f"{mu} - {lam} is not finitely supported")
    n = max(mu.support, lam.support)
    return RootLatticeElement(
        mu.kind, tuple(mu.coordinate(i) - lam.coordinate(i) for i in range(1, n + 1))
    )


def _nonneg_integral(c) -> bool:
    return c is not None and all(x.denominator == 1 and x >= 0 for x in c)


@lru_cache(maxsize=1 << 18)
def leq(lam: Weight, mu: Weight) -> bool:
    """lambda <= mu iff mu - lambda is a nonnegative integral sum of simple roots."""
    return _nonneg_integral(difference(mu, lam).simple_coordinates())


def height(beta: RootLatticeElement) -> Fraction:
    c = beta.simple_coordinates()
    if c is None:
        raise NotComparable(f"{beta} is outside the span of the simple roots")
    return sum(c, Fraction(0))


@dataclass(frozen=True)
class WeightInterval:
    lo: Weight
    hi: Weight
    members: tuple

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self.members)

    def __contains__(self, w) -> bool:
        return w in set(self.members)


@lru_cache(maxsize=1 << 12)
def interval(lam: Weight, nu: Weight) -> WeightInterval:
    """All weights mu with lambda <= mu <= nu, sorted top-down by height.

    Members are lambda + sum d_k alpha_k for 0 <= d <= c, c the simple-root
    coordinates of nu - lambda; since the simple roots are a basis these are
    exactly the weights in between.
    """
    c = difference(nu, lam).simple_coordinates()
    if not _nonneg_integral(c):
        raise NotComparable(f"{lam} is not below {nu}")
    total = sum(int(ck) for ck in c)
    n = max(lam.support, nu.support)
    keyed = []
    for d in product(*(range(int(ck) + 1) for ck in c)):
        mu = lam.translate(RootLatticeElement.from_simple(lam.kind, d).coords)
        keyed.append(((total - sum(d), mu.coordinates(n)), mu))
    keyed.sort(key=lambda pair: pair[0])
    return WeightInterval(lam, nu, tuple(mu for _, mu in keyed))


@lru_cache(maxsize=None)
def _root_table(kind: RootSystemKind, n: int) -> tuple:
    """Pairs (root, simple coordinates padded to length n) for rank n."""
    table = []
    for alpha in positive_roots(kind, n):
        c = RootLatticeElement.from_root(alpha).simple_coordinates()
        table.append((alpha, tuple(int(x) for x in c) + (0,) * (n - len(c))))
    return tuple(table)


def roots_below(kind: RootSystemKind, c: Sequence[int]) -> list:
    """Positive roots alpha with alpha <= sum c_k alpha_k, with their coordinates."""
    n = len(c)
    rank = n + 1 if kind is RootSystemKind.A else max(n, generator_rank_floor(kind))
    out = []
    for alpha, ac in _root_table(kind, rank):
        if any(ac[n:]) or any(a > b for a, b in zip(ac, c)):
            continue
        out.append((alpha, ac[:n]))
    return out


def kostant_partition(kind: RootSystemKind, beta: RootLatticeElement | Sequence) -> int:
    """Number of multisets of positive roots summing to ``beta``."""
    if not isinstance(beta, RootLatticeElement):
        beta = RootLatticeElement(kind, tuple(beta))
    elif beta.kind is not kind:
        raise KindMismatch(f"{beta.kind} vs {kind}")
    c = beta.simple_coordinates()
    if not _nonneg_integral(c):
        return 0
    target = tuple(int(x) for x in c)
    vecs = [ac for _, ac in roots_below(kind, target)]
    return _count_partitions(target, tuple(vecs))


@lru_cache(maxsize=4096)
def _count_partitions(target: tuple, vecs: tuple) -> int:
    memo: dict = {}

    def count(idx: int, rem: tuple) -> int:
        if not any(rem):
            return 1
        if idx == len(vecs):
            return 0
        key = (idx, rem)
        if key in memo:
            return memo[key]
        total = 0
        r = vecs[idx]
        cur = rem
        while all(x >= 0 for x in cur):
            total += count(idx + 1, cur)
            cur = tuple(x - y for x, y in zip(cur, r))
        memo[key] = total
        return total

    return count(0, target)


def reflect_dot(lam: Weight, alpha: Root) -> Weight:
    """s_alpha . lambda = lambda - (lambda + rho)(h_alpha) alpha."""
    k = shifted_pairing(lam, alpha)
    if k == 0:
        return lam
    return lam.with_coordinates({i: lam.coordinate(i) - k * e for i, e in alpha.vector()})


def iter_weights_text(weights: Iterable[Weight]) -> list:
    return [str(w) for w in weights]
