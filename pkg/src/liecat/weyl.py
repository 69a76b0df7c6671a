"""The direct-limit Weyl groups as finitely supported signed permutations.

An element is stored in one-line notation ``perm`` with ``perm[i-1] = w(i)``
(negative entries carry a sign change) and trailing fixed points removed,
so the identity is the empty tuple and equality is structural.

Generators follow the simple-root numbering of :mod:`liecat.rootdata`:

    A:   s_k swaps k and k+1
    B/C: s_1 negates 1, s_k swaps k-1 and k (k >= 2)
    D:   s_1 sends 1 -> -2 and 2 -> -1, s_k swaps k-1 and k (k >= 2)

>>> w = from_word(RootSystemKind.A, (1, 2, 1))
>>> w.perm, length(w), format_word(to_reduced_word(w))
((3, 2, 1), 3, '1.2.1')
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NewType

from .errors import BadGenerator, KindMismatch, ParseError, RankTooSmall
from .rootdata import (
    Root,
    RootShape,
    RootSystemKind,
    Weight,
    rho_coordinate,
    shifted_pairing,
    simple_root,
)

__all__ = [
    "WeylElement", "Word", "identity", "generator", "multiply", "inverse",
    "length", "from_word", "to_reduced_word", "parse_word", "format_word",
    "descent", "right_descents", "left_descents", "bruhat_leq",
    "longest_element", "minimal_rank", "apply_dot", "reflection",
    "reflection_is_integral", "generator_indices", "in_rank",
]

Word = NewType("Word", tuple)


@dataclass(frozen=True)
class WeylElement:
    kind: RootSystemKind
    perm: tuple = ()

    def __post_init__(self):
        perm = tuple(int(x) for x in self.perm)
        n = len(perm)
        while n and perm[n - 1] == n:
            n -= 1
        perm = perm[:n]
        if sorted(abs(x) for x in perm) != list(range(1, n + 1)):
            raise ValueError(f"{perm} is not a signed permutation")
        negatives = sum(1 for x in perm if x < 0)
        if self.kind is RootSystemKind.A and negatives:
            raise ValueError("type A elements carry no sign changes")
        if self.kind is RootSystemKind.D and negatives % 2:
            raise ValueError("type D elements need an even number of sign changes")
        object.__setattr__(self, "perm", perm)

    @property
    def support(self) -> int:
        """Largest index moved (0 for the identity)."""
        return len(self.perm)

    def __call__(self, i: int) -> int:
        """Signed image of a signed index."""
        sign = 1 if i > 0 else -1
        i = abs(i)
        return sign * (self.perm[i - 1] if i <= len(self.perm) else i)

    def __mul__(self, other: WeylElement) -> WeylElement:
        return multiply(self, other)

    def __str__(self) -> str:
        return format_word(to_reduced_word(self))


def identity(kind: RootSystemKind) -> WeylElement:
    return WeylElement(kind)


def generator_indices(kind: RootSystemKind, n: int) -> range:
    """Simple generators of the rank-``n`` truncation W_n."""
    return range(1, n) if kind is RootSystemKind.A else range(1, n + 1)


@lru_cache(maxsize=None)
def generator(kind: RootSystemKind, k: int) -> WeylElement:
    if k < 1:
        raise BadGenerator(f"generator indices start at 1, got {k}")
    if kind is RootSystemKind.A:
        perm = list(range(1, k + 2))
        perm[k - 1], perm[k] = k + 1, k
    elif k >= 2:
        perm = list(range(1, k + 1))
        perm[k - 2], perm[k - 1] = k, k - 1
    elif kind is RootSystemKind.D:
        perm = [-2, -1]
    else:
        perm = [-1]
    return WeylElement(kind, tuple(perm))


def _same_kind(u: WeylElement, v: WeylElement) -> None:
    if u.kind is not v.kind:
        raise KindMismatch(f"{u.kind} vs {v.kind}")


def multiply(u: WeylElement, v: WeylElement) -> WeylElement:
    """The composite u o v."""
    _same_kind(u, v)
    n = max(u.support, v.support)
    return WeylElement(u.kind, tuple(u(v(i)) for i in range(1, n + 1)))


def inverse(w: WeylElement) -> WeylElement:
    perm = [0] * w.support
    for i, image in enumerate(w.perm, 1):
        perm[abs(image) - 1] = i if image > 0 else -i
    return WeylElement(w.kind, tuple(perm))


@lru_cache(maxsize=1 << 16)
def length(w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    perm = w.perm
    signed = w.kind is not RootSystemKind.A
    total = 0
    for j, b in enumerate(perm):
        if signed and b < 0:
            if w.kind is not RootSystemKind.D:
                total += 1
        for a in perm[:j]:
            if abs(b) > abs(a):
                total += (b < 0) * (1 + signed)
            else:
                total += (a > 0) + (signed and a < 0)
    return total


def from_word(kind: RootSystemKind, word: Iterable[int]) -> WeylElement:
    w = identity(kind)
    for k in word:
        w = multiply(w, generator(kind, k))
    return w


def _root_image_negative(w: WeylElement, alpha: Root) -> bool:
    coeffs: dict[int, int] = {}
    for idx, c in alpha.vector():
        image = w(idx)
        coeffs[abs(image)] = coeffs.get(abs(image), 0) + (c if image > 0 else -c)
    top = max(i for i, c in coeffs.items() if c)
    return coeffs[top] < 0


def descent(w: WeylElement, k: int, side: str = "right") -> bool:
    """Whether s_k is a left or right descent of ``w``."""
    if k < 1:
        raise BadGenerator(f"generator indices start at 1, got {k}")
    if side == "right":
        return _root_image_negative(w, simple_root(w.kind, k))
    if side == "left":
        return _root_image_negative(inverse(w), simple_root(w.kind, k))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


@lru_cache(maxsize=1 << 16)
def right_descents(w: WeylElement) -> tuple:
    return tuple(k for k in range(1, w.support + 1) if descent(w, k, "right"))


@lru_cache(maxsize=1 << 16)
def left_descents(w: WeylElement) -> tuple:
    return right_descents(inverse(w))


@lru_cache(maxsize=1 << 16)
def to_reduced_word(w: WeylElement) -> Word:
    """Reduced word obtained by repeatedly stripping the smallest right descent."""
    letters = []
    while w.perm:
        k = right_descents(w)[0]
        letters.append(k)
        w = multiply(w, generator(w.kind, k))
    return Word(tuple(reversed(letters)))


def parse_word(text: str) -> Word:
    text = text.strip()
    if text == "e":
        return Word(())
    try:
        letters = tuple(int(part) for part in text.split("."))
    except ValueError:
        raise ParseError(f"malformed word {text!r}") from None
    if any(k < 1 for k in letters):
        raise BadGenerator(f"generator indices start at 1 in {text!r}")
    return Word(letters)


def format_word(word: Iterable[int]) -> str:
    word = tuple(word)
    return ".".join(map(str, word)) if word else "e"


@lru_cache(maxsize=1 << 18)
def bruhat_leq(x: WeylElement, y: WeylElement) -> bool:
    """x <= y in Bruhat order.

    Walks a reduced word of ``y`` from the right, deleting the letter from
    ``x`` whenever it is also a descent of ``x`` (the subword property in
    its lifting form).
    """
    _same_kind(x, y)
    while y.perm:
        if length(x) > length(y):
            return False
        k = right_descents(y)[0]
        s = generator(y.kind, k)
        if descent(x, k, "right"):
            x = multiply(x, s)
        y = multiply(y, s)
    return not x.perm


def longest_element(kind: RootSystemKind, n: int) -> WeylElement:
    """The longest element of W_n.

    For D with n odd, -1 is not in W_n; the longest element negates
    indices 2..n and fixes 1.
    """
    floor = 2 if kind is RootSystemKind.D else 1
    if n < floor:
        raise RankTooSmall(f"rank {n} is below {floor} for kind {kind}")
    if kind is RootSystemKind.A:
        return WeylElement(kind, tuple(range(n, 0, -1)))
    if kind is RootSystemKind.D and n % 2:
        return WeylElement(kind, (1,) + tuple(-i for i in range(2, n + 1)))
    return WeylElement(kind, tuple(-i for i in range(1, n + 1)))


def minimal_rank(x: WeylElement, y: WeylElement) -> int:
    _same_kind(x, y)
    floor = 2 if x.kind is RootSystemKind.D else 1
    return max(x.support, y.support, floor)


def in_rank(w: WeylElement, n: int) -> bool:
    return w.support <= n


def apply_dot(w: WeylElement, lam: Weight) -> Weight:
    """w . lambda = w(lambda + rho) - rho."""
    if w.kind is not lam.kind:
        raise KindMismatch(f"{w.kind} vs {lam.kind}")
    updates = {}
    for i, image in enumerate(w.perm, 1):
        target = abs(image)
        shifted = lam.shifted_coordinate(i)
        updates[target] = (shifted if image > 0 else -shifted) - rho_coordinate(w.kind, target)
    return lam.with_coordinates(updates)


def reflection(alpha: Root) -> WeylElement:
    """The reflection s_alpha as a signed permutation."""
    i, j = alpha.i, alpha.j
    n = max(i, j)
    perm = list(range(1, n + 1))
    if alpha.shape is RootShape.MINUS:
        perm[i - 1], perm[j - 1] = j, i
    elif alpha.shape is RootShape.PLUS:
        perm[i - 1], perm[j - 1] = -j, -i
    else:
        perm[i - 1] = -i
    return WeylElement(alpha.kind, tuple(perm))


def reflection_is_integral(lam: Weight, alpha: Root) -> bool:
    """Whether s_alpha lies in the integral Weyl group of lambda."""
    return Fraction(shifted_pairing(lam, alpha)).denominator == 1
