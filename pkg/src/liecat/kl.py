"""Kazhdan-Lusztig polynomials of the finite truncations W_n.

P_{x,w} is computed by the right-descent recursion.  For s a right descent
of w with v = ws, after replacing x by the larger of x and xs,

    P_{x,w} = P_{xs,v} + q P_{x,v}
              - sum_{x <= z < v, zs < z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}

Bruhat intervals are enumerated by walking lower covers downward from the
top element with the reflections of the ambient rank.

Results are kept in a :class:`KLCache`, keyed by reduced words.  The cache
may be backed by an append-only text file with lines ``KIND x y : c0 c1 ..``.

>>> from liecat.rootdata import RootSystemKind
>>> from liecat.weyl import from_word
>>> A = RootSystemKind.A
>>> str(kl_poly(A, from_word(A, [2]), from_word(A, [2, 1, 3, 2]), KLCache()))
'1 + q'
"""

from __future__ import annotations

import logging
import os
import threading
from functools import lru_cache
from pathlib import Path

from .errors import KindMismatch
from .laurent import ONE, ZERO, LaurentPolynomial
from .rootdata import RootSystemKind, positive_roots
from .weyl import (
    WeylElement,
    bruhat_leq,
    format_word,
    generator,
    left_descents,
    length,
    minimal_rank,
    multiply,
    parse_word,
    from_word,
    reflection,
    right_descents,
    to_reduced_word,
)

__all__ = [
    "KLCache", "kl_poly", "mu_coeff", "stabilization_check",
    "inverse_kl_at_one", "bruhat_interval", "default_cache", "ENV_VAR",
]

log = logging.getLogger(__name__)

ENV_VAR = "LIECAT_KL_CACHE"


def _key(x: WeylElement, y: WeylElement) -> tuple:
    return (x.kind.value, format_word(to_reduced_word(x)), format_word(to_reduced_word(y)))


class KLCache:
    """Memo table for KL polynomials with optional append-only disk backing.

    Reads take no lock; writes are serialized.  Two threads computing the
    same entry store the same value, so the race is harmless.
    """

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else None
        self._store: dict[tuple, LaurentPolynomial] = {}
        self._lock = threading.Lock()
        self._loaded = self.path is None

    @classmethod
    def from_env(cls) -> KLCache:
        return cls(os.environ.get(ENV_VAR) or None)

    def __len__(self) -> int:
        self._ensure_loaded()
        return len(self._store)

    def _ensure_loaded(self) -> None:
        if self._loaded:
            return
        with self._lock:
            if self._loaded:
                return
            if self.path.exists():
                with open(self.path, encoding="utf-8") as fh:
                    for lineno, line in enumerate(fh, 1):
                        entry = _parse_line(line)
                        if entry is None:
                            if line.strip():
                                log.warning("%s:%d: skipping malformed KL cache line", self.path, lineno)
                            continue
                        self._store.setdefault(*entry)
            self._loaded = True

    def get(self, x: WeylElement, y: WeylElement) -> LaurentPolynomial | None:
        self._ensure_loaded()
        return self._store.get(_key(x, y))

    def put(self, x: WeylElement, y: WeylElement, value: LaurentPolynomial) -> None:
        self._ensure_loaded()
        key = _key(x, y)
        with self._lock:
            if key in self._store:
                return
            self._store[key] = value
            if self.path is not None:
                with open(self.path, "a", encoding="utf-8") as fh:
                    fh.write(_format_line(key, value))

    def items(self):
        self._ensure_loaded()
        return sorted(self._store.items())


def _format_line(key: tuple, value: LaurentPolynomial) -> str:
    kind, xw, yw = key
    coeffs = " ".join(map(str, value.coefficient_list())) or "0"
    return f"{kind} {xw} {yw} : {coeffs}\n"


def _parse_line(line: str):
    try:
        head, _, tail = line.partition(" : ")
        kind, xw, yw = head.split()
        kind = RootSystemKind(kind)
        x = from_word(kind, parse_word(xw))
        y = from_word(kind, parse_word(yw))
        coeffs = [int(c) for c in tail.split()]
    except Exception:
        return None
    if not coeffs or not bruhat_leq(x, y) and any(coeffs):
        return None
    return _key(x, y), LaurentPolynomial.from_coefficients(coeffs)


_default_cache: KLCache | None = None


def default_cache() -> KLCache:
    """Process-wide cache, backed by ``$LIECAT_KL_CACHE`` when set."""
    global _default_cache
    if _default_cache is None:
        _default_cache = KLCache.from_env()
    return _default_cache


def _check(x: WeylElement, y: WeylElement) -> None:
    if x.kind is not y.kind:
        raise KindMismatch(f"{x.kind} vs {y.kind}")


@lru_cache(maxsize=None)
def _reflections(kind: RootSystemKind, n: int) -> tuple:
    return tuple(reflection(a) for a in positive_roots(kind, n))


@lru_cache(maxsize=1 << 14)
def _lower_covers(z: WeylElement, rank: int) -> tuple:
    target = length(z) - 1
    covers = []
    for t in _reflections(z.kind, rank):
        zt = multiply(z, t)
        if length(zt) == target:
            covers.append(zt)
    return tuple(covers)


def bruhat_interval(x: WeylElement, y: WeylElement, rank: int | None = None) -> list:
    """All z with x <= z <= y, found via lower covers from y in W_rank."""
    _check(x, y)
    if not bruhat_leq(x, y):
        return []
    if rank is None:
        rank = minimal_rank(x, y)
    seen = {y}
    frontier = [y]
    while frontier:
        nxt = []
        for z in frontier:
            for c in _lower_covers(z, rank):
                if c not in seen and bruhat_leq(x, c):
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return sorted(seen, key=lambda z: (length(z), z.perm))


class _Engine:
    def __init__(self, cache: KLCache, rank_floor: int = 0):
        self.cache = cache
        self.rank_floor = rank_floor

    def rank(self, x: WeylElement, y: WeylElement) -> int:
        return max(minimal_rank(x, y), self.rank_floor)

    def poly(self, x: WeylElement, w: WeylElement) -> LaurentPolynomial:
        if x == w:
            return ONE
        if not bruhat_leq(x, w):
            return ZERO
        x = self._normalize(x, w)
        if x == w:
            return ONE
        hit = self.cache.get(x, w)
        if hit is not None:
            return hit
        value = self._compute(x, w)
        self.cache.put(x, w, value)
        return value

    def mu(self, z: WeylElement, v: WeylElement) -> int:
        d = length(v) - length(z)
        if d % 2 == 0 or not bruhat_leq(z, v):
            return 0
        return self.poly(z, v).coefficient((d - 1) // 2)

    @staticmethod
    def _normalize(x: WeylElement, w: WeylElement) -> WeylElement:
        # P_{x,w} = P_{xs,w} = P_{sx,w} for s a descent of w on that side.
        changed = True
        while changed:
            changed = False
            for k in right_descents(w):
                s = generator(w.kind, k)
                if k not in right_descents(x):
                    x = multiply(x, s)
                    changed = True
            for k in left_descents(w):
                s = generator(w.kind, k)
                if k not in left_descents(x):
                    x = multiply(s, x)
                    changed = True
        return x

    def _compute(self, x: WeylElement, w: WeylElement) -> LaurentPolynomial:
        k = right_descents(w)[0]
        s = generator(w.kind, k)
        v = multiply(w, s)
        xs = multiply(x, s)
        result = self.poly(xs, v) + self.poly(x, v).shift(1)
        lw = length(w)
        lv = lw - 1
        for z in bruhat_interval(x, v, self.rank(x, v)):
            if z == v or (lv - length(z)) % 2 == 0 or k not in right_descents(z):
                continue
            m = self.mu(z, v)
            if m:
                result = result - self.poly(x, z).shift((lw - length(z)) // 2) * m
        return result


def kl_poly(kind: RootSystemKind, x: WeylElement, y: WeylElement,
            cache: KLCache | None = None) -> LaurentPolynomial:
    """P_{x,y}(q); zero unless x <= y in Bruhat order."""
    _check(x, y)
    if x.kind is not kind:
        raise KindMismatch(f"{x.kind} vs {kind}")
    return _Engine(cache if cache is not None else default_cache()).poly(x, y)


def mu_coeff(kind: RootSystemKind, x: WeylElement, y: WeylElement,
             cache: KLCache | None = None) -> int:
    """Coefficient of q^{(l(y)-l(x)-1)/2} in P_{x,y}; 0 for even length gaps."""
    _check(x, y)
    if x.kind is not kind:
        raise KindMismatch(f"{x.kind} vs {kind}")
    return _Engine(cache if cache is not None else default_cache()).mu(x, y)


def stabilization_check(kind: RootSystemKind, x: WeylElement, y: WeylElement,
                        extra_ranks: int = 1, cache: KLCache | None = None) -> bool:
    """Recompute P_{x,y} inside W_m, ..., W_{m+extra_ranks} and compare.

    Each rank uses a private memo table so that no value is shared between
    the computations being compared.
    """
    _check(x, y)
    if x.kind is not kind:
        raise KindMismatch(f"{x.kind} vs {kind}")
    if extra_ranks < 1:
        raise ValueError("extra_ranks must be at least 1")
    m = minimal_rank(x, y)
    values = {_Engine(KLCache(), rank_floor=n).poly(x, y) for n in range(m, m + extra_ranks + 1)}
    if cache is not None and len(values) == 1:
        reference = kl_poly(kind, x, y, cache)
        values.add(reference)
    return len(values) == 1


def inverse_kl_at_one(kind: RootSystemKind, x: WeylElement, y: WeylElement,
                      cache: KLCache | None = None) -> int:
    """(-1)^{l(x)-l(y)} P_{y,x}(1) when y <= x, else 0.

    With an antidominant regular nu this is the coefficient of ch M(y.nu)
    in ch L(x.nu).
    """
    _check(x, y)
    if not bruhat_leq(y, x):
        return 0
    sign = -1 if (length(x) - length(y)) % 2 else 1
    return sign * kl_poly(kind, y, x, cache)(1)
