"""Integer Laurent polynomials in one variable q, stored densely.

>>> p = LaurentPolynomial.from_coefficients([1, 1])
>>> str(p), p(1), str(p * p)
('1 + q', 2, '1 + 2q + q^2')
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class LaurentPolynomial:
    """sum_k coeffs[k] q^(low + k); zero is ``low=0, coeffs=()``."""

    low: int = 0
    coeffs: tuple = ()

    def __post_init__(self):
        coeffs = list(int(c) for c in self.coeffs)
        low = self.low
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        coeffs = coeffs[start:]
        object.__setattr__(self, "low", low + start if coeffs else 0)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int]) -> LaurentPolynomial:
        """Constant term first."""
        return cls(0, tuple(coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> LaurentPolynomial:
        return cls(degree, (coeff,))

    @classmethod
    def constant(cls, c: int) -> LaurentPolynomial:
        return cls(0, (c,))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        return self.low + len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, k: int) -> int:
        i = k - self.low
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def coefficient_list(self) -> list:
        """Coefficients of q^0..q^deg; requires no negative powers."""
        if self.low < 0:
            raise ValueError("negative powers present")
        return [0] * self.low + list(self.coeffs)

    def __add__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        low = min(self.low, other.low)
        high = max(self.degree, other.degree)
        return LaurentPolynomial(
            low, tuple(self.coefficient(k) + other.coefficient(k) for k in range(low, high + 1))
        )

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.low, tuple(-c for c in self.coeffs))

    def __sub__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        return self + (-other)

    def __mul__(self, other) -> LaurentPolynomial:
        if isinstance(other, int):
            return LaurentPolynomial(self.low, tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return LaurentPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPolynomial(self.low + other.low, tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentPolynomial:
        """Multiply by q^k."""
        return LaurentPolynomial(self.low + k, self.coeffs) if self.coeffs else self

    def bar(self) -> LaurentPolynomial:
        """q -> q^{-1}."""
        if not self.coeffs:
            return self
        return LaurentPolynomial(-self.degree, tuple(reversed(self.coeffs)))

    def truncate_above(self, k: int) -> LaurentPolynomial:
        """Keep only the terms of degree <= k."""
        n = max(0, k - self.low + 1)
        return LaurentPolynomial(self.low, self.coeffs[:n])

    def evaluate(self, q):
        if q == 1:
            return sum(self.coeffs)
        return sum(c * q ** (self.low + i) for i, c in enumerate(self.coeffs))

    __call__ = evaluate

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            k = self.low + i
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial.constant(1)
Q = LaurentPolynomial.monomial(1)
