"""Exact scalars and dense univariate polynomials over the rationals.

Scalars are ``fractions.Fraction``; they are always stored reduced with a
positive denominator, which is exactly the canonical form we need.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "Poly",
    "as_rational",
    "binomial",
    "poly_eval",
    "poly_shift",
    "rational_to_str",
    "rational_from_str",
]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and "num/den" strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rational_from_str(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rational_to_str(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_from_str(text: str) -> Fraction:
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial needs nonnegative arguments")
    return comb(n, k)


class Poly:
    """Immutable dense polynomial; ``coeffs[i]`` is the coefficient of x**i.

    Trailing zeros are stripped on construction so the zero polynomial has
    an empty coefficient tuple and ``==`` is mathematical equality.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def monomial(cls, d: int, c=1) -> Poly:
        return cls([0] * d + [c])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly([{', '.join(rational_to_str(c) for c in self.coeffs)}])"

    def __call__(self, x) -> Fraction:
        return poly_eval(self, x)

    @staticmethod
    def _coerce(other) -> Poly:
        if isinstance(other, Poly):
            return other
        return Poly([as_rational(other)])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> Poly:
        c = as_rational(c)
        return Poly(c * a for a in self.coeffs)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    def __rmul__(self, other):
        return self.scale(other)

    def shift(self, t) -> Poly:
        return poly_shift(self, t)

    def to_json(self) -> list[str]:
        return [rational_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> Poly:
        if not isinstance(data, (list, tuple)):
            raise ValueError("polynomial must be a JSON array of coefficients")
        return cls(as_rational(c) for c in data)


def poly_eval(p: Poly, x) -> Fraction:
    """Horner evaluation, exact."""
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_shift(p: Poly, t) -> Poly:
    """Return q with q(x) = p(x + t), expanded binomially."""
    t = as_rational(t)
    n = len(p.coeffs)
    out = [Fraction(0)] * n
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        # c * (x + t)^i = sum_k C(i, k) t^(i-k) x^k
        for k in range(i + 1):
            out[k] += c * comb(i, k) * t ** (i - k)
    return Poly(out)
