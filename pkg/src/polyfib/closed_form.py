"""Closed-form triples (F, G, H) with 2*sum_{k<=n} P(k) s_{k-1} = F(n)s_{n+1} + G(n)s_n + H(n).

For a monomial weight x^d the coefficients of F solve an upper triangular
system whose diagonal is a+b-1; G and H follow from F. Arbitrary weights
are handled by linearity.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exact import Poly, binomial, rational_to_str
from .sequence import SeqParams, classify

MAX_DEGREE = 64


class SingularMatrixError(ArithmeticError):
    pass


class NonDegenerateError(ValueError):
    """Raised when a triple family is requested for a sequence whose triple is unique."""


@dataclass(frozen=True)
class UpperTriangular:
    """Square upper triangular matrix; ``entries`` is 0-based, ``entry`` is 1-based."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError("matrix must be square")
            if any(row[j] != 0 for j in range(i)):
                raise ValueError("matrix must be zero below the diagonal")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i - 1][j - 1]

    def diagonal(self) -> list[Fraction]:
        return [self.entries[i][i] for i in range(self.dim)]

    def determinant(self) -> Fraction:
        det = Fraction(1)
        for v in self.diagonal():
            det *= v
        return det

    def matvec(self, x: Sequence[Fraction]) -> list[Fraction]:
        return [sum((row[j] * x[j] for j in range(self.dim)), Fraction(0)) for row in self.entries]

    def to_json(self) -> list[list[str]]:
        return [[rational_to_str(v) for v in row] for row in self.entries]


@dataclass(frozen=True)
class CoefficientTuple:
    d: int
    values: tuple[Fraction, ...]


@dataclass(frozen=True)
class ClosedFormTriple:
    F: Poly
    G: Poly
    H: Poly
    params: SeqParams
    weight: Poly

    def components(self) -> tuple[Poly, Poly, Poly]:
        return self.F, self.G, self.H

    def rhs(self, n: int, s_next: int, s_cur: int) -> Fraction:
        return self.F(n) * s_next + self.G(n) * s_cur + self.H(n)

    def __add__(self, other: ClosedFormTriple) -> ClosedFormTriple:
        if other.params != self.params:
            raise ValueError("cannot combine triples for different sequences")
        return ClosedFormTriple(self.F + other.F, self.G + other.G, self.H + other.H,
                                self.params, self.weight + other.weight)

    def scale(self, c) -> ClosedFormTriple:
        return ClosedFormTriple(self.F.scale(c), self.G.scale(c), self.H.scale(c),
                                self.params, self.weight.scale(c))

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "weight": self.weight.to_json(),
            "F": self.F.to_json(),
            "G": self.G.to_json(),
            "H": self.H.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> ClosedFormTriple:
        if not isinstance(data, dict):
            raise ValueError("triple must be a JSON object")
        try:
            return cls(
                F=Poly.from_json(data["F"]),
                G=Poly.from_json(data["G"]),
                H=Poly.from_json(data["H"]),
                params=SeqParams.from_json(data["params"]),
                weight=Poly.from_json(data["weight"]),
            )
        except KeyError as exc:
            raise ValueError(f"triple JSON is missing field {exc}") from None


def zero_triple(params: SeqParams) -> ClosedFormTriple:
    return ClosedFormTriple(Poly(), Poly(), Poly(), params, Poly())


def _check_degree(d: int):
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d > MAX_DEGREE:
        raise ValueError(f"degree {d} exceeds the supported maximum {MAX_DEGREE}")


def build_matrix_general(d: int, a: int, b: int) -> UpperTriangular:
    """B_d: diagonal a+b-1, entry (2^(j-i) b + a) C(j-1, i-1) above it (1-based i, j)."""
    _check_degree(d)
    n = d + 1
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i > j:
                row.append(Fraction(0))
            elif i == j:
                row.append(Fraction(a + b - 1))
            else:
                row.append(Fraction((2 ** (j - i) * b + a) * binomial(j - 1, i - 1)))
        rows.append(tuple(row))
    return UpperTriangular(tuple(rows))


def build_matrix_pell(d: int) -> UpperTriangular:
    """A_d: diagonal 2, entry (2^(j-i) + 2) C(j-1, i-1) above it (1-based i, j)."""
    _check_degree(d)
    n = d + 1
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i > j:
                row.append(Fraction(0))
            elif i == j:
                row.append(Fraction(2))
            else:
                row.append(Fraction((2 ** (j - i) + 2) * binomial(j - 1, i - 1)))
        rows.append(tuple(row))
    return UpperTriangular(tuple(rows))


def rhs_vector(d: int) -> list[Fraction]:
    _check_degree(d)
    return [Fraction(2 * binomial(d, k) * 2 ** (d - k)) for k in range(d + 1)]


def solve_coefficients(m: UpperTriangular, rhs: Sequence) -> CoefficientTuple:
    """Back substitution from the last row upward."""
    n = m.dim
    if len(rhs) != n:
        raise ValueError(f"rhs has length {len(rhs)}, matrix has dimension {n}")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        pivot = m.entries[i][i]
        if pivot == 0:
            raise SingularMatrixError(f"zero diagonal entry at row {i + 1}")
        acc = Fraction(rhs[i])
        for j in range(i + 1, n):
            acc -= m.entries[i][j] * x[j]
        x[i] = acc / pivot
    return CoefficientTuple(n - 1, tuple(x))


@lru_cache(maxsize=1024)
def _coefficients(d: int, a: int, b: int) -> CoefficientTuple:
    return solve_coefficients(build_matrix_general(d, a, b), rhs_vector(d))


def coefficient_tuple(d: int, params: SeqParams) -> CoefficientTuple:
    return _coefficients(d, params.a, params.b)


def monomial_triple(d: int, params: SeqParams) -> ClosedFormTriple:
    a, b, c0, c1 = params.a, params.b, params.c0, params.c1
    coeffs = coefficient_tuple(d, params).values
    F = Poly(coeffs)
    G = F.shift(1).scale(b) - Poly.monomial(d, 2).shift(1)
    total = sum(coeffs, Fraction(0))
    weighted = sum((2 ** i * v for i, v in enumerate(coeffs)), Fraction(0))
    H = Poly.constant(2 * c0 + 2 ** (d + 1) * c1 - (a * c1 + b * c0) * total - b * c1 * weighted)
    return ClosedFormTriple(F, G, H, params, Poly.monomial(d))


def general_triple(P: Poly, params: SeqParams) -> ClosedFormTriple:
    out = zero_triple(params)
    for d, coeff in enumerate(P.coeffs):
        if coeff:
            out = out + monomial_triple(d, params).scale(coeff)
    return out


def family_sample(P: Poly, params: SeqParams, free: Poly) -> ClosedFormTriple:
    """Member of the one-parameter triple family with F = ``free``.

    Only defined for degenerate sequences, where s_{n+1} = r*s_n with r the
    rational ratio root; then (free, G* + r*(F* - free), H*) works for any free.
    """
    cls = classify(params)
    if not cls.degenerate:
        raise NonDegenerateError(
            "sequence is non-degenerate: the closed-form triple is unique, no family exists")
    r = cls.ratio_root
    base = general_triple(P, params)
    G = base.G + (base.F - free).scale(r)
    return ClosedFormTriple(free, G, base.H, params, P)
