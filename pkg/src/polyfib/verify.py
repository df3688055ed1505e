"""Brute-force checking and independent reconstruction of closed-form triples."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .closed_form import ClosedFormTriple
from .exact import Poly, rational_to_str
from .sequence import SeqParams, terms

UNIQUE = "unique_solution"
RANK_DEFICIENT = "rank_deficient"


class InconsistentSystemError(ArithmeticError):
    pass


@dataclass(frozen=True)
class VerificationReport:
    checked_n_max: int
    ok: bool
    first_failure: tuple[int, Fraction, Fraction] | None = None

    def to_json(self) -> dict:
        failure = None
        if self.first_failure is not None:
            n, lhs, rhs = self.first_failure
            failure = {"n": n, "lhs": rational_to_str(lhs), "rhs": rational_to_str(rhs)}
        return {"n_max": self.checked_n_max, "ok": self.ok, "first_failure": failure}


@dataclass(frozen=True)
class ReconstructionResult:
    status: str
    triple: ClosedFormTriple | None = None


def brute_force_sums(P: Poly, params: SeqParams, n_max: int) -> list[Fraction]:
    """[2*sum_{k=1..n} P(k) s_{k-1} for n = 0..n_max]; index 0 is the empty sum."""
    s = terms(params, n_max)
    out = [Fraction(0)]
    acc = Fraction(0)
    for k in range(1, n_max + 1):
        acc += 2 * P(k) * s[k - 1]
        out.append(acc)
    return out


def brute_force_sum(P: Poly, params: SeqParams, n: int) -> Fraction:
    return brute_force_sums(P, params, n)[n]


def verify_triple(t: ClosedFormTriple, n_max: int) -> VerificationReport:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    s = terms(t.params, n_max + 1)
    lhs = Fraction(0)
    for n in range(1, n_max + 1):
        lhs += 2 * t.weight(n) * s[n - 1]
        rhs = t.F(n) * s[n + 1] + t.G(n) * s[n] + t.H(n)
        if lhs != rhs:
            return VerificationReport(n_max, False, (n, lhs, rhs))
    return VerificationReport(n_max, True)


def _row_reduce(rows: list[list[Fraction]], n_cols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of an augmented matrix, pivoting on the first
    ``n_cols`` columns. Returns (matrix, pivot columns)."""
    m = [row[:] for row in rows]
    pivots = []
    r = 0
    for c in range(n_cols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def reconstruct_triple(P: Poly, params: SeqParams, deg_bound: int) -> ReconstructionResult:
    """Solve for (F, G, H) of degree <= deg_bound from sampled identity values alone.

    Uses 3*deg_bound + 6 equations for 3*(deg_bound + 1) unknowns, so a
    rank-deficient answer reflects genuine non-uniqueness, not undersampling.
    """
    if P.degree is not None and deg_bound < P.degree:
        raise ValueError("deg_bound must be at least degree(P)")
    width = deg_bound + 1
    n_eq = 3 * deg_bound + 6
    s = terms(params, n_eq + 1)
    sums = brute_force_sums(P, params, n_eq)
    rows = []
    for n in range(1, n_eq + 1):
        powers = [Fraction(n) ** i for i in range(width)]
        row = [p * s[n + 1] for p in powers] + [p * s[n] for p in powers] + powers
        rows.append(row + [sums[n]])
    n_unknowns = 3 * width
    reduced, pivots = _row_reduce(rows, n_unknowns)
    rank = len(pivots)
    for row in reduced[rank:]:
        if row[-1] != 0:
            raise InconsistentSystemError("no polynomial triple fits the sampled sums")
    if rank < n_unknowns:
        return ReconstructionResult(RANK_DEFICIENT)
    sol = [reduced[i][-1] for i in range(rank)]
    triple = ClosedFormTriple(
        Poly(sol[:width]), Poly(sol[width:2 * width]), Poly(sol[2 * width:]), params, P)
    return ReconstructionResult(UNIQUE, triple)


class VerificationError(AssertionError):
    """An identity failed its brute-force check; signals an internal bug."""

    def __init__(self, triple: ClosedFormTriple, report: VerificationReport):
        n, lhs, rhs = report.first_failure
        super().__init__(f"identity fails at n={n}: lhs={lhs}, rhs={rhs}")
        self.triple = triple
        self.report = report
