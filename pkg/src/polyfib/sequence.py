"""Generalized Fibonacci sequences s0 = c0, s1 = c1, s(n+1) = a*s(n) + b*s(n-1)."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import rational_to_str

NON_DEGENERATE = "non_degenerate"
DEGENERATE_J1 = "degenerate_j1"
DEGENERATE_J2 = "degenerate_j2"

PRESETS = {
    "fibonacci": (1, 1, 0, 1),
    "lucas": (1, 1, 2, 1),
    "pell": (2, 1, 0, 1),
    "jacobsthal": (1, 2, 1, 0),
}


class InvalidParams(ValueError):
    pass


class ZeroTermError(ZeroDivisionError):
    pass


def exact_isqrt(n: int) -> int | None:
    """Integer square root of n if n is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


@dataclass(frozen=True)
class SeqParams:
    a: int
    b: int
    c0: int
    c1: int
    disc: int = field(init=False)
    disc_sqrt: int | None = field(init=False)

    def __post_init__(self):
        for name in ("a", "b", "c0", "c1"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvalidParams(f"{name} must be an integer, got {v!r}")
        if self.a < 1:
            raise InvalidParams(f"a must be a positive integer (a >= 1), got a={self.a}")
        if self.b < 1:
            raise InvalidParams(f"b must be a positive integer (b >= 1), got b={self.b}")
        if self.c0 == 0 and self.c1 == 0:
            raise InvalidParams("(c0, c1) must not be (0, 0)")
        disc = self.a * self.a + 4 * self.b
        object.__setattr__(self, "disc", disc)
        object.__setattr__(self, "disc_sqrt", exact_isqrt(disc))

    @classmethod
    def preset(cls, name: str) -> SeqParams:
        try:
            return cls(*PRESETS[name.lower()])
        except KeyError:
            raise InvalidParams(f"unknown preset {name!r}") from None

    @property
    def name(self) -> str | None:
        """Preset name when the tuple is one of the four classical sequences."""
        for key, tup in PRESETS.items():
            if tup == (self.a, self.b, self.c0, self.c1):
                return key
        return None

    @property
    def j1(self) -> float:
        return self.a + math.sqrt(self.disc)

    @property
    def j2(self) -> float:
        return self.a - math.sqrt(self.disc)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "c0": self.c0, "c1": self.c1}

    @classmethod
    def from_json(cls, data: dict) -> SeqParams:
        try:
            return cls(*(data[k] for k in ("a", "b", "c0", "c1")))
        except (KeyError, TypeError) as exc:
            raise InvalidParams(f"malformed parameter object: {data!r}") from exc


@dataclass(frozen=True)
class DegeneracyClass:
    kind: str
    ratio_root: Fraction | None = None

    @property
    def degenerate(self) -> bool:
        return self.kind != NON_DEGENERATE

    def to_json(self) -> dict:
        root = None if self.ratio_root is None else rational_to_str(self.ratio_root)
        return {"kind": self.kind, "ratio_root": root}


def terms(params: SeqParams, n_max: int) -> list[int]:
    """s_0 .. s_{n_max} as exact integers."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    out = [params.c0, params.c1]
    a, b = params.a, params.b
    while len(out) <= n_max:
        out.append(a * out[-1] + b * out[-2])
    return out[: n_max + 1]


def binet_float(params: SeqParams, n: int) -> float:
    """Binet-type evaluation of s_n in double precision.

    Diagnostic only: for large n the powers overflow to inf (or raise
    OverflowError from float pow), which is not guarded.
    """
    root = math.sqrt(params.disc)
    j1, j2 = params.a + root, params.a - root
    c0, c1 = params.c0, params.c1
    return ((2 * c1 - j2 * c0) * (j1 / 2) ** n - (2 * c1 - j1 * c0) * (j2 / 2) ** n) / (2 * root)


def classify(params: SeqParams) -> DegeneracyClass:
    t = params.disc_sqrt
    if t is not None:
        a, c0, c1 = params.a, params.c0, params.c1
        if 2 * c1 == (a + t) * c0:
            return DegeneracyClass(DEGENERATE_J1, Fraction(a + t, 2))
        if 2 * c1 == (a - t) * c0:
            return DegeneracyClass(DEGENERATE_J2, Fraction(a - t, 2))
    return DegeneracyClass(NON_DEGENERATE)


def find_zero_terms(params: SeqParams, n_max: int) -> list[int]:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    return [n for n, s in enumerate(terms(params, n_max)) if s == 0]


def ratio_probe(params: SeqParams, n: int) -> float:
    """s_{n+1} / s_n as a float, computed from exact terms."""
    s = terms(params, n + 1)
    if s[n] == 0:
        raise ZeroTermError(f"s_{n} = 0")
    # int/int true division is correctly rounded even for huge operands
    return s[n + 1] / s[n]
