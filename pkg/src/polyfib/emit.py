"""Polynomial-expression parsing and identity rendering (LaTeX, text, JSON).

Input grammar (whitespace-insensitive)::

    expr  := sign? term (("+" | "-") term)*
    term  := coeff? "*"? var ("^" uint)? | coeff
    coeff := uint ("/" uint)?
    var   := letter            (only the configured variable is accepted)
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .closed_form import ClosedFormTriple, monomial_triple
from .exact import Poly
from .sequence import SeqParams
from .verify import VerificationError, verify_triple

FORMATS = ("latex", "text", "json")

SYMBOLS = {"fibonacci": "F", "lucas": "L", "pell": "P", "jacobsthal": "J"}

TABLE_GATE_N = 100


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnsupportedExpression(ParseError):
    pass


@dataclass(frozen=True)
class PolyExpr:
    source: str
    parsed: Poly
    variable: str = "k"

    @classmethod
    def parse(cls, source: str, variable: str = "k") -> PolyExpr:
        return cls(source, parse_poly(source, variable), variable)

    def canonical(self) -> str:
        return poly_text(self.parsed, self.variable)


class _Parser:
    def __init__(self, text: str, variable: str):
        # unicode minus shows up when people paste from typeset output
        self.text = text.replace("−", "-")
        self.var = variable
        self.pos = 0

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def uint(self) -> int:
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected an unsigned integer", start)
        return int(self.text[start:self.pos])

    def parse(self) -> Poly:
        if not self.peek():
            raise ParseError("empty expression", self.pos)
        out: dict[int, Fraction] = {}
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.take() == "-" else 1
        while True:
            power, coeff = self.term()
            out[power] = out.get(power, Fraction(0)) + sign * coeff
            ch = self.peek()
            if not ch:
                break
            if ch not in "+-":
                raise ParseError(f"unexpected character {ch!r}", self.pos)
            sign = -1 if self.take() == "-" else 1
        size = max(out) + 1
        return Poly(out.get(i, 0) for i in range(size))

    def term(self) -> tuple[int, Fraction]:
        ch = self.peek()
        coeff = None
        if ch.isdigit():
            num = self.uint()
            den = 1
            if self.peek() == "/":
                self.take()
                at = self.pos
                den = self.uint()
                if den == 0:
                    raise ParseError("zero denominator", at)
            coeff = Fraction(num, den)
            if self.peek() == "*":
                self.take()
                if not self.peek().isalpha():
                    raise ParseError("expected a variable after '*'", self.pos)
        ch = self.peek()
        if ch.isalpha():
            if ch != self.var:
                raise UnsupportedExpression(
                    f"unsupported variable {ch!r} (expected {self.var!r})", self.pos)
            self.take()
            power = 1
            if self.peek() == "^":
                self.take()
                nxt = self.peek()
                if nxt in "-+" or not nxt.isdigit():
                    raise UnsupportedExpression("exponent must be a nonnegative integer", self.pos)
                power = self.uint()
                if self.peek() in (".", "/"):
                    raise UnsupportedExpression("exponent must be a nonnegative integer", self.pos)
            return power, Fraction(1) if coeff is None else coeff
        if coeff is None:
            raise ParseError("expected a coefficient or variable" if ch else "unexpected end of input",
                             self.pos)
        if ch == ".":
            raise UnsupportedExpression("decimal coefficients are not supported", self.pos)
        return 0, coeff


def parse_poly(text: str, variable: str = "k") -> Poly:
    return _Parser(text, variable).parse()


def _monomial(i: int, var: str, latex: bool) -> str:
    if i == 0:
        return ""
    if i == 1:
        return var
    if latex and i >= 10:
        return f"{var}^{{{i}}}"
    return f"{var}^{i}"


def _magnitude(c: Fraction, i: int, var: str, latex: bool) -> str:
    """|c| x^i with the coefficient 1 dropped on nonconstant monomials."""
    c = abs(c)
    mono = _monomial(i, var, latex)
    if c == 1 and mono:
        return mono
    if c.denominator == 1:
        num = str(c.numerator)
    elif latex:
        num = f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
    else:
        num = f"{c.numerator}/{c.denominator}"
    if latex and mono and c.denominator != 1:
        return f"{num} {mono}"
    return num + mono


def _terms(p: Poly, var: str, latex: bool) -> list[tuple[int, str]]:
    """(sign, |term|) pairs in descending degree."""
    return [(1 if c > 0 else -1, _magnitude(c, i, var, latex))
            for i, c in reversed(list(enumerate(p.coeffs))) if c]


def _join(terms: list[tuple[int, str]], compact: bool = False) -> str:
    plus, minus = ("+", "-") if compact else (" + ", " - ")
    out = ""
    for k, (sign, body) in enumerate(terms):
        if k == 0:
            out = body if sign > 0 else "-" + body
        else:
            out += (plus if sign > 0 else minus) + body
    return out


def poly_text(p: Poly, var: str = "k") -> str:
    """Plain-text polynomial in descending degree, accepted by parse_poly."""
    if p.is_zero():
        return "0"
    return _join(_terms(p, var, latex=False))


def poly_latex(p: Poly, var: str = "n", compact: bool = False) -> str:
    if p.is_zero():
        return "0"
    return _join(_terms(p, var, latex=True), compact)


def _factor(p: Poly, var: str, latex: bool) -> tuple[int, str]:
    """Split a polynomial multiplier into (sign, body) for display before a symbol.

    Body is empty for the constant 1, a bare monomial for single terms and a
    parenthesised sum otherwise; a negative leading coefficient is pulled out.
    """
    terms = _terms(p, var, latex)
    if len(terms) == 1:
        sign, body = terms[0]
        return sign, ("" if body == "1" else body)
    sign = 1 if p.lead > 0 else -1
    inner = p if sign > 0 else -p
    if latex:
        return sign, f"({poly_latex(inner, var, compact=True)})"
    return sign, f"({poly_text(inner, var)})"


def sequence_symbol(params: SeqParams) -> str:
    return SYMBOLS.get(params.name or "", "s")


def _assemble(parts: list[tuple[int, str]]) -> str:
    return _join(parts) if parts else "0"


def _product(factor: str, symbol: str) -> str:
    return f"{factor} {symbol}" if factor else symbol


def render_identity(t: ClosedFormTriple, format: str = "latex") -> str:
    if format == "json":
        return json.dumps(t.to_json())
    if format not in FORMATS:
        raise ValueError(f"unknown format {format!r}")
    latex = format == "latex"
    sym = sequence_symbol(t.params)
    if latex:
        prev, nxt, cur, summ = f"{sym}_{{k-1}}", f"{sym}_{{n+1}}", f"{sym}_n", "2\\sum_{k=1}^{n}"
    else:
        prev, nxt, cur, summ = f"{sym}(k-1)", f"{sym}(n+1)", f"{sym}(n)", "2 sum_{k=1..n}"

    if t.weight.is_zero():
        lhs = "0"
    else:
        sign, body = _factor(t.weight, "k", latex)
        lhs = f"{summ} {'-' if sign < 0 else ''}{_product(body, prev)}"

    parts = []
    for poly, symbol in ((t.F, nxt), (t.G, cur)):
        if poly:
            sign, body = _factor(poly, "n", latex)
            parts.append((sign, _product(body, symbol)))
    parts.extend(_terms(t.H, "n", latex))
    return f"{lhs} = {_assemble(parts)}"


def render_triples(triples: list[ClosedFormTriple], format: str = "latex") -> str:
    if format == "json":
        return json.dumps([t.to_json() for t in triples], indent=2)
    return "\n".join(render_identity(t, format) for t in triples)


def table_triples(params: SeqParams, d_max: int, gate_n: int = TABLE_GATE_N) -> list[ClosedFormTriple]:
    """Monomial triples for d = 0..d_max, each verified before it is returned."""
    out = []
    for d in range(d_max + 1):
        t = monomial_triple(d, params)
        report = verify_triple(t, gate_n)
        if not report.ok:
            raise VerificationError(t, report)
        out.append(t)
    return out


def render_table(params: SeqParams, d_max: int, format: str = "latex") -> str:
    return render_triples(table_triples(params, d_max), format)
