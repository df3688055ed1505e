from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polyfib.exact import Poly, binomial, poly_eval, poly_shift, rational_from_str, rational_to_str

from conftest import polys, rationals


def pascal(n_max):
    rows = [[1]]
    for _ in range(n_max):
        prev = rows[-1]
        rows.append([1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])
    return rows


def test_eval_examples():
    assert poly_eval(Poly([1, 2]), 3) == 7
    assert poly_eval(Poly([]), 5) == 0
    # x^2 - x at 1/2: 1/4 - 1/2
    assert poly_eval(Poly([0, -1, 1]), Fraction(1, 2)) == Fraction(-1, 4)


def test_shift_examples():
    assert poly_shift(Poly([0, 1]), 1) == Poly([1, 1])
    assert poly_shift(Poly([0, 0, 1]), 1) == Poly([1, 2, 1])
    q = poly_shift(Poly([3, -1]), -2)
    assert q == Poly([5, -1])
    for x in (0, 1, Fraction(7, 3)):
        assert q(x) == Poly([3, -1])(x - 2)


def test_arith_examples():
    assert Poly([1]) + Poly([-1]) == Poly([])
    assert Poly([0, 1]) * Poly([0, 1]) == Poly([0, 0, 1])
    assert Poly([2, 4]).scale(Fraction(1, 2)) == Poly([1, 2])


def test_binomial_against_pascal():
    rows = pascal(12)
    for n, row in enumerate(rows):
        for k in range(n + 3):
            assert binomial(n, k) == (row[k] if k <= n else 0)
    assert binomial(5, 2) == 10
    assert binomial(10, 5) == 252
    assert all(binomial(d, d) == 1 for d in range(30))


def test_canonical_form():
    p = Poly([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert Poly([0, 0]).degree is None
    assert Poly([0, 0]).is_zero()
    assert Poly([5]).degree == 0
    assert Poly([Fraction(2, 4)]).coeffs[0].denominator == 2


def test_immutable():
    p = Poly([1])
    with pytest.raises(AttributeError):
        p.coeffs = (2,)


def test_serialization():
    assert rational_to_str(Fraction(-3, 6)) == "-1/2"
    assert rational_to_str(Fraction(4, 2)) == "2"
    assert rational_from_str(" -1/2 ") == Fraction(-1, 2)
    assert Poly([Fraction(-1, 2), 3, 1]).to_json() == ["-1/2", "3", "1"]
    assert Poly.from_json(["-1/2", "3", "1"]) == Poly([Fraction(-1, 2), 3, 1])
    with pytest.raises(ValueError):
        rational_from_str("1/0")
    with pytest.raises(ValueError):
        rational_from_str("abc")


@given(polys, polys, rationals)
def test_eval_is_ring_homomorphism(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)
    assert (p * q)(x) == p(x) * q(x)


@given(polys, rationals)
def test_shift_roundtrip(p, t):
    assert poly_shift(poly_shift(p, t), -t) == p


@given(polys, rationals, rationals)
def test_shift_matches_evaluation(p, t, x):
    assert poly_shift(p, t)(x) == p(x + t)


@given(polys, polys)
def test_results_reduced(p, q):
    for r in (p + q, p * q, p.shift(Fraction(1, 3))):
        for c in r.coeffs:
            assert c.denominator > 0
            assert Fraction(c.numerator, c.denominator) == c
        if r.coeffs:
            assert r.coeffs[-1] != 0


@given(st.lists(rationals, max_size=6))
def test_json_roundtrip(cs):
    p = Poly(cs)
    assert Poly.from_json(p.to_json()) == p
