import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polyfib import Poly, SeqParams
from polyfib.closed_form import ClosedFormTriple, family_sample, general_triple, monomial_triple
from polyfib.verify import (
    RANK_DEFICIENT,
    UNIQUE,
    brute_force_sum,
    reconstruct_triple,
    verify_triple,
)

from conftest import PELL, degenerate_params, naive_sum, polys, random_params, random_poly, seq_params


def test_brute_force_examples():
    # 2 * (1*0 + 2*1 + 3*2); the closed form gives 3*P_4 - 4*P_3 = 36 - 20
    assert brute_force_sum(Poly([0, 1]), PELL, 3) == 16 == 3 * 12 - 4 * 5
    for p in (PELL, SeqParams(3, 4, -7, 2)):
        assert brute_force_sum(Poly([1]), p, 1) == 2 * p.c0
    # 2 * (1*0 + 4*1 + 9*2 + 16*5) against (4^2+1) P_5 - (4^2+8) P_4 - 1
    lhs = brute_force_sum(Poly([0, 0, 1]), PELL, 4)
    assert lhs == 204
    assert lhs == 17 * 29 - 24 * 12 - 1


@settings(max_examples=50)
@given(polys, seq_params(), st.integers(1, 25))
def test_brute_force_matches_naive(P, p, n):
    assert brute_force_sum(P, p, n) == naive_sum(list(P.coeffs), p, n)


@settings(max_examples=50)
@given(polys, polys, st.fractions(max_denominator=6), st.fractions(max_denominator=6),
       seq_params(), st.integers(1, 20))
def test_brute_force_additive(P, Q, alpha, beta, p, n):
    combo = brute_force_sum(P.scale(alpha) + Q.scale(beta), p, n)
    assert combo == alpha * brute_force_sum(P, p, n) + beta * brute_force_sum(Q, p, n)


def test_verify_pell_table():
    for d in range(7):
        report = verify_triple(monomial_triple(d, PELL), 200)
        assert report.ok and report.first_failure is None
        assert report.checked_n_max == 200


def test_verify_detects_corruption():
    t = monomial_triple(3, PELL)
    bad = ClosedFormTriple(t.F, t.G, t.H + 1, t.params, t.weight)
    report = verify_triple(bad, 200)
    assert not report.ok
    n, lhs, rhs = report.first_failure
    assert n == 1 and rhs - lhs == 1
    assert report.to_json() == {"n_max": 200, "ok": False,
                                "first_failure": {"n": 1, "lhs": str(lhs), "rhs": str(rhs)}}


def test_verify_late_failure():
    # perturb F by a polynomial vanishing at n = 1..4
    t = monomial_triple(2, PELL)
    bump = Poly([1])
    for r in range(1, 5):
        bump = bump * Poly([-r, 1])
    bad = ClosedFormTriple(t.F + bump, t.G, t.H, t.params, t.weight)
    assert verify_triple(bad, 50).first_failure[0] == 5


def test_verify_family_output():
    deg = SeqParams(1, 2, 1, 2)
    assert verify_triple(family_sample(Poly([1]), deg, Poly([0, 1])), 200).ok


def test_verify_rejects_bad_nmax():
    with pytest.raises(ValueError):
        verify_triple(monomial_triple(0, PELL), 0)


def test_reconstruct_examples():
    res = reconstruct_triple(Poly([0, 1]), PELL, 1)
    assert res.status == UNIQUE
    assert res.triple.components() == (Poly([0, 1]), Poly([-1, -1]), Poly())
    assert reconstruct_triple(Poly([1]), SeqParams(1, 2, 1, 2), 1).status == RANK_DEFICIENT
    assert reconstruct_triple(Poly([1]), SeqParams(1, 2, 1, -1), 1).status == RANK_DEFICIENT
    P = Poly([0, 1, 1])
    res = reconstruct_triple(P, PELL, 2)
    assert res.status == UNIQUE
    assert res.triple.components() == general_triple(P, PELL).components()


def test_reconstruct_with_slack_degree():
    # extra degree room must still collapse to the same unique triple
    P = Poly([Fraction(1, 3), 2])
    p = SeqParams(3, 2, 1, 4)
    res = reconstruct_triple(P, p, 3)
    assert res.status == UNIQUE
    assert res.triple.components() == general_triple(P, p).components()


def test_reconstruct_needs_degree_room():
    with pytest.raises(ValueError):
        reconstruct_triple(Poly([0, 0, 1]), PELL, 1)


def test_non_degenerate_sweep():
    rng = random.Random(100)
    for i in range(100):
        p = random_params(rng, degenerate=False)
        P = random_poly(rng, 5)
        t = general_triple(P, p)
        assert verify_triple(t, 300).ok
        if i < 40:
            res = reconstruct_triple(P, p, P.degree)
            assert res.status == UNIQUE
            assert res.triple.components() == t.components()


def test_degenerate_sweep():
    rng = random.Random(200)
    for _ in range(20):
        p = degenerate_params(rng)
        P = random_poly(rng, 3)
        assert reconstruct_triple(P, p, P.degree).status == RANK_DEFICIENT
        frees = [general_triple(P, p).F, Poly(), random_poly(rng, 4)]
        outs = {family_sample(P, p, f).components() for f in frees}
        assert len(outs) == len(set(frees))
        for f in frees:
            assert verify_triple(family_sample(P, p, f), 200).ok
