from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles as O
from casoratian.errors import InvalidParams
from casoratian.exact_core import Polynomial, factorial, gr
from casoratian.families import (
    FamilyId,
    charlier,
    family_identity_check,
    family_poly,
    hypergeometric_3f2_poly,
    lambda_map,
    make_params,
    meixner,
)

GRID = {
    FamilyId.CHARLIER: [make_params(a=2), make_params(a="-3/2"), make_params(a="7/5"), make_params(a="1+i")],
    FamilyId.MEIXNER: [make_params(a="3/7", c="5/3"), make_params(a=3, c="-1/2")],
    FamilyId.HAHN: [make_params(alpha="1/3", beta="1/5", N="17/2"), make_params(alpha=1, beta=2, N=6)],
    FamilyId.DUAL_HAHN: [make_params(alpha="1/3", beta="1/5", N="17/2"), make_params(alpha=1, beta=2, N=6)],
    FamilyId.HERMITE: [{}],
    FamilyId.LAGUERRE: [make_params(alpha="1/4"), make_params(alpha=-3)],
    FamilyId.JACOBI: [make_params(alpha="1/3", beta="1/5"), make_params(alpha=-2, beta="1/2")],
}


def _oracle(fid, n, p):
    v = {k: val.re for k, val in p.items()}
    return {
        FamilyId.CHARLIER: lambda: O.charlier(n, v["a"]),
        FamilyId.MEIXNER: lambda: O.meixner(n, v["a"], v["c"]),
        FamilyId.HAHN: lambda: O.hahn(n, v["alpha"], v["beta"], v["N"]),
        FamilyId.DUAL_HAHN: lambda: O.dual_hahn_in_lambda(n, v["alpha"], v["beta"], v["N"]),
        FamilyId.HERMITE: lambda: O.hermite(n),
        FamilyId.LAGUERRE: lambda: O.laguerre(n, v["alpha"]),
        FamilyId.JACOBI: lambda: O.jacobi(n, v["alpha"], v["beta"]),
    }[fid]()


@pytest.mark.parametrize("fid", list(FamilyId))
def test_matches_independent_hypergeometric_oracle(fid):
    for p in GRID[fid]:
        if not all(v.is_real() for v in p.values()):
            continue
        for n in range(7):
            assert family_poly(fid, n, p) == O.from_sympy(_oracle(fid, n, p)), (fid, n, p)


@pytest.mark.parametrize("n,text", [
    (0, "1"),
    (1, "x-2"),
    (2, "1/2*x^2-5/2*x+2"),
])
def test_charlier_frozen_values(n, text):
    assert str(charlier(n, gr(2))) == text


@pytest.mark.parametrize("n,text", [(0, "1"), (1, "2x"), (2, "4x^2-2"), (3, "8x^3-12x")])
def test_hermite_frozen_values(n, text):
    assert str(family_poly(FamilyId.HERMITE, n)) == text


@pytest.mark.parametrize("fid", list(FamilyId))
def test_identity_suite(fid):
    for p in GRID[fid]:
        rep = family_identity_check(fid, p, 8)
        assert rep.passed, [c for c in rep.checks if c.passed is False]


def test_structural_identities_reach_n_10():
    rep = family_identity_check(FamilyId.CHARLIER, make_params(a="7/5"), 10)
    names = " ".join(c.name for c in rep.checks)
    assert rep.passed
    for key in ("recurrence", "difference", "ladder", "duality"):
        assert key in names


def test_negative_degree_is_zero():
    assert family_poly(FamilyId.CHARLIER, -1, make_params(a=2)) == Polynomial()


@pytest.mark.parametrize("fid,params", [
    (FamilyId.CHARLIER, {"a": 0}),
    (FamilyId.MEIXNER, {"a": 1, "c": 2}),
    (FamilyId.MEIXNER, {"a": 0, "c": 2}),
    (FamilyId.HAHN, {"alpha": -1, "beta": -2, "N": 5}),
    (FamilyId.DUAL_HAHN, {"alpha": -2, "beta": 1, "N": 5}),
    (FamilyId.LAGUERRE, {}),
])
def test_invalid_params(fid, params):
    with pytest.raises(InvalidParams):
        family_poly(fid, 2, make_params(**params))


@pytest.mark.parametrize("fid", list(FamilyId))
def test_degree_and_leading_coefficient(fid):
    p = GRID[fid][0]
    for n in range(6):
        poly = family_poly(fid, n, p)
        assert poly.degree == n
        if fid in (FamilyId.CHARLIER, FamilyId.MEIXNER):
            assert poly.leading == Fraction(1, factorial(n))


@given(st.integers(0, 6), st.integers(0, 6))
def test_charlier_self_duality(n, m):
    # c_n^a(m) a^m / m! ... symmetric form: (-a)^{-n} n! c_n(m) == (-a)^{-m} m! c_m(n)
    a = gr(Fraction(7, 5))
    lhs = (-a) ** (-n) * factorial(n) * charlier(n, a)(m)
    rhs = (-a) ** (-m) * factorial(m) * charlier(m, a)(n)
    assert lhs == rhs


def test_meixner_reflection():
    a, c = gr(Fraction(3, 7)), gr(Fraction(5, 3))
    for n in range(6):
        lhs = meixner(n, a, c)
        rhs = meixner(n, a.inverse(), c)
        for t in range(-3, 4):
            assert lhs(-t - c) == (-1) ** n * rhs(t)


def test_three_f_two_oracle_agrees_with_hahn():
    alpha, beta, N = gr(Fraction(1, 3)), gr(Fraction(1, 5)), gr(Fraction(17, 2))
    for n in range(5):
        direct = family_poly(FamilyId.HAHN, n, {"alpha": alpha, "beta": beta, "N": N})
        assert direct.degree == n
    assert lambda_map(1, 2)(3) == 3 * 7
    assert hypergeometric_3f2_poly is not None
