import math
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

import oracles as O
from casoratian.determinants import (
    PolyMatrix,
    bareiss_int,
    casorati_charlier,
    casorati_charlier_alt,
    degree_bound,
    det_exact,
    det_scalar,
    hahn_divisor,
    hahn_leading_coefficient,
    jacobi_leading_coefficient,
    phi_charlier,
    quasi_casorati_hahn,
    quasi_casorati_meixner,
    quasi_wronskian_jacobi,
    quasi_wronskian_laguerre,
    wronskian_hermite,
)
from casoratian.errors import InvalidParams
from casoratian.exact_core import I_UNIT, Polynomial, gr
from casoratian.setcalc import FiniteSet, subsets, weight
from strategies import gaussian, polys, real_polys

S = lambda *xs: FiniteSet(xs)  # noqa: E731


def square(elems, n):
    return st.lists(elems, min_size=n * n, max_size=n * n).map(lambda xs: [xs[i * n:(i + 1) * n] for i in range(n)])


matrices = st.integers(0, 4).flatmap(lambda n: square(polys, n))
real_matrices = st.integers(0, 4).flatmap(lambda n: square(real_polys, n))
int_matrices = st.integers(0, 5).flatmap(lambda n: square(st.integers(-30, 30), n))
scalar_matrices = st.integers(0, 4).flatmap(lambda n: square(gaussian, n))


@given(int_matrices)
def test_bareiss_matches_cofactor_expansion(mat):
    assert bareiss_int([row[:] for row in mat]) == O.cofactor_det(mat)


@given(scalar_matrices)
def test_scalar_determinant_matches_cofactor_expansion(mat):
    assert det_scalar(mat) == (O.cofactor_det(mat) if mat else 1)


@given(real_matrices)
def test_polynomial_determinant_real(mat):
    expected = O.cofactor_det(mat) if mat else Polynomial([1])
    assert det_exact(PolyMatrix.from_rows(mat)) == expected


@given(matrices)
def test_polynomial_determinant_gaussian(mat):
    expected = O.cofactor_det(mat) if mat else Polynomial([1])
    assert det_exact(PolyMatrix.from_rows(mat)) == expected


def test_polynomial_determinant_against_sympy():
    x = Polynomial([0, 1])
    rows = [[x**2 + 1, x - Fraction(1, 3), Polynomial([5])],
            [x, x**3, Polynomial([0, 0, 2])],
            [Polynomial([Fraction(7, 2)]), x + 4, x**2 - x]]
    expected = O.det([[O.to_sympy(e) for e in r] for r in rows])
    assert O.to_sympy(det_exact(PolyMatrix.from_rows(rows))) == expected


def test_degree_bound_is_min_of_row_and_column_sums():
    x = Polynomial([0, 1])
    one = Polynomial([1])
    M = PolyMatrix.from_rows([[x**5, one], [x**5, one]])
    assert degree_bound(M) == 5


# -- Charlier / Hermite --------------------------------------------------------

def test_charlier_casoratian_frozen():
    assert str(casorati_charlier(S(1, 2), 2)) == "1/2*x^2-3/2*x+2"


def test_hermite_wronskian_frozen():
    assert str(wronskian_hermite(S(1, 2))) == "2x^2+1"


@pytest.mark.parametrize("F", [S(1, 2), S(1, 3), S(2, 3, 5), S(0, 2, 4)])
@pytest.mark.parametrize("a", [2, Fraction(-3, 2), Fraction(7, 5)])
def test_charlier_casoratian_against_sympy(F, a):
    k = len(F)
    rows = [[O.charlier(f, a).subs(O.x, O.x + j) for j in range(k)] for f in F]
    assert casorati_charlier(F, a) == O.from_sympy(O.det(rows))


@pytest.mark.parametrize("F", list(subsets(range(0, 6), 3, 1)))
def test_charlier_degree_law_and_alternative_form(F):
    C = casorati_charlier(F, Fraction(7, 5), check_alt=False)
    assert C.degree == weight(F)
    assert C == casorati_charlier_alt(F, Fraction(7, 5))


def test_charlier_rejects_zero_parameter():
    with pytest.raises(InvalidParams):
        casorati_charlier(S(1), 0)


@pytest.mark.parametrize("F", [S(1, 2), S(1, 3, 4), S(2, 5)])
def test_hermite_wronskian_against_sympy(F):
    k = len(F)
    rows = [[sp.diff(O.hermite(f), O.x, j) for j in range(k)] for f in F]
    norm = 2 ** (k * (k - 1) // 2)
    for f in F:
        norm *= sp.factorial(f)
    assert wronskian_hermite(F) == O.from_sympy(O.det(rows) / norm)


@pytest.mark.parametrize("k", range(1, 6))
def test_hermite_segment_is_rescaled_hermite(k):
    # I({1..k}) = {k}; the invariance forces H_{1..k} = i^k H_k(-ix)/k!
    from casoratian.exact_core import compose_affine, i_power
    from casoratian.families import hermite
    lhs = wronskian_hermite(FiniteSet(range(1, k + 1)))
    rhs = compose_affine(hermite(k), -I_UNIT, 0).scale(i_power(k) / gr(math.factorial(k)))
    assert lhs == rhs


def test_phi_bridge():
    for n in range(6):
        phi_charlier(S(1, 3), Fraction(7, 5), n)  # raises on disagreement


# -- Meixner / Laguerre ---------------------------------------------------------

def test_meixner_quasi_casoratian_against_sympy():
    a, c = Fraction(3, 7), Fraction(5, 3)
    F1, F2 = S(1, 2), S(1)
    k1, k2 = 2, 1
    k = k1 + k2
    rows = [[O.meixner(f, a, c).subs(O.x, O.x + j) for j in range(k)] for f in F1]
    ai = 1 / O.q(a)
    rows += [[O.meixner(f, 1 / a, c).subs(O.x, O.x + j) * ai**j for j in range(k)] for f in F2]
    qa = O.q(a)
    norm = qa ** (k2 * (k2 - 1) // 2 - k2 * (k - 1)) * (1 - qa) ** (k1 * k2)
    assert quasi_casorati_meixner(F1, F2, a, c) == O.from_sympy(O.det(rows) / norm)


@pytest.mark.parametrize("F1,F2", [(S(1), S(1)), (S(1, 2), S(3)), (S(0, 2), S(1, 2))])
def test_meixner_and_laguerre_degree(F1, F2):
    w = weight(F1) + weight(F2)
    assert quasi_casorati_meixner(F1, F2, Fraction(3, 7), Fraction(5, 3)).degree == w
    assert quasi_wronskian_laguerre(F1, F2, Fraction(1, 4)).degree == w


def test_laguerre_quasi_wronskian_against_sympy():
    F1, F2, alpha = S(1, 3), S(2), Fraction(1, 4)
    k = 3
    rows = [[sp.diff(O.laguerre(f, alpha), O.x, j) for j in range(k)] for f in F1]
    rows += [[O.laguerre(f, alpha + j).subs(O.x, -O.x) for j in range(k)] for f in F2]
    assert quasi_wronskian_laguerre(F1, F2, alpha) == O.from_sympy((-1) ** sum(F1) * O.det(rows))


# -- Hahn / Jacobi ---------------------------------------------------------------

HAHN = (Fraction(1, 3), Fraction(1, 5), Fraction(17, 2))
JAC = (Fraction(1, 3), Fraction(1, 5))


@pytest.mark.parametrize("sets", [
    (S(1), S(1), S(1)),
    (S(1, 2), S(2), S(1)),
    (S(1, 3), S(1, 2), S(2, 3)),
])
def test_hahn_prescribed_leading_coefficient_and_degree(sets):
    res = quasi_casorati_hahn(*sets, *HAHN)
    assert not res.degenerate
    assert res.raw.leading == hahn_leading_coefficient(*sets, *HAHN)
    assert res.raw.degree == sum(weight(F) for F in sets)
    assert res.normalized.leading == 1


def test_hahn_divisor_divides_sympy_determinant():
    F1, F2, F3 = S(1, 2), S(1), S(2)
    al, be, N = (O.q(v) for v in HAHN)
    k = 4
    blocks = ((F1, (al + 1, -N), (al, be, N)), (F2, (al + 1, -be - N), (al, -be, be + N)),
              (F3, (-N, -be - N), (-be - N - 1, -al - N - 1, N)))
    rows = []
    for Fs, (s1, s2), hp in blocks:
        for f in Fs:
            p = O.hahn(f, *hp)
            rows.append([O.poch(O.x + s1, j) * O.poch(O.x + s2, j) * p.subs(O.x, O.x + j) for j in range(k)])
    det = O.det(rows)
    div = O.to_sympy(hahn_divisor(2, 1, 1, *HAHN))
    quo, rem = sp.div(sp.Poly(det, O.x), sp.Poly(div, O.x))
    assert rem.is_zero
    assert quasi_casorati_hahn(F1, F2, F3, *HAHN).raw == O.from_sympy(quo.as_expr())


@pytest.mark.parametrize("F1,F2", [(S(1), S(1)), (S(1, 2), S(3)), (S(2, 4), S(1, 3))])
def test_jacobi_prescribed_leading_coefficient(F1, F2):
    res = quasi_wronskian_jacobi(F1, F2, *JAC)
    assert res.raw.leading == jacobi_leading_coefficient(F1, F2, *JAC)
    assert res.normalized.degree == weight(F1) + weight(F2)


def test_degenerate_normalisation():
    # alpha + beta + 1 + f makes (alpha+beta+f+1)_f vanish for f=1 at alpha+beta=-2
    res = quasi_wronskian_jacobi(S(1), S(), Fraction(-1), Fraction(-1))
    assert res.degenerate
    assert res.normalized == Polynomial([1])
