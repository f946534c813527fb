import time
from fractions import Fraction

import pytest

from casoratian.christoffel import (
    Kind,
    MeasureKind,
    MeasureSpec,
    SequenceProvider,
    Truncated,
    christoffel_q,
    christoffel_q_charlier,
    christoffel_q_meixner,
    claim_d_check,
    discrete_inner,
    dual_hahn_orthogonality,
    exp_truncated,
    gamma_charlier,
    krall_dual_hahn_points,
    meixner_nodes,
    phi,
    plain_nodes,
    proportionality_check,
    qtilde,
    qtilde_charlier,
    qtilde_meixner,
    ratio_identity_check,
    sze_check,
)
from casoratian.determinants import PolyMatrix, casorati_charlier, det_exact
from casoratian.errors import EmptyComponent, InvalidParams, TailBoundUnavailable
from casoratian.exact_core import Polynomial, compose_affine, factorial, gr, pochhammer
from casoratian.families import FamilyId, charlier, dual_hahn, meixner
from casoratian.report import PASS, SKIPPED
from casoratian.setcalc import EMPTY, FiniteSet, involute, subsets

S = lambda *xs: FiniteSet(xs)  # noqa: E731
A_MEIX, C_MEIX = Fraction(3, 7), Fraction(5, 3)


def charlier_seq(a):
    return SequenceProvider.of(FamilyId.CHARLIER, a=a)


# -- first representation ------------------------------------------------------

def test_no_nodes_gives_the_base_sequence():
    seq = charlier_seq(2)
    for n in range(5):
        assert christoffel_q(seq, [], n) == charlier(n, gr(2))


def test_charlier_n0_leading_coefficient():
    q = christoffel_q_charlier(S(1, 2), 2, 0)
    ph = phi(charlier_seq(2), plain_nodes([1, 2]), 0)
    assert q.degree == 0
    assert q.leading == Fraction(1, 2) * ph  # (-1)^2 lead(c_2) Phi_0


@pytest.mark.parametrize("F", [S(1), S(1, 2), S(2, 5), S(1, 3, 4)])
def test_division_round_trip(F):
    seq = charlier_seq(Fraction(7, 5))
    k = len(F)
    for n in range(4):
        rows = [[seq.poly(n + j) for j in range(k + 1)]]
        rows += [[Polynomial([seq.poly(n + j)(f)]) for j in range(k + 1)] for f in F]
        numerator = det_exact(PolyMatrix.from_rows(rows))
        assert christoffel_q(seq, plain_nodes(F), n) * Polynomial.from_roots(F) == numerator


def test_vanishing_phi_lowers_the_degree():
    seq = SequenceProvider.of(FamilyId.HERMITE)
    assert phi(seq, plain_nodes([0]), 1) == 0
    assert christoffel_q(seq, plain_nodes([0]), 1).degree < 1


def test_coincident_nodes_rejected():
    with pytest.raises(InvalidParams):
        christoffel_q(charlier_seq(2), plain_nodes([1, 1]), 0)


def test_meixner_reflected_block_matches_generic_nodes():
    seq = SequenceProvider.of(FamilyId.MEIXNER, a=A_MEIX, c=C_MEIX)
    for F1, F2 in [(S(1), S(1)), (S(1, 3), S(2)), (S(), S(0, 2))]:
        for n in range(4):
            generic = christoffel_q(seq, meixner_nodes(F1, F2, A_MEIX, C_MEIX), n)
            plain = christoffel_q(seq, plain_nodes(list(F1) + [-gr(C_MEIX) - f for f in F2]), n)
            specific = christoffel_q_meixner(F1, F2, A_MEIX, C_MEIX, n)
            assert generic == plain == specific
            assert specific.degree == n


# -- orthogonality, by independent truncated sums --------------------------------

def _truncated_moments(q, weight_at, j_max, X):
    return [sum(q(x).re * Fraction(x) ** j * weight_at(x) for x in range(X + 1)) for j in range(j_max + 1)]


def test_krall_charlier_orthogonality_by_direct_summation():
    a, F = Fraction(1, 2), S(1, 2)
    ann = Polynomial.from_roots(F)

    def w(x):
        return ann(x).re * a**x / factorial(x)

    for n in range(1, 5):
        q = christoffel_q_charlier(F, a, n)
        moments = _truncated_moments(q, w, n, 120)
        assert all(abs(m) < Fraction(1, 10**60) for m in moments[:n])
        assert abs(moments[n]) > Fraction(1, 10**10)


def test_krall_meixner_orthogonality_by_direct_summation():
    a, c = Fraction(1, 3), Fraction(5, 3)
    F1, F2 = S(1), S(2)
    mult = Polynomial.from_roots([1] + [-gr(c) - 2])

    def w(x):
        return mult(x).re * a**x * pochhammer(c, x).re / factorial(x)

    for n in range(1, 4):
        q = christoffel_q_meixner(F1, F2, a, c, n)
        moments = _truncated_moments(q, w, n - 1, 400)
        assert all(abs(m) < Fraction(1, 10**50) for m in moments)
        qt = qtilde_meixner(F1, F2, a, c, n)
        moments = _truncated_moments(qt, w, n - 1, 400)
        assert all(abs(m) < Fraction(1, 10**50) for m in moments)


def test_meixner_second_representation_needs_rescaled_first_row():
    # without the (a-1)^{-j} factors in the first row the determinant is not
    # proportional to the Christoffel polynomial
    a, c = gr(A_MEIX), gr(C_MEIX)
    F1, F2 = S(1), S(1)
    G1, G2 = involute(F1), involute(F2)
    m = len(G1) + len(G2)
    ct = c + F1.max + F2.max + 2
    n = 1
    rows = [[compose_affine(meixner(n - j, a, ct), 1, -F1.max - 1) for j in range(m + 1)]]
    rows += [[Polynomial([meixner(g, a, 2 - ct)(-n + j - 1)]) for j in range(m + 1)] for g in G1]
    rows += [[Polynomial([meixner(g, a.inverse(), 2 - ct)(-n + j - 1) * a ** (-j)]) for j in range(m + 1)] for g in G2]
    unscaled = det_exact(PolyMatrix.from_rows(rows))
    q = christoffel_q_meixner(F1, F2, a, c, n)
    assert unscaled.scale(q.leading / unscaled.leading) != q
    assert qtilde_meixner(F1, F2, a, c, n).scale(q.leading / qtilde_meixner(F1, F2, a, c, n).leading) == q


# -- second representation -------------------------------------------------------

def test_qtilde_charlier_hand_value():
    # F={1,2}: G={2}; 2x2 determinant [[1, 0], [c_2^{-2}(-1), c_2^{-2}(0)]]
    assert qtilde_charlier(S(1, 2), 2, 0) == Polynomial([2])


def test_qtilde_leading_coefficient():
    F, a = S(1, 2), gr(2)
    C = casorati_charlier(involute(F), -a)
    for n in range(5):
        assert qtilde_charlier(F, a, n).leading == C(-n) / factorial(n)


def test_qtilde_meixner_well_formed():
    assert qtilde(Kind.MEIXNER, [S(1), S(1)], {"a": A_MEIX, "c": C_MEIX}, 0).degree == 0


def test_qtilde_errors():
    with pytest.raises(EmptyComponent):
        qtilde_charlier(EMPTY, 2, 0)
    with pytest.raises(InvalidParams):
        qtilde_charlier(S(1), 0, 0)
    with pytest.raises(InvalidParams):
        qtilde_meixner(S(1), S(1), 1, C_MEIX, 0)
    with pytest.raises(EmptyComponent):
        qtilde_meixner(S(1), EMPTY, A_MEIX, C_MEIX, 0)


def test_gamma_is_finite_and_proportional():
    g = gamma_charlier(S(1, 2), 2, 0)
    assert g
    assert christoffel_q_charlier(S(1, 2), 2, 0) == qtilde_charlier(S(1, 2), 2, 0).scale(g)


@pytest.mark.parametrize("a", [2, Fraction(-3, 2)])
def test_charlier_proportionality_small_sets(a):
    for F in subsets(range(1, 6), 2, 1):
        rep = proportionality_check(Kind.CHARLIER, [F], {"a": a}, 5)
        assert rep.status == PASS, (F, rep.checks)


@pytest.mark.parametrize("F,a", [(S(1, 2), 2), (S(2, 3), Fraction(-3, 2))])
def test_charlier_proportionality_to_n6(F, a):
    assert proportionality_check(Kind.CHARLIER, [F], {"a": a}, 6).passed


def test_meixner_proportionality():
    for F1 in subsets(range(1, 4), 2, 1):
        for F2 in subsets(range(1, 4), 2, 1):
            rep = proportionality_check(Kind.MEIXNER, [F1, F2], {"a": A_MEIX, "c": C_MEIX}, 4)
            assert rep.passed, (F1, F2)


def test_empty_set_proportionality_is_skipped():
    rep = proportionality_check(Kind.CHARLIER, [EMPTY], {"a": 2}, 3)
    assert rep.status == SKIPPED and rep.notes


@pytest.mark.parametrize("a", [2, Fraction(7, 5)])
def test_ratio_identity(a):
    for F in subsets(range(1, 7), 3, 1):
        assert ratio_identity_check(F, a, 8).passed, F


def test_ratio_identity_example():
    assert ratio_identity_check(S(1, 3), Fraction(7, 5), 8).passed


# -- measures ---------------------------------------------------------------------

def test_dual_hahn_examples():
    m = MeasureSpec.of(MeasureKind.DUAL_HAHN_BASE, alpha=1, beta=1, N=3)
    R = [dual_hahn(n, gr(1), gr(1), gr(3)) for n in range(5)]
    assert discrete_inner(m, R[1], R[0]) == 0
    assert discrete_inner(m, R[4], R[4]) == 0
    assert discrete_inner(m, R[3], R[3]) != 0


@pytest.mark.parametrize("N", [3, 5, 6])
def test_dual_hahn_orthogonality(N):
    assert dual_hahn_orthogonality(1, 2, N).passed


def test_dual_hahn_requires_integer_n():
    m = MeasureSpec.of(MeasureKind.DUAL_HAHN_BASE, alpha=1, beta=1, N=Fraction(7, 2))
    with pytest.raises(InvalidParams):
        discrete_inner(m, Polynomial([1]), Polynomial([1]))


@pytest.mark.parametrize("a", [Fraction(1, 2), Fraction(1)])
def test_charlier_norms_within_tail_bound(a):
    m = MeasureSpec.of(MeasureKind.CHARLIER_BASE, truncation=200, a=a)
    E = exp_truncated(a, 200)
    for n in range(6):
        c = charlier(n, gr(a))
        val = discrete_inner(m, c, c)
        assert isinstance(val, Truncated)
        target = gr(a) ** n / factorial(n)
        assert (val.value - target * E.value).abs_bound() <= val.bound + target.abs_bound() * E.bound
        assert val.bound < Fraction(1, 10**100)


def test_tail_bound_unavailable_for_short_truncation():
    m = MeasureSpec.of(MeasureKind.CHARLIER_BASE, truncation=2, a=5)
    with pytest.raises(TailBoundUnavailable):
        discrete_inner(m, charlier(3, gr(5)), charlier(3, gr(5)))


def test_charlier_measure_needs_real_parameter():
    m = MeasureSpec.of(MeasureKind.CHARLIER_BASE, a="1+i")
    with pytest.raises(InvalidParams):
        discrete_inner(m, Polynomial([1]), Polynomial([1]))


# -- claims -------------------------------------------------------------------------

def test_claim_d():
    t0 = time.perf_counter()
    rep = claim_d_check(S(1, 2), Fraction(1, 2), 4, 200)
    assert rep.passed
    assert time.perf_counter() - t0 < 10
    assert any(c.name.startswith("ingredient") for c in rep.checks)


@pytest.mark.parametrize("F", [S(1, 3), S(2, 3), S(1, 2, 4)])
def test_claim_d_other_sets(F):
    assert claim_d_check(F, Fraction(1, 2), 3, 150).passed


def test_claim_d_rejects_bad_input():
    with pytest.raises(InvalidParams):
        claim_d_check(S(0, 1), Fraction(1, 2), 2)
    with pytest.raises(InvalidParams):
        claim_d_check(S(1, 2), Fraction(-1, 2), 2)


def test_sze_example():
    rep = sze_check([S(1), EMPTY, EMPTY], 1, 2, 6, 2)
    assert rep.passed
    names = [c.name for c in rep.checks]
    assert "orthogonality n=2 j=0" in names and "norm relation n=2" in names


def test_sze_empty_components_reduce_to_base():
    assert sze_check([EMPTY, EMPTY, EMPTY], 1, 2, 6, 3).passed


def test_sze_skips_vanishing_phi():
    rep = sze_check([S(2), EMPTY, EMPTY], 1, 2, 6, 2)
    assert rep.passed
    assert any("Phi_1 = 0" in n for n in rep.notes)


def test_sze_skips_coincident_nodes():
    pts = krall_dual_hahn_points([S(1), S(3), EMPTY], 1, 2, 6)
    assert pts[0] == pts[1]
    assert sze_check([S(1), S(3), EMPTY], 1, 2, 6, 2).status == SKIPPED


def test_sze_requires_room():
    with pytest.raises(InvalidParams):
        sze_check([S(0), EMPTY, EMPTY], 1, 2, 2, 2)
