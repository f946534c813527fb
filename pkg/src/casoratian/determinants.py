"""Exact determinants of polynomial matrices and the concrete builders.

:func:`det_exact` works by evaluation and interpolation: bound the degree of
the determinant, evaluate the matrix at ``x = 0, 1, ..., D``, take exact
scalar determinants, and interpolate.  When every entry has rational
coefficients the whole pipeline runs on Python integers (rows are scaled by
their coefficient denominators, scalar determinants use fraction-free
Bareiss elimination, interpolation uses forward differences).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .errors import InternalInconsistency, InvalidParams, NotSquare
from .exact_core import (
    NEG_INF,
    ONE,
    ONE_POLY,
    ZERO,
    ZERO_POLY,
    GaussianRational,
    Polynomial,
    Scalar,
    compose_affine,
    denominator_lcm,
    factorial,
    gr,
    pochhammer,
    pochhammer_poly,
    poly_exact_div,
    sign,
)
from .families import charlier, hahn, hermite, jacobi, laguerre, meixner
from .setcalc import FiniteSet, factorial_product, vandermonde, weight


@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple[Polynomial, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows*cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Polynomial | Scalar]]) -> PolyMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(e if isinstance(e, Polynomial) else Polynomial.constant(e) for r in rows for e in r)
        return cls(len(rows), ncols, flat)

    def row(self, i: int) -> tuple[Polynomial, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def entry(self, i: int, j: int) -> Polynomial:
        return self.entries[i * self.cols + j]


@dataclass(frozen=True)
class BuilderResult:
    raw: Polynomial
    normalized: Polynomial
    degenerate: bool
    leading: GaussianRational  # the prescribed leading coefficient


# -- scalar determinants --------------------------------------------------------

def bareiss_int(mat: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix (mutates ``mat``)."""
    n = len(mat)
    if n == 0:
        return 1
    s = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for r in range(k + 1, n):
                if mat[r][k]:
                    mat[k], mat[r] = mat[r], mat[k]
                    s = -s
                    break
            else:
                return 0
        pivot = mat[k][k]
        row_k = mat[k]
        for i in range(k + 1, n):
            row_i = mat[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
        prev = pivot
    return s * mat[n - 1][n - 1]


def det_scalar(mat: Sequence[Sequence[Scalar]]) -> GaussianRational:
    """Exact determinant over Q(i) by Gaussian elimination."""
    a = [[gr(v) for v in row] for row in mat]
    n = len(a)
    if any(len(r) != n for r in a):
        raise NotSquare(f"{n} rows but row lengths {[len(r) for r in a]}")
    det = ONE
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k]), None)
        if piv is None:
            return ZERO
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        pk = a[k][k]
        det = det * pk
        inv = pk.inverse()
        for i in range(k + 1, n):
            f = a[i][k] * inv
            if f:
                row_i, row_k = a[i], a[k]
                for j in range(k + 1, n):
                    row_i[j] = row_i[j] - f * row_k[j]
    return det


# -- polynomial determinant -------------------------------------------------------

def degree_bound(M: PolyMatrix) -> int | float:
    """Upper bound on ``deg det M``: the smaller of the row-wise and
    column-wise sums of maximal entry degrees."""
    n = M.rows
    row_sum = 0
    col_max = [NEG_INF] * n
    for i in range(n):
        rmax = NEG_INF
        for j in range(n):
            d = M.entry(i, j).degree
            rmax = max(rmax, d)
            col_max[j] = max(col_max[j], d)
        row_sum += rmax
    return min(row_sum, sum(col_max))


def _interpolate_int(values: list[int]) -> list[Fraction]:
    """Monomial coefficients of the unique degree <= D polynomial taking
    integer ``values`` at ``0..D`` (Newton forward differences)."""
    D = len(values) - 1
    diffs = []
    cur = list(values)
    for _ in range(D + 1):
        diffs.append(cur[0])
        cur = [cur[t + 1] - cur[t] for t in range(len(cur) - 1)]
    # sum_k diffs[k] * x(x-1)...(x-k+1) / k!, accumulated over D!
    fact_D = math.factorial(D)
    acc = [0] * (D + 1)
    falling = [1]
    for k in range(D + 1):
        w = diffs[k] * (fact_D // math.factorial(k))
        if w:
            for t, c in enumerate(falling):
                acc[t] += w * c
        nxt = [0] * (len(falling) + 1)
        for t, c in enumerate(falling):
            nxt[t + 1] += c
            nxt[t] -= k * c
        falling = nxt
    return [Fraction(c, fact_D) for c in acc]


def _interpolate_gauss(values: list[GaussianRational]) -> Polynomial:
    D = len(values) - 1
    cur = list(values)
    acc = ZERO_POLY
    falling = ONE_POLY
    for k in range(D + 1):
        acc = acc + falling.scale(cur[0] * Fraction(1, math.factorial(k)))
        cur = [cur[t + 1] - cur[t] for t in range(len(cur) - 1)]
        falling = falling * Polynomial([-k, 1])
    return acc


def _eval_int(coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def det_exact(M: PolyMatrix) -> Polynomial:
    """Exact determinant of a square polynomial matrix; the 0x0 matrix gives 1."""
    if M.rows != M.cols:
        raise NotSquare(f"{M.rows}x{M.cols} matrix has no determinant")
    n = M.rows
    if n == 0:
        return ONE_POLY
    D = degree_bound(M)
    if D == NEG_INF:
        return ZERO_POLY
    D = int(D)
    if all(e.is_real() for e in M.entries):
        return _det_real(M, D)
    points = range(D + 1)
    values = [
        det_scalar([[M.entry(i, j)(x) for j in range(n)] for i in range(n)]) for x in points
    ]
    return _interpolate_gauss(values)


def _det_real(M: PolyMatrix, D: int) -> Polynomial:
    n = M.rows
    scale = 1
    int_rows: list[list[list[int]]] = []
    for i in range(n):
        row = M.row(i)
        L = 1
        for e in row:
            L = math.lcm(L, denominator_lcm(e))
        scale *= L
        int_rows.append([
            [int(c.re * L) for c in e.coeffs] for e in row
        ])
    values = []
    for x in range(D + 1):
        mat = [[_eval_int(cs, x) for cs in row] for row in int_rows]
        values.append(bareiss_int(mat))
    coeffs = _interpolate_int(values)
    inv = Fraction(1, scale)
    return Polynomial([c * inv for c in coeffs])


# -- helpers for building rows ----------------------------------------------------

@lru_cache(maxsize=None)
def _shift(p: Polynomial, j: int) -> Polynomial:
    return compose_affine(p, ONE, gr(j)) if j else p


@lru_cache(maxsize=None)
def _reflect(p: Polynomial) -> Polynomial:
    return compose_affine(p, -ONE, ZERO)


@lru_cache(maxsize=None)
def _deriv(p: Polynomial, order: int) -> Polynomial:
    for _ in range(order):
        p = p.derivative()
    return p


def casorati_rows(polys: Sequence[Polynomial], k: int) -> list[list[Polynomial]]:
    """Rows ``p(x + j - 1)``, ``j = 1..k``."""
    return [[_shift(p, j) for j in range(k)] for p in polys]


# -- Charlier / Hermite -------------------------------------------------------------

def _check_charlier_a(a: GaussianRational) -> None:
    if not a:
        raise InvalidParams("Charlier requires a != 0")


def casorati_charlier(F: FiniteSet, a: Scalar, check_alt: bool = True) -> Polynomial:
    """``|c^a_{f_i}(x + j - 1)|``; optionally cross-checked against the
    index-shifted form ``|c^a_{f_i - j + 1}(x)|``."""
    a = gr(a)
    _check_charlier_a(a)
    k = len(F)
    det = det_exact(PolyMatrix.from_rows(casorati_rows([charlier(f, a) for f in F], k)))
    if check_alt:
        alt = casorati_charlier_alt(F, a)
        if alt != det:
            raise InternalInconsistency(
                f"shifted-argument and shifted-index forms differ for F={F}, a={a}: {det} vs {alt}"
            )
    return det


def casorati_charlier_alt(F: FiniteSet, a: Scalar) -> Polynomial:
    a = gr(a)
    _check_charlier_a(a)
    k = len(F)
    rows = [[charlier(f - j, a) for j in range(k)] for f in F]
    return det_exact(PolyMatrix.from_rows(rows))


def wronskian_hermite(F: FiniteSet) -> Polynomial:
    """``|H_{f_i}^{(j-1)}(x)| / (2^{C(k,2)} prod f!)``."""
    k = len(F)
    rows = [[_deriv(hermite(f), j) for j in range(k)] for f in F]
    det = det_exact(PolyMatrix.from_rows(rows))
    return det.scale(Fraction(1, 2 ** (k * (k - 1) // 2) * factorial_product(F)))


def phi_charlier(F: FiniteSet, a: Scalar, n: int, check_bridge: bool = True) -> GaussianRational:
    """``Phi_n = |c^a_{n+j-1}(f_i)|``.

    With ``check_bridge`` the duality relation between ``Phi_n`` and the
    Casoratian evaluated at ``x = n`` is asserted.
    """
    a = gr(a)
    _check_charlier_a(a)
    k = len(F)
    phi = det_scalar([[charlier(n + j, a)(f) for j in range(k)] for f in F])
    if check_bridge:
        lhs = casorati_charlier(F, a, check_alt=False)(n)
        num = math.prod(math.factorial(n + i) for i in range(k))
        rhs = phi * num / ((-a) ** (k * n - weight(F)) * factorial_product(F))
        if lhs != rhs:
            raise InternalInconsistency(
                f"duality bridge failed for F={F}, a={a}, n={n}: {lhs} vs {rhs}"
            )
    return phi


# -- Meixner / Laguerre -------------------------------------------------------------

def _check_meixner_a(a: GaussianRational) -> None:
    if not a or a == 1:
        raise InvalidParams("Meixner requires a not in {0, 1}")


def quasi_casorati_meixner(F1: FiniteSet, F2: FiniteSet, a: Scalar, c: Scalar) -> Polynomial:
    a, c = gr(a), gr(c)
    _check_meixner_a(a)
    k1, k2 = len(F1), len(F2)
    k = k1 + k2
    inv_a = a.inverse()
    rows = casorati_rows([meixner(f, a, c) for f in F1], k)
    for f in F2:
        p = meixner(f, inv_a, c)
        rows.append([_shift(p, j).scale(inv_a**j) for j in range(k)])
    det = det_exact(PolyMatrix.from_rows(rows))
    norm = a ** (k2 * (k2 - 1) // 2 - k2 * (k - 1)) * (ONE - a) ** (k1 * k2)
    return det.scale(norm.inverse())


def quasi_wronskian_laguerre(F1: FiniteSet, F2: FiniteSet, alpha: Scalar) -> Polynomial:
    alpha = gr(alpha)
    k = len(F1) + len(F2)
    rows = [[_deriv(laguerre(f, alpha), j) for j in range(k)] for f in F1]
    for f in F2:
        rows.append([_reflect(laguerre(f, alpha + j)) for j in range(k)])
    det = det_exact(PolyMatrix.from_rows(rows))
    return det.scale(sign(sum(F1)))


# -- Hahn / Jacobi ------------------------------------------------------------------

def _normalize(raw: Polynomial, lead: GaussianRational) -> BuilderResult:
    if not lead:
        return BuilderResult(raw, ONE_POLY, True, lead)
    return BuilderResult(raw, raw.scale(lead.inverse()), False, lead)


def hahn_divisor(k1: int, k2: int, k3: int, alpha: Scalar, beta: Scalar, N: Scalar) -> Polynomial:
    """``prod_s prod_{i=0}^{kt_s - 2} (xi_s + x + i)^{kt_s - i - 1}``."""
    alpha, beta, N = gr(alpha), gr(beta), gr(N)
    div = ONE_POLY
    for kt, xi in ((k1 + k2, alpha + 1), (k1 + k3, -N), (k2 + k3, -beta - N)):
        for i in range(kt - 1):
            div = div * Polynomial([xi + i, 1]) ** (kt - i - 1)
    return div


def hahn_leading_coefficient(F1: FiniteSet, F2: FiniteSet, F3: FiniteSet,
                             alpha: Scalar, beta: Scalar, N: Scalar) -> GaussianRational:
    """The prescribed leading coefficient ``d_F`` of the quasi Casorati-Hahn
    determinant."""
    alpha, beta, N = gr(alpha), gr(beta), gr(N)
    k1, k2, k3 = len(F1), len(F2), len(F3)
    etas = (alpha + beta + 1, alpha - beta + 1, -alpha - beta - 2 * N - 1)
    d = gr(sign(k1 * k2 + k1 * k3 + k2 * k3))
    for Fj, eta in zip((F1, F2, F3), etas):
        d = d * vandermonde(Fj)
        for f in Fj:
            d = d * pochhammer(f + eta, f) * Fraction(1, factorial(f))
    for u in F1:
        for v in F2:
            d = d * (beta + u - v)
        for w in F3:
            d = d * (alpha + beta + N + 1 + u - w)
    for v in F2:
        for w in F3:
            d = d * (N + alpha + 1 + v - w)
    return d


def quasi_casorati_hahn(F1: FiniteSet, F2: FiniteSet, F3: FiniteSet,
                        alpha: Scalar, beta: Scalar, N: Scalar) -> BuilderResult:
    alpha, beta, N = gr(alpha), gr(beta), gr(N)
    k1, k2, k3 = len(F1), len(F2), len(F3)
    k = k1 + k2 + k3
    blocks = (
        (F1, (alpha + 1, -N), (alpha, beta, N)),
        (F2, (alpha + 1, -beta - N), (alpha, -beta, beta + N)),
        (F3, (-N, -beta - N), (-beta - N - 1, -alpha - N - 1, N)),
    )
    rows = []
    for Fs, (s1, s2), hp in blocks:
        if Fs and _negative_integer(hp[0] + hp[1]):
            raise InvalidParams(f"Hahn parameters {hp} have alpha+beta a negative integer")
        pref = [pochhammer_poly(s1, j) * pochhammer_poly(s2, j) for j in range(k)]
        for f in Fs:
            p = hahn(f, *hp)
            rows.append([pref[j] * _shift(p, j) for j in range(k)])
    det = det_exact(PolyMatrix.from_rows(rows))
    raw = poly_exact_div(det, hahn_divisor(k1, k2, k3, alpha, beta, N))
    return _normalize(raw, hahn_leading_coefficient(F1, F2, F3, alpha, beta, N))


def _negative_integer(z: GaussianRational) -> bool:
    return z.is_real() and z.re.denominator == 1 and z.re < 0


def jacobi_leading_coefficient(F1: FiniteSet, F2: FiniteSet, alpha: Scalar, beta: Scalar) -> GaussianRational:
    """The prescribed leading coefficient ``u_F`` of the quasi Wronskian."""
    alpha, beta = gr(alpha), gr(beta)
    k1, k2 = len(F1), len(F2)
    num = gr(vandermonde(F1) * vandermonde(F2))
    for f in F1:
        num = num * pochhammer(alpha + beta + f + 1, f)
    for f in F2:
        num = num * pochhammer(alpha - beta + f + 1, f)
    for u in F1:
        for v in F2:
            num = num * (beta + u - v)
    den = (
        sign(k1 * (k1 - 1) // 2 + k2 * (k2 - 1) // 2)
        * 2 ** (sum(F1) + sum(F2))
        * factorial_product(F1)
        * factorial_product(F2)
    )
    return num * Fraction(1, den)


def quasi_wronskian_jacobi(F1: FiniteSet, F2: FiniteSet, alpha: Scalar, beta: Scalar) -> BuilderResult:
    alpha, beta = gr(alpha), gr(beta)
    k1, k2 = len(F1), len(F2)
    k = k1 + k2
    rows = [[_deriv(jacobi(f, alpha, beta), j).scale(sign(j)) for j in range(k)] for f in F1]
    one_plus_x = Polynomial([1, 1])
    for f in F2:
        rows.append([
            (one_plus_x ** (k - 1 - j) * jacobi(f, alpha + j, -beta - j)).scale(pochhammer(beta - f, j))
            for j in range(k)
        ])
    det = det_exact(PolyMatrix.from_rows(rows))
    raw = poly_exact_div(det, one_plus_x ** (k2 * (k2 - 1)))
    return _normalize(raw, jacobi_leading_coefficient(F1, F2, alpha, beta))


BUILDERS: dict[str, Callable] = {
    "charlier": casorati_charlier,
    "hermite": wronskian_hermite,
    "meixner": quasi_casorati_meixner,
    "laguerre": quasi_wronskian_laguerre,
    "hahn": quasi_casorati_hahn,
    "jacobi": quasi_wronskian_jacobi,
}
