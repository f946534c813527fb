"""Constructors for the classical families used by the determinant builders.

Normalizations:

* Charlier ``c_n^a`` and Meixner ``m_n^{a,c}`` have leading coefficient ``1/n!``.
* Hahn ``h_n^{alpha,beta,N}`` is ``(-N)_n (alpha+1)_n / n!`` times the
  terminating 3F2; dual Hahn ``R_n`` is written in the variable that stands
  for ``lambda(x) = x(x + alpha + beta + 1)``.
* Hermite is the physicists' ``H_n`` (leading coefficient ``2^n``).
* Laguerre and Jacobi are the standard ``L_n^alpha`` and ``P_n^{alpha,beta}``.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .errors import InvalidParams
from .exact_core import (
    ONE,
    ONE_POLY,
    ZERO_POLY,
    GaussianRational,
    Polynomial,
    Scalar,
    binom_poly,
    compose_affine,
    factorial,
    falling_poly,
    gr,
    pochhammer,
    pochhammer_poly,
    sign,
)
from .report import Check, VerificationReport, summarize_checks


class FamilyId(enum.Enum):
    CHARLIER = "charlier"
    MEIXNER = "meixner"
    HAHN = "hahn"
    DUAL_HAHN = "dualhahn"
    HERMITE = "hermite"
    LAGUERRE = "laguerre"
    JACOBI = "jacobi"

    @classmethod
    def parse(cls, name: str) -> FamilyId:
        key = name.lower().replace("_", "").replace("-", "")
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"unknown family {name!r}")


REQUIRED_PARAMS: dict[FamilyId, tuple[str, ...]] = {
    FamilyId.CHARLIER: ("a",),
    FamilyId.MEIXNER: ("a", "c"),
    FamilyId.HAHN: ("alpha", "beta", "N"),
    FamilyId.DUAL_HAHN: ("alpha", "beta", "N"),
    FamilyId.HERMITE: (),
    FamilyId.LAGUERRE: ("alpha",),
    FamilyId.JACOBI: ("alpha", "beta"),
}

ParamSet = Mapping[str, GaussianRational]


def make_params(**values: Scalar | str) -> dict[str, GaussianRational]:
    return {k: gr(v) for k, v in values.items()}


def _negative_integer(z: GaussianRational) -> bool:
    return z.is_real() and z.re.denominator == 1 and z.re < 0


def validate_params(fid: FamilyId, params: ParamSet) -> tuple[GaussianRational, ...]:
    """Return the required parameters in canonical order, or raise."""
    try:
        vals = tuple(gr(params[name]) for name in REQUIRED_PARAMS[fid])
    except KeyError as exc:
        raise InvalidParams(f"{fid.value} requires parameter {exc.args[0]!r}") from None
    if fid is FamilyId.CHARLIER and not vals[0]:
        raise InvalidParams("Charlier requires a != 0")
    if fid is FamilyId.MEIXNER and (not vals[0] or vals[0] == 1):
        raise InvalidParams("Meixner requires a not in {0, 1}")
    if fid is FamilyId.DUAL_HAHN and _negative_integer(vals[0]):
        raise InvalidParams("dual Hahn requires alpha not a negative integer")
    if fid is FamilyId.HAHN and _negative_integer(vals[0] + vals[1]):
        raise InvalidParams("Hahn requires alpha + beta not a negative integer")
    return vals


def family_poly(fid: FamilyId, n: int, params: ParamSet | None = None) -> Polynomial:
    """The degree-``n`` member of family ``fid``; negative ``n`` gives 0."""
    if n < 0:
        return ZERO_POLY
    vals = validate_params(fid, params or {})
    return _BUILDERS[fid](n, *vals)


# -- individual families (memoized; all arguments hashable) -------------------

@lru_cache(maxsize=None)
def charlier(n: int, a: GaussianRational) -> Polynomial:
    if n < 0:
        return ZERO_POLY
    acc = ZERO_POLY
    binom_n = 1
    for j in range(n + 1):
        # C(n, j) * (x)_j falling
        acc = acc + falling_poly(j).scale((-a) ** (n - j) * binom_n)
        binom_n = binom_n * (n - j) // (j + 1)
    return acc.scale(Fraction(1, factorial(n)))


@lru_cache(maxsize=None)
def meixner(n: int, a: GaussianRational, c: GaussianRational) -> Polynomial:
    if n < 0:
        return ZERO_POLY
    acc = ZERO_POLY
    for j in range(n + 1):
        # binom(-x - c, n - j) = binom_poly(n - j) evaluated at -x - c
        tail = compose_affine(binom_poly(n - j), -1, -c)
        acc = acc + (binom_poly(j) * tail).scale(a ** (-j))
    return acc.scale(a**n / (ONE - a) ** n)


@lru_cache(maxsize=None)
def hahn(n: int, alpha: GaussianRational, beta: GaussianRational, N: GaussianRational) -> Polynomial:
    if n < 0:
        return ZERO_POLY
    # (-N)_n/(-N)_k = (-N+k)_{n-k}, likewise for (alpha+1); no division by (-N)_k
    acc = ZERO_POLY
    ab1 = alpha + beta + 1
    for k in range(n + 1):
        coef = (
            pochhammer(-n, k)
            * pochhammer(n + ab1, k)
            * pochhammer(-N + k, n - k)
            * pochhammer(alpha + 1 + k, n - k)
            * Fraction(sign(k), factorial(k))
        )
        acc = acc + falling_poly(k).scale(coef)
    return acc.scale(Fraction(1, factorial(n)))


@lru_cache(maxsize=None)
def dual_hahn(n: int, alpha: GaussianRational, beta: GaussianRational, N: GaussianRational) -> Polynomial:
    if n < 0:
        return ZERO_POLY
    ab1 = alpha + beta + 1
    acc = ZERO_POLY
    prod = ONE_POLY
    for j in range(n + 1):
        if j > 0:
            i = j - 1
            prod = prod * Polynomial([-(i * (ab1 + i)), 1])
        coef = (
            pochhammer(-n, j)
            * pochhammer(-N + j, n - j)
            * pochhammer(alpha + 1 + j, n - j)
            * Fraction(sign(j), factorial(j))
        )
        acc = acc + prod.scale(coef)
    return acc.scale(Fraction(1, factorial(n)))


@lru_cache(maxsize=None)
def hermite(n: int) -> Polynomial:
    if n < 0:
        return ZERO_POLY
    coeffs = [0] * (n + 1)
    for j in range(n // 2 + 1):
        coeffs[n - 2 * j] = Fraction(
            sign(j) * 2 ** (n - 2 * j) * factorial(n), factorial(j) * factorial(n - 2 * j)
        )
    return Polynomial(coeffs)


@lru_cache(maxsize=None)
def laguerre(n: int, alpha: GaussianRational) -> Polynomial:
    if n < 0:
        return ZERO_POLY
    coeffs = [
        pochhammer(alpha + j + 1, n - j) * Fraction(sign(j), factorial(n - j) * factorial(j))
        for j in range(n + 1)
    ]
    return Polynomial(coeffs)


@lru_cache(maxsize=None)
def jacobi(n: int, alpha: GaussianRational, beta: GaussianRational) -> Polynomial:
    if n < 0:
        return ZERO_POLY
    half_minus = Polynomial([Fraction(-1, 2), Fraction(1, 2)])  # (x-1)/2
    half_plus = Polynomial([Fraction(1, 2), Fraction(1, 2)])  # (x+1)/2
    acc = ZERO_POLY
    for s in range(n + 1):
        coef = (
            pochhammer(alpha + s + 1, n - s)
            * pochhammer(beta + n - s + 1, s)
            * Fraction(1, factorial(n - s) * factorial(s))
        )
        acc = acc + (half_minus**s * half_plus ** (n - s)).scale(coef)
    return acc


_BUILDERS = {
    FamilyId.CHARLIER: charlier,
    FamilyId.MEIXNER: meixner,
    FamilyId.HAHN: hahn,
    FamilyId.DUAL_HAHN: dual_hahn,
    FamilyId.HERMITE: hermite,
    FamilyId.LAGUERRE: laguerre,
    FamilyId.JACOBI: jacobi,
}


def lambda_map(alpha: Scalar, beta: Scalar) -> Polynomial:
    """``x (x + alpha + beta + 1)``."""
    return Polynomial([0, gr(alpha) + gr(beta) + 1, 1])


def pochhammer_ext(base: Scalar, n: int) -> GaussianRational:
    """Pochhammer symbol extended to negative ``n``: ``(b)_{-n} = 1/((b-1)...(b-n))``."""
    base = gr(base)
    if n >= 0:
        return pochhammer(base, n)
    return pochhammer(base + n, -n).inverse()


# -- structural identities -----------------------------------------------------

def _poly_check(name: str, lhs: Polynomial, rhs: Polynomial) -> Check:
    if lhs == rhs:
        return Check(name, True)
    return Check(name, False, f"lhs={lhs}; rhs={rhs}")


def _scalar_check(name: str, lhs: GaussianRational, rhs: GaussianRational) -> Check:
    if lhs == rhs:
        return Check(name, True)
    return Check(name, False, f"lhs={lhs}; rhs={rhs}")


def _charlier_checks(a: GaussianRational, n_max: int) -> list[Check]:
    x = Polynomial.x()
    checks = []
    for n in range(n_max + 1):
        c_prev, c_n, c_next = charlier(n - 1, a), charlier(n, a), charlier(n + 1, a)
        checks.append(_poly_check(
            f"three-term recurrence n={n}",
            x * c_n,
            c_next.scale(n + 1) + c_n.scale(n + a) + c_prev.scale(a),
        ))
        lhs = (-x) * c_n.shift(-1) + (x + a) * c_n - c_n.shift(1).scale(a)
        checks.append(_poly_check(f"difference equation n={n}", lhs, c_n.scale(n)))
        checks.append(_poly_check(f"forward-difference ladder n={n}", c_n.delta(), c_prev))
        checks.append(_scalar_check(
            f"value at 0 n={n}", c_n(0), (-a) ** n * Fraction(1, factorial(n))
        ))
    for n in range(n_max + 1):
        for m in range(n_max + 1):
            checks.append(_scalar_check(
                f"duality n={n} m={m}",
                (-a) ** m * factorial(n) * charlier(n, a)(m),
                (-a) ** n * factorial(m) * charlier(m, a)(n),
            ))
    return checks


def _meixner_checks(a: GaussianRational, c: GaussianRational, n_max: int) -> list[Check]:
    checks = []
    inv_a = a.inverse()
    for n in range(n_max + 1):
        checks.append(_poly_check(
            f"reflection n={n}",
            meixner(n, a, c),
            compose_affine(meixner(n, inv_a, c), -1, -c).scale(sign(n)),
        ))
    for n in range(n_max + 1):
        for m in range(n_max + 1):
            lhs = a ** (m - n) * factorial(n) * pochhammer_ext(1 + c, m - 1) * meixner(n, a, c)(m)
            rhs = (a - 1) ** (m - n) * factorial(m) * pochhammer_ext(1 + c, n - 1) * meixner(m, a, c)(n)
            checks.append(_scalar_check(f"duality n={n} m={m}", lhs, rhs))
    return checks


def hypergeometric_3f2_poly(n: int, upper_x_shift: Scalar, alpha: Scalar, N: Scalar,
                            reflect: bool) -> Polynomial:
    """``(-N)_n (alpha+1)_n / n! * 3F2(-n, -x, x + shift; alpha+1, -N; 1)`` when
    ``reflect`` is True, else with ``x + shift`` replaced by the constant
    ``shift`` (the Hahn form).  Summed term by term with genuine division by
    ``(alpha+1)_k (-N)_k``; used as an independent oracle."""
    alpha, N, shift = gr(alpha), gr(N), gr(upper_x_shift)
    acc = ZERO_POLY
    for k in range(n + 1):
        den = pochhammer(alpha + 1, k) * pochhammer(-N, k) * factorial(k)
        minus_x_k = compose_affine(pochhammer_poly(0, k), -1, 0)  # (-x)_k
        third = pochhammer_poly(shift, k) if reflect else Polynomial.constant(pochhammer(shift, k))
        acc = acc + (minus_x_k * third).scale(pochhammer(-n, k) / den)
    return acc.scale(pochhammer(-N, n) * pochhammer(alpha + 1, n) * Fraction(1, factorial(n)))


def _hahn_checks(alpha: GaussianRational, beta: GaussianRational, N: GaussianRational,
                 n_max: int) -> list[Check]:
    checks = []
    lam = lambda_map(alpha, beta)
    ab1 = alpha + beta + 1
    for n in range(n_max + 1):
        if any(not (pochhammer(alpha + 1, k) * pochhammer(-N, k)) for k in range(n + 1)):
            # the hypergeometric form divides by (alpha+1)_k (-N)_k
            checks.append(Check(f"hypergeometric forms n={n}", None, "series denominator vanishes"))
            continue
        R_of_lambda = _compose(dual_hahn(n, alpha, beta, N), lam)
        checks.append(_poly_check(
            f"dual Hahn hypergeometric form n={n}",
            R_of_lambda,
            hypergeometric_3f2_poly(n, ab1, alpha, N, reflect=True),
        ))
        checks.append(_poly_check(
            f"Hahn hypergeometric form n={n}",
            hahn(n, alpha, beta, N),
            hypergeometric_3f2_poly(n, n + ab1, alpha, N, reflect=False),
        ))
    for n in range(n_max + 1):
        for m in range(n_max + 1):
            lhs = pochhammer(-N, m) * pochhammer(alpha + 1, m) * Fraction(1, factorial(m)) * hahn(n, alpha, beta, N)(m)
            rhs = pochhammer(-N, n) * pochhammer(alpha + 1, n) * Fraction(1, factorial(n)) * dual_hahn(m, alpha, beta, N)(lam(n))
            checks.append(_scalar_check(f"Hahn/dual Hahn duality n={n} m={m}", lhs, rhs))
    return checks


def _compose(p: Polynomial, q: Polynomial) -> Polynomial:
    """``p(q(x))`` by Horner."""
    acc = ZERO_POLY
    for c in reversed(p.coeffs):
        acc = acc * q + Polynomial.constant(c)
    return acc


def _hermite_checks(n_max: int) -> list[Check]:
    x = Polynomial.x()
    checks = []
    for n in range(n_max + 1):
        checks.append(_poly_check(
            f"derivative ladder n={n}", hermite(n).derivative(), hermite(n - 1).scale(2 * n)
        ))
        checks.append(_poly_check(
            f"three-term recurrence n={n}",
            hermite(n + 1),
            (x * hermite(n)).scale(2) - hermite(n - 1).scale(2 * n),
        ))
    return checks


def _laguerre_checks(alpha: GaussianRational, n_max: int) -> list[Check]:
    return [
        _poly_check(
            f"derivative ladder n={n}",
            laguerre(n, alpha).derivative(),
            -laguerre(n - 1, alpha + 1),
        )
        for n in range(n_max + 1)
    ]


def _jacobi_checks(alpha: GaussianRational, beta: GaussianRational, n_max: int) -> list[Check]:
    return [
        _poly_check(
            f"derivative ladder n={n}",
            jacobi(n, alpha, beta).derivative(),
            jacobi(n - 1, alpha + 1, beta + 1).scale((n + alpha + beta + 1) * Fraction(1, 2)),
        )
        for n in range(n_max + 1)
    ]


def _degree_checks(fid: FamilyId, vals: tuple, n_max: int) -> list[Check]:
    checks = []
    for n in range(n_max + 1):
        p = _BUILDERS[fid](n, *vals)
        ok = p.degree == n
        checks.append(Check(f"degree n={n}", ok, "" if ok else f"degree {p.degree}"))
    if fid in (FamilyId.CHARLIER, FamilyId.MEIXNER):
        for n in range(n_max + 1):
            lead = _BUILDERS[fid](n, *vals).leading
            checks.append(_scalar_check(f"leading coefficient n={n}", lead, gr(Fraction(1, factorial(n)))))
    return checks


def family_identity_check(fid: FamilyId, params: ParamSet | None, n_max: int) -> VerificationReport:
    """Check every structural identity recorded for ``fid`` up to ``n_max``."""
    params = params or {}
    vals = validate_params(fid, params)
    checks = _degree_checks(fid, vals, n_max)
    if fid is FamilyId.CHARLIER:
        checks += _charlier_checks(*vals, n_max)
    elif fid is FamilyId.MEIXNER:
        checks += _meixner_checks(*vals, n_max)
    elif fid in (FamilyId.HAHN, FamilyId.DUAL_HAHN):
        checks += _hahn_checks(*vals, n_max)
    elif fid is FamilyId.HERMITE:
        checks += _hermite_checks(n_max)
    elif fid is FamilyId.LAGUERRE:
        checks += _laguerre_checks(*vals, n_max)
    elif fid is FamilyId.JACOBI:
        checks += _jacobi_checks(*vals, n_max)
    inputs = {k: str(gr(v)) for k, v in params.items()}
    inputs["n_max"] = str(n_max)
    return summarize_checks(f"identities:{fid.value}", inputs, checks)
