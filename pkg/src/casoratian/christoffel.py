"""Christoffel transforms and the two determinantal representations of the
orthogonal polynomials of Krall-Charlier and Krall-Meixner measures.

Also: discrete inner products against the Charlier-type measures (truncated
with a certified tail bound) and the dual Hahn measures (exact finite sums),
plus the normalisation and norm identities that tie the two representations
together.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .determinants import PolyMatrix, casorati_charlier, det_exact, det_scalar
from .errors import (
    EmptyComponent,
    InternalInconsistency,
    InvalidParams,
    TailBoundUnavailable,
    ZeroDenominator,
)
from .exact_core import (
    ONE,
    ZERO,
    GaussianRational,
    Polynomial,
    Scalar,
    compose_affine,
    factorial,
    gr,
    pochhammer,
    poly_exact_div,
    sign,
)
from .families import FamilyId, charlier, dual_hahn, family_poly, lambda_map, make_params, meixner
from .report import Check, VerificationReport, summarize_checks
from .setcalc import FiniteSet, factorial_product, involute, set_text, vandermonde, weight


# -- sequences and nodes ---------------------------------------------------------

@dataclass(frozen=True)
class SequenceProvider:
    """A family with instantiated parameters, exposing ``p_n`` on demand."""

    family: FamilyId
    params: tuple[tuple[str, GaussianRational], ...] = ()

    @classmethod
    def of(cls, family: FamilyId, **params: Scalar) -> SequenceProvider:
        return cls(family, tuple(sorted(make_params(**params).items())))

    def param(self, name: str) -> GaussianRational:
        return dict(self.params)[name]

    def poly(self, n: int) -> Polynomial:
        return family_poly(self.family, n, dict(self.params))


@dataclass(frozen=True)
class Node:
    """A point of the Christoffel multiplier, optionally with a custom
    evaluator ``value(n)`` that must equal ``p_n(point)``."""

    point: GaussianRational
    value: Callable[[int], GaussianRational] | None = field(default=None, compare=False)


def plain_nodes(points: Sequence[Scalar]) -> list[Node]:
    return [Node(gr(p)) for p in points]


def meixner_nodes(F1: FiniteSet, F2: FiniteSet, a: Scalar, c: Scalar) -> list[Node]:
    """Nodes ``f`` for ``f in F1`` and ``-c-f`` for ``f in F2``; the second block
    is evaluated through ``m_n^{a,c}(-c-f) = (-1)^n m_n^{1/a,c}(f)``."""
    a, c = gr(a), gr(c)
    inv_a = a.inverse()
    nodes = plain_nodes(F1)
    for f in F2:
        nodes.append(Node(-c - f, lambda n, f=f: sign(n) * meixner(n, inv_a, c)(f)))
    return nodes


def _node_value(seq: SequenceProvider, node: Node, n: int) -> GaussianRational:
    if node.value is not None:
        return node.value(n)
    return seq.poly(n)(node.point)


def _check_distinct(nodes: Sequence[Node]) -> None:
    pts = [nd.point for nd in nodes]
    if len(set(pts)) != len(pts):
        raise InvalidParams(f"coincident Christoffel nodes {[str(p) for p in pts]}")


def phi(seq: SequenceProvider, nodes: Sequence[Node], n: int) -> GaussianRational:
    """``Phi_n = |p_{n+j-1}(node_i)|``."""
    k = len(nodes)
    return det_scalar([[_node_value(seq, nd, n + j) for j in range(k)] for nd in nodes])


def christoffel_q(seq: SequenceProvider, nodes: Sequence[Node], n: int) -> Polynomial:
    """Orthogonal polynomial of degree ``<= n`` for the measure multiplied by
    ``prod (x - node)``: the bordered determinant divided by that product.

    The division must be exact.  When ``Phi_n != 0`` the leading coefficient
    is checked against ``(-1)^k lead(p_{n+k}) Phi_n``.
    """
    _check_distinct(nodes)
    k = len(nodes)
    rows = [[seq.poly(n + j) for j in range(k + 1)]]
    for nd in nodes:
        rows.append([Polynomial.constant(_node_value(seq, nd, n + j)) for j in range(k + 1)])
    numerator = det_exact(PolyMatrix.from_rows(rows))
    q = poly_exact_div(numerator, Polynomial.from_roots(nd.point for nd in nodes))
    ph = phi(seq, nodes, n)
    if ph:
        expected = sign(k) * seq.poly(n + k).leading * ph
        if q.degree != n or q.leading != expected:
            raise InternalInconsistency(
                f"leading coefficient law failed at n={n}: {q.leading} vs {expected}"
            )
    elif q.degree == n:
        raise InternalInconsistency(f"Phi_{n} = 0 but q_{n} has full degree")
    return q


def christoffel_q_charlier(F: FiniteSet, a: Scalar, n: int) -> Polynomial:
    return christoffel_q(SequenceProvider.of(FamilyId.CHARLIER, a=a), plain_nodes(F), n)


def christoffel_q_meixner(F1: FiniteSet, F2: FiniteSet, a: Scalar, c: Scalar, n: int) -> Polynomial:
    """Christoffel polynomial for ``prod_{F1}(x-f) prod_{F2}(x+c+f)`` times the
    Meixner measure, built with the reflected second block and the
    ``(-1)^{n k2}`` correction."""
    a, c = gr(a), gr(c)
    inv_a = a.inverse()
    k = len(F1) + len(F2)
    rows = [[meixner(n + j, a, c) for j in range(k + 1)]]
    for f in F1:
        rows.append([Polynomial.constant(meixner(n + j, a, c)(f)) for j in range(k + 1)])
    for f in F2:
        rows.append([Polynomial.constant(sign(j) * meixner(n + j, inv_a, c)(f)) for j in range(k + 1)])
    numerator = det_exact(PolyMatrix.from_rows(rows)).scale(sign(n * len(F2)))
    divisor = Polynomial.from_roots(list(F1) + [-c - f for f in F2])
    return poly_exact_div(numerator, divisor)


# -- the second representation ----------------------------------------------------

class Kind(enum.Enum):
    CHARLIER = "charlier"
    MEIXNER = "meixner"

    @classmethod
    def parse(cls, name: str) -> Kind:
        return cls(name.lower())


def qtilde_charlier(F: FiniteSet, a: Scalar, n: int) -> Polynomial:
    """First row ``(-1)^{j-1} c^a_{n-j+1}(x - max F - 1)``, then constant rows
    ``c^{-a}_g(-n+j-2)`` for ``g`` in ``I(F)``."""
    a = gr(a)
    if not a:
        raise InvalidParams("Charlier requires a != 0")
    if not F:
        raise EmptyComponent("the second representation needs max F")
    G = involute(F)
    m = len(G)
    top = F.max
    rows = [[compose_affine(charlier(n - j, a), 1, -top - 1).scale(sign(j)) for j in range(m + 1)]]
    for g in G:
        rows.append([Polynomial.constant(charlier(g, -a)(-n + j - 1)) for j in range(m + 1)])
    return det_exact(PolyMatrix.from_rows(rows))


def qtilde_meixner(F1: FiniteSet, F2: FiniteSet, a: Scalar, c: Scalar, n: int) -> Polynomial:
    """First row ``m^{a,ct}_{n-j+1}(x - max F1 - 1) / (a-1)^{j-1}`` with
    ``ct = c + max F1 + max F2 + 2``; constant rows ``m_g^{a,2-ct}(-n+j-2)``
    over ``I(F1)`` and ``m_g^{1/a,2-ct}(-n+j-2)/a^{j-1}`` over ``I(F2)``.
    """
    a, c = gr(a), gr(c)
    if not a or a == 1:
        raise InvalidParams("Meixner requires a not in {0, 1}")
    if not F1 or not F2:
        raise EmptyComponent("the second representation needs max F1 and max F2")
    G1, G2 = involute(F1), involute(F2)
    m = len(G1) + len(G2)
    ct = c + F1.max + F2.max + 2
    inv_a = a.inverse()
    inv_am1 = (a - 1).inverse()
    rows = [[
        compose_affine(meixner(n - j, a, ct), 1, -F1.max - 1).scale(inv_am1**j)
        for j in range(m + 1)
    ]]
    for g in G1:
        rows.append([Polynomial.constant(meixner(g, a, 2 - ct)(-n + j - 1)) for j in range(m + 1)])
    for g in G2:
        rows.append([
            Polynomial.constant(meixner(g, inv_a, 2 - ct)(-n + j - 1) * inv_a**j) for j in range(m + 1)
        ])
    return det_exact(PolyMatrix.from_rows(rows))


def _unpack(kind: Kind, sets: Sequence[FiniteSet], params) -> tuple:
    p = {k: gr(v) for k, v in params.items()}
    try:
        if kind is Kind.CHARLIER:
            (F,) = sets
            return (F, p["a"])
        F1, F2 = sets
        return (F1, F2, p["a"], p["c"])
    except (KeyError, ValueError) as exc:
        raise InvalidParams(f"bad sets/params for {kind.value}: {exc}") from None


def qtilde(kind: Kind, sets: Sequence[FiniteSet], params, n: int) -> Polynomial:
    args = _unpack(kind, sets, params)
    if kind is Kind.CHARLIER:
        return qtilde_charlier(*args, n)
    return qtilde_meixner(*args, n)


def christoffel_q_for(kind: Kind, sets: Sequence[FiniteSet], params, n: int) -> Polynomial:
    args = _unpack(kind, sets, params)
    if kind is Kind.CHARLIER:
        return christoffel_q_charlier(*args, n)
    return christoffel_q_meixner(*args, n)


def gamma_charlier(F: FiniteSet, a: Scalar, n: int) -> GaussianRational:
    """The proportionality constant between the two Charlier representations,
    in closed form through Casoratians at ``x = n`` and ``x = -n``."""
    a = gr(a)
    k, w = len(F), weight(F)
    denom_cas = casorati_charlier(involute(F), -a, check_alt=False)(-n)
    if not denom_cas:
        raise ZeroDenominator(f"C^{{-a}}_{{I(F),-n}} vanishes for F={F}, a={a}, n={n}")
    num_cas = casorati_charlier(F, a, check_alt=False)(n)
    fact = math.prod(math.factorial(n + i) for i in range(1, k + 1))
    return sign(k) * (-a) ** (k * n - w) * factorial_product(F) * num_cas / (denom_cas * fact)


def _inputs(kind_name: str, sets: Sequence[FiniteSet], params, **extra) -> dict[str, str]:
    out = {f"F{i + 1}" if len(sets) > 1 else "F": set_text(S) for i, S in enumerate(sets)}
    out.update({k: str(gr(v)) for k, v in params.items()})
    out.update({k: str(v) for k, v in extra.items()})
    out["kind"] = kind_name
    return out


def proportionality_check(kind: Kind, sets: Sequence[FiniteSet], params, n_max: int) -> VerificationReport:
    """``q_n == gamma_n * qtilde_n`` for ``n <= n_max``.

    Charlier uses the closed-form ``gamma_n``; Meixner uses the ratio of
    leading coefficients.
    """
    inputs = _inputs(kind.value, sets, params, n_max=n_max)
    if any(not S for S in sets):
        return summarize_checks("christoffel:proportionality", inputs, [],
                                ["empty component: second representation undefined, skipped"])
    args = _unpack(kind, sets, params)
    checks: list[Check] = []
    for n in range(n_max + 1):
        q = christoffel_q_for(kind, sets, params, n)
        qt = qtilde(kind, sets, params, n)
        if kind is Kind.CHARLIER:
            try:
                g = gamma_charlier(*args, n)
            except ZeroDenominator as exc:
                checks.append(Check(f"n={n}", None, str(exc)))
                continue
        else:
            if not qt:
                checks.append(Check(f"n={n}", None, "second representation vanishes"))
                continue
            g = q.leading / qt.leading
        ok = q == qt.scale(g)
        checks.append(Check(f"n={n}", ok, "" if ok else f"q={q}; gamma*qtilde={qt.scale(g)}"))
    return summarize_checks("christoffel:proportionality", inputs, checks)


def ratio_identity_check(F: FiniteSet, a: Scalar, n_max: int) -> VerificationReport:
    """Cross-multiplied ratio identity between ``C^a_{F,n}`` and
    ``C^{-a}_{I(F),-n}``, plus the ``n = 0`` base case in closed form."""
    a = gr(a)
    inputs = {"F": set_text(F), "a": str(a), "n_max": str(n_max)}
    if not F.is_positive() or not F:
        raise InvalidParams("ratio identity needs a nonempty set of positive integers")
    C = casorati_charlier(F, a, check_alt=False)
    Ct = casorati_charlier(involute(F), -a, check_alt=False)
    checks = []
    for n in range(n_max + 1):
        lhs = C(n + 1) * Ct(-n)
        rhs = C(n) * Ct(-n - 1)
        checks.append(Check(f"ratio n={n}", lhs == rhs, "" if lhs == rhs else f"{lhs} vs {rhs}"))
    checks += _base_checks(F, a, C(0), Ct(0))
    return summarize_checks("christoffel:ratio", inputs, checks)


def _base_checks(F: FiniteSet, a: GaussianRational, c0: GaussianRational, ct0: GaussianRational) -> list[Check]:
    w = weight(F)
    G = involute(F)
    closed = (-a) ** w * vandermonde(F) / factorial_product(F)
    base = sign(w) * ct0
    vf, vg = vandermonde(F) / factorial_product(F), vandermonde(G) / factorial_product(G)
    checks = [
        Check("C_F(0) closed form", c0 == closed, f"{c0} vs {closed}"),
        Check("C_F(0) = (-1)^w C_I(F)(0)", c0 == base, f"{c0} vs {base}"),
        Check("V_F/prod f! invariance", vf == vg, f"{vf} vs {vg}"),
    ]
    for c in checks:
        if c.passed:
            c.witness = ""
    return checks


def base_case_check(F: FiniteSet, a: Scalar) -> VerificationReport:
    """The ``n = 0`` value of the Casoratian in closed form, its relation to
    the involuted set, and the invariance of ``V_F / prod f!``.

    Uses scalar determinants at ``x = 0`` only, so large sets stay cheap.
    """
    a = gr(a)
    if not F or not F.is_positive():
        raise InvalidParams("base case needs a nonempty set of positive integers")
    G = involute(F)

    def at_zero(S: FiniteSet, b: GaussianRational) -> GaussianRational:
        k = len(S)
        return det_scalar([[charlier(f, b)(j) for j in range(k)] for f in S])

    checks = _base_checks(F, a, at_zero(F, a), at_zero(G, -a))
    return summarize_checks("christoffel:base-case", {"F": set_text(F), "a": str(a)}, checks)


# -- discrete measures -------------------------------------------------------------

class MeasureKind(enum.Enum):
    CHARLIER_BASE = "charlier"
    KRALL_CHARLIER = "krall-charlier"
    DUAL_HAHN_BASE = "dualhahn"
    KRALL_DUAL_HAHN = "krall-dualhahn"


@dataclass(frozen=True)
class MeasureSpec:
    kind: MeasureKind
    params: tuple[tuple[str, GaussianRational], ...]
    sets: tuple[FiniteSet, ...] = ()
    truncation: int = 200

    @classmethod
    def of(cls, kind: MeasureKind, sets: Sequence[FiniteSet] = (), truncation: int = 200,
           **params: Scalar) -> MeasureSpec:
        return cls(kind, tuple(sorted(make_params(**params).items())), tuple(sets), truncation)

    def param(self, name: str) -> GaussianRational:
        try:
            return dict(self.params)[name]
        except KeyError:
            raise InvalidParams(f"measure {self.kind.value} needs parameter {name!r}") from None


@dataclass(frozen=True)
class Truncated:
    """A partial sum with a rigorous bound on the omitted tail."""

    value: GaussianRational
    bound: Fraction


def _tail_bound(P: Polynomial, a_abs: Fraction, X: int) -> Fraction:
    """Bound ``sum_{x > X} |P(x)| |a|^x / x!`` via the majorant
    ``B x^d |a|^x / x!`` whose term ratio is decreasing in ``x``."""
    if not P:
        return Fraction(0)
    d = int(P.degree)
    B = sum((c.abs_bound() for c in P.coeffs), Fraction(0))
    x = X + 1
    ratio = (Fraction(x + 1, x) ** d) * a_abs / (x + 1)
    if ratio > Fraction(1, 2):
        raise TailBoundUnavailable(f"truncation X={X} too small (term ratio {float(ratio):.3g} > 1/2)")
    first = B * Fraction(x) ** d * a_abs**x / math.factorial(x)
    return 2 * first


def exp_truncated(a: Scalar, X: int) -> Truncated:
    """``sum_{x=0}^{X} a^x/x!`` with its tail bound."""
    a = gr(a)
    total = ZERO
    term = ONE
    for x in range(X + 1):
        total = total + term
        term = term * a * Fraction(1, x + 1)
    return Truncated(total, _tail_bound(Polynomial.constant(1), a.abs_bound(), X))


def dual_hahn_weights(alpha: Scalar, beta: Scalar, N: int) -> list[tuple[GaussianRational, GaussianRational]]:
    """Nodes ``lambda(x)`` and masses of the dual Hahn measure, ``x = 0..N``."""
    alpha, beta = gr(alpha), gr(beta)
    lam = lambda_map(alpha, beta)
    ab1 = alpha + beta + 1
    out = []
    for x in range(N + 1):
        num = (2 * x + ab1) * pochhammer(alpha + 1, x) * pochhammer(-N, x) * factorial(N)
        den = sign(x) * pochhammer(x + ab1, N + 1) * pochhammer(beta + 1, x) * factorial(x)
        if not den:
            raise InvalidParams("dual Hahn weight has a vanishing denominator")
        out.append((lam(x), num / den))
    return out


def _positive_int(z: GaussianRational, name: str) -> int:
    if not (z.is_real() and z.re.denominator == 1 and z.re > 0):
        raise InvalidParams(f"{name} must be a positive integer, got {z}")
    return int(z.re)


def krall_dual_hahn_points(sets: Sequence[FiniteSet], alpha: Scalar, beta: Scalar, N: Scalar) -> list[GaussianRational]:
    """``lambda(f)`` over F1, ``lambda(f - beta)`` over F2, ``lambda(N - f)`` over F3."""
    alpha, beta, N = gr(alpha), gr(beta), gr(N)
    lam = lambda_map(alpha, beta)
    F1, F2, F3 = (tuple(sets) + ((), (), ()))[:3]
    return ([lam(gr(f)) for f in F1] + [lam(f - beta) for f in F2] + [lam(N - f) for f in F3])


def discrete_inner(m: MeasureSpec, p: Polynomial, q: Polynomial) -> GaussianRational | Truncated:
    """``<p, q>`` against the measure ``m``.

    Dual Hahn kinds give an exact finite sum; Charlier kinds a
    :class:`Truncated` partial sum over ``x = 0..truncation``.
    """
    if m.kind in (MeasureKind.CHARLIER_BASE, MeasureKind.KRALL_CHARLIER):
        a = m.param("a")
        if not a.is_real() or not a:
            raise InvalidParams("Charlier measures need real nonzero a")
        mult = Polynomial.constant(1)
        if m.kind is MeasureKind.KRALL_CHARLIER:
            (F,) = m.sets
            mult = Polynomial.from_roots(F)
        P = p * q * mult
        X = m.truncation
        bound = _tail_bound(P, abs(a.re), X)
        total = ZERO
        w = ONE
        for x in range(X + 1):
            total = total + P(x) * w
            w = w * a * Fraction(1, x + 1)
        return Truncated(total, bound)
    alpha, beta = m.param("alpha"), m.param("beta")
    N = _positive_int(m.param("N"), "N")
    mult = Polynomial.constant(1)
    if m.kind is MeasureKind.KRALL_DUAL_HAHN:
        mult = Polynomial.from_roots(krall_dual_hahn_points(m.sets, alpha, beta, N))
    P = p * q * mult
    total = ZERO
    for node, mass in dual_hahn_weights(alpha, beta, N):
        total = total + P(node) * mass
    return total


# -- the d-claim and its ingredient identity ---------------------------------------

def _sci(q: Fraction) -> str:
    """Order of magnitude of a possibly tiny rational, without float underflow."""
    if not q:
        return "0"
    e = math.log10(abs(q.numerator)) - math.log10(q.denominator)
    k = math.floor(e)
    return f"{10 ** (e - k):.1f}e{k}"


def _gsum(F: FiniteSet, a: GaussianRational, j: int, arg: int) -> GaussianRational:
    """``sum_i (-g_i-1)^j c^{-a}_{g_i}(arg) / (p'(g_i) c^{-a}_{g_i}(0))`` over
    ``G = I(F)``, with ``p'(g_i) = prod_{l != i} (g_i - g_l)``."""
    G = involute(F)
    total = ZERO
    for i, g in enumerate(G):
        dp = math.prod(g - h for l, h in enumerate(G) if l != i)
        total = total + gr(-g - 1) ** j * charlier(g, -a)(arg) / (charlier(g, -a)(0) * dp)
    return total


def claim_d_check(F: FiniteSet, a: Scalar, n_max: int, X: int = 200,
                  rel_bound_max: Fraction = Fraction(1, 10**25)) -> VerificationReport:
    """Truncated check of ``d(n, a, F) = (-1)^m a^{n+k} e^a`` and of the
    inner-product identity it rests on (all ``j <= n-1``, ``l = 0..m``)."""
    a = gr(a)
    if not a.is_real() or a.re <= 0:
        raise InvalidParams("claim check needs real a > 0")
    if not F or not F.is_positive():
        raise InvalidParams("claim check needs a nonempty set of positive integers")
    G = involute(F)
    m, k, top = len(G), len(F), F.max
    measure = MeasureSpec.of(MeasureKind.KRALL_CHARLIER, [F], truncation=X, a=a)
    E = exp_truncated(a, X)
    y = Polynomial([-top - 1, 1])
    a_gm = a ** G.max
    checks = []
    inputs = {"F": set_text(F), "a": str(a), "n_max": str(n_max), "X": str(X)}

    def within(name: str, approx: GaussianRational, exact_scale: GaussianRational,
               bound: Fraction, target: GaussianRational, target_bound: Fraction) -> None:
        total_bound = bound + target_bound
        diff = (approx - target).abs_bound()
        ok = diff <= total_bound
        checks.append(Check(name, ok, "" if ok else f"|diff|={float(diff):.3e} > bound {float(total_bound):.3e}"))

    for n in range(n_max + 1):
        inner = discrete_inner(measure, y**n, compose_affine(charlier(n - m, a), 1, -top - 1))
        S = _gsum(F, a, n, -n + m - 1)
        coeff = a_gm * S
        d = sign(m) * (inner.value - sign(n - 1) * E.value * coeff)
        d_bound = inner.bound + coeff.abs_bound() * E.bound
        target = sign(m) * a ** (n + k) * E.value
        t_bound = (a ** (n + k)).abs_bound() * E.bound
        within(f"claim n={n}", d, coeff, d_bound, target, t_bound)
        rel = (d_bound + t_bound) / target.abs_bound()
        checks.append(Check(
            f"claim n={n} relative bound", rel < rel_bound_max, f"relative bound {_sci(rel)}"
        ))
        for j in range(n):
            for l in range(m + 1):
                lhs = discrete_inner(measure, y**j, compose_affine(charlier(n - l, a), 1, -top - 1))
                coef = sign(n + l + m - 1) * a_gm * _gsum(F, a, j, -n + l - 1)
                rhs = coef * E.value
                within(f"ingredient n={n} j={j} l={l}", lhs.value, coef, lhs.bound, rhs,
                       coef.abs_bound() * E.bound)
                if n - l < 0 and lhs.value:
                    checks.append(Check(f"ingredient n={n} j={j} l={l} vanishing", False, str(lhs.value)))
    for c in checks:
        if c.passed and "relative bound" not in c.name:
            c.witness = ""
    return summarize_checks("christoffel:claim-d", inputs, checks)


# -- Lemma-level check on finite dual Hahn measures --------------------------------

def sze_check(sets: Sequence[FiniteSet], alpha: Scalar, beta: Scalar, N: Scalar, n_max: int) -> VerificationReport:
    """Orthogonality and norm relation of the Christoffel polynomials for a
    Krall-dual-Hahn measure, by exact finite sums."""
    alpha, beta, N = gr(alpha), gr(beta), gr(N)
    Nint = _positive_int(N, "N")
    seq = SequenceProvider.of(FamilyId.DUAL_HAHN, alpha=alpha, beta=beta, N=N)
    nodes = plain_nodes(krall_dual_hahn_points(sets, alpha, beta, N))
    k = len(nodes)
    inputs = {f"F{i + 1}": set_text(S) for i, S in enumerate(sets)}
    inputs.update(alpha=str(alpha), beta=str(beta), N=str(N), n_max=str(n_max))
    notes: list[str] = []
    try:
        _check_distinct(nodes)
    except InvalidParams as exc:
        return summarize_checks("christoffel:sze", inputs, [], [f"skipped: {exc}"])
    if n_max + k > Nint:
        raise InvalidParams(f"need n_max + k <= N, got {n_max} + {k} > {Nint}")
    base = MeasureSpec.of(MeasureKind.DUAL_HAHN_BASE, alpha=alpha, beta=beta, N=N)
    krall = MeasureSpec.of(MeasureKind.KRALL_DUAL_HAHN, sets, alpha=alpha, beta=beta, N=N)
    checks: list[Check] = []
    qs: list[Polynomial | None] = []
    for n in range(n_max + 1):
        ph, ph_next = phi(seq, nodes, n), phi(seq, nodes, n + 1)
        if not ph:
            notes.append(f"DegenerateStep: Phi_{n} = 0, n={n} skipped")
            checks.append(Check(f"n={n}", None, "Phi_n = 0"))
            qs.append(None)
            continue
        q = christoffel_q(seq, nodes, n)
        qs.append(q)
        for j, qj in enumerate(qs[:-1]):
            if qj is None:
                continue
            val = discrete_inner(krall, q, qj)
            checks.append(Check(f"orthogonality n={n} j={j}", not val, "" if not val else str(val)))
        lhs = discrete_inner(krall, q, q)
        p_n = seq.poly(n)
        rhs = (sign(k) * seq.poly(n + k).leading / p_n.leading * ph * ph_next
               * discrete_inner(base, p_n, p_n))
        checks.append(Check(f"norm relation n={n}", lhs == rhs, "" if lhs == rhs else f"{lhs} vs {rhs}"))
    return summarize_checks("christoffel:sze", inputs, checks, notes)


def dual_hahn_orthogonality(alpha: Scalar, beta: Scalar, N: int) -> VerificationReport:
    """``<R_n, R_m> = 0`` for ``0 <= n < m <= N`` and ``<R_n, R_n> != 0`` exactly
    for ``n <= N``."""
    alpha, beta = gr(alpha), gr(beta)
    measure = MeasureSpec.of(MeasureKind.DUAL_HAHN_BASE, alpha=alpha, beta=beta, N=N)
    Ngr = gr(N)
    polys = [dual_hahn(n, alpha, beta, Ngr) for n in range(N + 2)]
    checks = []
    for n in range(N + 1):
        for m in range(n + 1, N + 1):
            v = discrete_inner(measure, polys[n], polys[m])
            checks.append(Check(f"<R_{n},R_{m}>", not v, "" if not v else str(v)))
        nv = discrete_inner(measure, polys[n], polys[n])
        checks.append(Check(f"<R_{n},R_{n}> != 0", bool(nv), "" if nv else "zero norm"))
    nv = discrete_inner(measure, polys[N + 1], polys[N + 1])
    checks.append(Check(f"<R_{N + 1},R_{N + 1}> == 0", not nv, "" if not nv else str(nv)))
    inputs = {"alpha": str(alpha), "beta": str(beta), "N": str(N)}
    return summarize_checks("christoffel:dualhahn-orthogonality", inputs, checks)
