"""Invariance verifiers, exhaustive sweeps and limit-transition checks.

Every invariance check builds both sides as exact polynomials and compares
coefficient vectors; a passing report is then re-evaluated at a few random
rational points as an independent path.
"""

from __future__ import annotations

import enum
import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .determinants import (
    casorati_charlier,
    quasi_casorati_hahn,
    quasi_casorati_meixner,
    quasi_wronskian_jacobi,
    quasi_wronskian_laguerre,
    wronskian_hermite,
)
from .errors import EmptyComponent, InvalidParams
from .exact_core import (
    I_UNIT,
    ONE,
    GaussianRational,
    Polynomial,
    compose_affine,
    factorial,
    gr,
    i_power,
    pochhammer,
    sign,
)
from .families import charlier, hahn, hermite, jacobi, laguerre, meixner
from .report import FAIL, PASS, SKIPPED, Check, VerificationReport
from .setcalc import FiniteSet, downarrow, involute, set_text, subsets, weight, weight_tuple


class TheoremId(enum.Enum):
    CHARLIER = "charlier"
    HERMITE = "hermite"
    MEIXNER = "meixner"
    LAGUERRE = "laguerre"
    HAHN = "hahn"
    JACOBI = "jacobi"

    @classmethod
    def parse(cls, name: str) -> TheoremId:
        key = name.lower().removesuffix("inv")
        try:
            return cls(key)
        except ValueError:
            raise InvalidParams(f"unknown theorem {name!r}") from None

    @property
    def arity(self) -> int:
        return {TheoremId.HAHN: 3, TheoremId.MEIXNER: 2, TheoremId.LAGUERRE: 2,
                TheoremId.JACOBI: 2}.get(self, 1)

    @property
    def params(self) -> tuple[str, ...]:
        return {
            TheoremId.CHARLIER: ("a",),
            TheoremId.HERMITE: (),
            TheoremId.MEIXNER: ("a", "c"),
            TheoremId.LAGUERRE: ("alpha",),
            TheoremId.HAHN: ("alpha", "beta", "N"),
            TheoremId.JACOBI: ("alpha", "beta"),
        }[self]


DEFAULT_GRIDS: dict[TheoremId, list[dict[str, Fraction]]] = {
    TheoremId.CHARLIER: [{"a": Fraction(2)}, {"a": Fraction(-3, 2)}, {"a": Fraction(7, 5)}],
    TheoremId.HERMITE: [{}],
    TheoremId.MEIXNER: [{"a": Fraction(3, 7), "c": Fraction(5, 3)}],
    TheoremId.LAGUERRE: [{"alpha": Fraction(1, 4)}],
    TheoremId.HAHN: [{"alpha": Fraction(1, 3), "beta": Fraction(1, 5), "N": Fraction(17, 2)}],
    TheoremId.JACOBI: [{"alpha": Fraction(1, 3), "beta": Fraction(1, 5)}],
}


@dataclass(frozen=True)
class Sides:
    lhs: Polynomial
    rhs: Polynomial
    degenerate: str = ""  # reason, empty when both sides are regular
    extra: tuple[Check, ...] = ()


def _param(params: Mapping, name: str) -> GaussianRational:
    try:
        return gr(params[name])
    except KeyError:
        raise InvalidParams(f"missing parameter {name!r}") from None


def _reflect(p: Polynomial) -> Polynomial:
    return compose_affine(p, -1, 0)


def _charlier_sides(F: FiniteSet, a: GaussianRational) -> Sides:
    lhs = casorati_charlier(F, a)
    rhs = _reflect(casorati_charlier(involute(F), -a)).scale(sign(weight(F)))
    extra = [Check("degree = w_F", lhs.degree == weight(F) or (not lhs and not F),
                   f"degree {lhs.degree}, w_F {weight(F)}")]
    if F and F[0] == 0:
        down = casorati_charlier(downarrow(F), a, check_alt=False)
        extra.append(Check("reduction through F-downarrow", down == lhs, f"{down} vs {lhs}"))
    return Sides(lhs, rhs, extra=tuple(extra))


def _hermite_sides(F: FiniteSet) -> Sides:
    lhs = wronskian_hermite(F)
    rhs = compose_affine(wronskian_hermite(involute(F)), -I_UNIT, 0).scale(i_power(weight(F)))
    extra = (Check("degree = w_F", lhs.degree == weight(F), f"degree {lhs.degree}, w_F {weight(F)}"),)
    return Sides(lhs, rhs, extra=extra)


def _maxes(sets: Sequence[FiniteSet]) -> tuple[int, ...]:
    for i, S in enumerate(sets):
        if not S:
            raise EmptyComponent(f"component F{i + 1} is empty; its max is needed by the parameter shift")
    return tuple(S.max for S in sets)


def _zero_reason(lhs: Polynomial, rhs: Polynomial) -> str:
    if not lhs or not rhs:
        return "a side vanishes identically"
    return ""


def _meixner_sides(sets, a, c) -> Sides:
    F1, F2 = sets
    m1, m2 = _maxes(sets)
    G1, G2 = involute(F1), involute(F2)
    lhs = quasi_casorati_meixner(F1, F2, a, c)
    rhs = _reflect(quasi_casorati_meixner(G1, G2, a, -c - m1 - m2)).scale(sign(weight_tuple(sets)))
    return Sides(lhs, rhs, _zero_reason(lhs, rhs))


def _laguerre_sides(sets, alpha) -> Sides:
    F1, F2 = sets
    m1, m2 = _maxes(sets)
    lhs = quasi_wronskian_laguerre(F1, F2, alpha)
    rhs = _reflect(quasi_wronskian_laguerre(involute(F1), involute(F2), -alpha - m1 - m2 - 2))
    rhs = rhs.scale(sign(weight_tuple(sets)))
    return Sides(lhs, rhs, _zero_reason(lhs, rhs))


def _hahn_sides(sets, alpha, beta, N) -> Sides:
    m1, m2, m3 = _maxes(sets)
    left = quasi_casorati_hahn(*sets, alpha, beta, N)
    G = [involute(S) for S in sets]
    right = quasi_casorati_hahn(*G, -alpha - m1 - m2 - 2, -beta - m1 + m2, -N + m1 + m3)
    if left.degenerate or right.degenerate:
        return Sides(left.normalized, right.normalized, "prescribed leading coefficient d_F vanishes")
    eps = sign(int(left.normalized.degree)) if left.normalized else 1
    return Sides(left.normalized, _reflect(right.normalized).scale(eps))


def _jacobi_sides(sets, alpha, beta) -> Sides:
    m1, m2 = _maxes(sets)
    left = quasi_wronskian_jacobi(*sets, alpha, beta)
    G = [involute(S) for S in sets]
    right = quasi_wronskian_jacobi(*G, -alpha - m1 - m2 - 2, -beta - m1 + m2)
    if left.degenerate or right.degenerate:
        return Sides(left.normalized, right.normalized, "prescribed leading coefficient u_F vanishes")
    return Sides(left.normalized, right.normalized)


def build_sides(t: TheoremId, sets: Sequence[FiniteSet], params: Mapping) -> Sides:
    if len(sets) != t.arity:
        raise InvalidParams(f"{t.value} needs {t.arity} set(s), got {len(sets)}")
    vals = [_param(params, name) for name in t.params]
    if t is TheoremId.CHARLIER:
        return _charlier_sides(sets[0], *vals)
    if t is TheoremId.HERMITE:
        return _hermite_sides(sets[0])
    if t is TheoremId.MEIXNER:
        return _meixner_sides(sets, *vals)
    if t is TheoremId.LAGUERRE:
        return _laguerre_sides(sets, *vals)
    if t is TheoremId.HAHN:
        return _hahn_sides(sets, *vals)
    return _jacobi_sides(sets, *vals)


def _inputs(t: TheoremId, sets: Sequence[FiniteSet], params: Mapping) -> dict[str, str]:
    if len(sets) == 1:
        out = {"F": set_text(sets[0])}
    else:
        out = {f"F{i + 1}": set_text(S) for i, S in enumerate(sets)}
    out.update({name: str(_param(params, name)) for name in t.params if name in params})
    return out


def _random_points(seed: str, count: int = 3) -> list[Fraction]:
    rng = random.Random(seed)
    return [Fraction(rng.randint(-997, 997), rng.randint(1, 97)) for _ in range(count)]


def verify_invariance(t: TheoremId, sets: Sequence[FiniteSet], params: Mapping | None = None) -> VerificationReport:
    """Build both sides of the invariance for theorem ``t`` and compare them."""
    params = params or {}
    inputs = _inputs(t, sets, params)
    name = f"{t.value}-invariance"
    try:
        sides = build_sides(t, sets, params)
    except EmptyComponent as exc:
        return VerificationReport(name, inputs, SKIPPED, notes=[f"EmptyComponent: {exc}"])
    lhs_text, rhs_text = str(sides.lhs), str(sides.rhs)
    if sides.degenerate:
        return VerificationReport(name, inputs, SKIPPED, lhs_text, rhs_text,
                                  notes=[f"degenerate: {sides.degenerate}"])
    checks = list(sides.extra)
    equal = sides.lhs == sides.rhs
    checks.append(Check("coefficientwise equality", equal, "" if equal else "coefficient vectors differ"))
    if equal:
        seed = name + repr(sorted(inputs.items()))
        diffs = [(p, sides.lhs(p) - sides.rhs(p)) for p in _random_points(seed)]
        bad = [f"x={p}: {d}" for p, d in diffs if d]
        checks.append(Check("re-evaluation at random rational points", not bad, "; ".join(bad)))
    status = PASS if all(c.passed for c in checks) else FAIL
    for c in checks:
        if c.passed:
            c.witness = ""
    return VerificationReport(name, inputs, status, lhs_text, rhs_text, checks=checks)


# -- sweeps -------------------------------------------------------------------------

@dataclass
class SweepResult:
    theorem: str
    counts: dict[str, int] = field(default_factory=lambda: {PASS: 0, FAIL: 0, SKIPPED: 0})
    failures: list[VerificationReport] = field(default_factory=list)
    skipped: list[VerificationReport] = field(default_factory=list)
    degree_law_ok: bool = True

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def ok(self) -> bool:
        return self.counts[FAIL] == 0

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "counts": dict(self.counts),
            "degree_law_ok": self.degree_law_ok,
            "failures": [r.to_dict() for r in self.failures],
            "skipped": [{"inputs": r.inputs, "notes": r.notes} for r in self.skipped],
        }


def set_tuples(t: TheoremId, max_elem: int, max_size: int, min_elem: int = 0,
               include_empty: bool = False) -> Iterable[tuple[FiniteSet, ...]]:
    """All admissible set tuples for ``t`` in canonical order."""
    min_size = 0 if include_empty else 1
    pool = list(subsets(range(min_elem, max_elem + 1), max_size, min_size))
    return itertools.product(pool, repeat=t.arity)


def sweep(t: TheoremId, max_elem: int, max_size: int, params_grid: Sequence[Mapping] | None = None,
          min_elem: int = 0, include_empty: bool = False) -> SweepResult:
    """Run :func:`verify_invariance` over every set tuple and grid point."""
    grid = list(params_grid) if params_grid is not None else DEFAULT_GRIDS[t]
    result = SweepResult(f"{t.value}-invariance")
    for params in grid:
        for sets in set_tuples(t, max_elem, max_size, min_elem, include_empty):
            rep = verify_invariance(t, sets, params)
            result.counts[rep.status] += 1
            if rep.status == FAIL:
                result.failures.append(rep)
            elif rep.status == SKIPPED:
                result.skipped.append(rep)
            if any(c.name == "degree = w_F" and not c.passed for c in rep.checks):
                result.degree_law_ok = False
    return result


# -- limit transitions ---------------------------------------------------------------

class LimitId(enum.Enum):
    CHARLIER_TO_HERMITE = "charlier-hermite"
    MEIXNER_TO_LAGUERRE = "meixner-laguerre"
    HAHN_TO_JACOBI = "hahn-jacobi"
    HAHN_DEGENERATE = "hahn-degenerate"
    WRONSKIAN_CH = "wronskian-charlier-hermite"
    WRONSKIAN_ML = "wronskian-meixner-laguerre"

    @classmethod
    def parse(cls, name: str) -> LimitId:
        key = name.lower().replace("_", "-")
        aliases = {"charliertohermite": "charlier-hermite", "meixnertolaguerre": "meixner-laguerre",
                   "hahntojacobi": "hahn-jacobi", "hahndegenerate": "hahn-degenerate",
                   "wronskianlimitch": "wronskian-charlier-hermite",
                   "wronskianlimitml": "wronskian-meixner-laguerre"}
        key = aliases.get(key.replace("-", ""), key)
        try:
            return cls(key)
        except ValueError:
            raise InvalidParams(f"unknown limit {name!r}") from None


DEFAULT_SCALES = (Fraction(10), Fraction(100), Fraction(1000), Fraction(10000))


@dataclass(frozen=True)
class LimitSetup:
    n: int = 3
    F1: FiniteSet = FiniteSet((1, 2))
    F2: FiniteSet = FiniteSet()
    x: Fraction = Fraction(1, 3)
    y: Fraction = Fraction(1, 7)
    c: Fraction = Fraction(5, 3)
    alpha: Fraction = Fraction(1, 3)
    beta: Fraction = Fraction(1, 5)


def limit_value(which: LimitId, s: Fraction, cfg: LimitSetup) -> tuple[GaussianRational, GaussianRational]:
    """The scaled expression at scale ``s`` and its limit target, both at ``cfg.x``."""
    x = gr(cfg.x)
    s_ = gr(s)
    if which in (LimitId.CHARLIER_TO_HERMITE, LimitId.WRONSKIAN_CH):
        # a = 2 s^2 keeps sqrt(2a) = 2s rational
        a = 2 * s_ * s_
        point = 2 * s_ * x + a
        if which is LimitId.CHARLIER_TO_HERMITE:
            return charlier(cfg.n, a)(point) / s_**cfg.n, hermite(cfg.n)(x) / factorial(cfg.n)
        C = casorati_charlier(cfg.F1, a, check_alt=False)
        return C(point) / s_ ** weight(cfg.F1), wronskian_hermite(cfg.F1)(x)
    if which in (LimitId.MEIXNER_TO_LAGUERRE, LimitId.WRONSKIAN_ML):
        a = ONE - s_.inverse()
        c = gr(cfg.c)
        point = x / (ONE - a)
        if which is LimitId.MEIXNER_TO_LAGUERRE:
            return (a - 1) ** cfg.n * meixner(cfg.n, a, c)(point), laguerre(cfg.n, c - 1)(x)
        M = quasi_casorati_meixner(cfg.F1, cfg.F2, a, c)
        w = weight(cfg.F1) + weight(cfg.F2)
        return (ONE - a) ** w * M(point), quasi_wronskian_laguerre(cfg.F1, cfg.F2, c - 1)(x)
    alpha, beta, N = gr(cfg.alpha), gr(cfg.beta), s_
    point = (1 - x) * N * Fraction(1, 2)
    if which is LimitId.HAHN_TO_JACOBI:
        value = hahn(cfg.n, alpha, beta, N)(point) / pochhammer(-N, cfg.n)
        return value, jacobi(cfg.n, alpha, beta)(x)
    value = hahn(cfg.n, -beta - N - 1, -alpha - N - 1, N)(point + cfg.y) / pochhammer(-N, 2 * cfg.n)
    return value, x**cfg.n * Fraction(1, factorial(cfg.n))


def verify_limit(which: LimitId, scale_points: Sequence[Fraction] = DEFAULT_SCALES,
                 cfg: LimitSetup | None = None, min_factor: float = 5.0,
                 final_tol: float = 1e-3) -> VerificationReport:
    """Exact evaluation of a limit transition at increasing scales.

    Passes when the relative error shrinks by at least ``min_factor`` between
    consecutive scale points and ends below ``final_tol``.
    """
    cfg = cfg or LimitSetup()
    scales = [Fraction(s) for s in scale_points]
    if len(scales) < 2 or any(s <= 0 for s in scales) or scales != sorted(scales):
        raise InvalidParams("scale points must be positive and increasing, at least two")
    if which is LimitId.MEIXNER_TO_LAGUERRE or which is LimitId.WRONSKIAN_ML:
        if any(s <= 1 for s in scales):
            raise InvalidParams("Meixner limits use a = 1 - 1/s and need s > 1")
    errors = []
    target = None
    for s in scales:
        value, target = limit_value(which, s, cfg)
        # squared moduli are exact; only the final square root is floating point
        err2 = (value - target).abs2()
        scale2 = target.abs2()
        errors.append(math.sqrt(err2 / scale2 if scale2 else err2))
    checks = []
    for (s0, e0), (s1, e1) in zip(zip(scales, errors), zip(scales[1:], errors[1:])):
        ok = e1 * min_factor <= e0
        checks.append(Check(f"error shrinks from s={s0} to s={s1}", ok, f"{e0:.3e} -> {e1:.3e}"))
    checks.append(Check("final relative error", errors[-1] < final_tol, f"{errors[-1]:.3e}"))
    inputs = {"limit": which.value, "scales": ",".join(str(s) for s in scales), "x": str(cfg.x)}
    if which in (LimitId.WRONSKIAN_CH, LimitId.WRONSKIAN_ML):
        inputs["F1"] = set_text(cfg.F1)
        if which is LimitId.WRONSKIAN_ML:
            inputs["F2"] = set_text(cfg.F2)
    else:
        inputs["n"] = str(cfg.n)
    status = PASS if all(c.passed for c in checks) else FAIL
    return VerificationReport(f"limit:{which.value}", inputs, status,
                              notes=[f"limit target {target}",
                                     f"relative errors: {', '.join(f'{e:.3e}' for e in errors)}"],
                              checks=checks)
