"""Exact scalars over Q(i) and dense univariate polynomials over them.

Rationals are :class:`fractions.Fraction`; a :class:`GaussianRational` is a
pair of them.  :class:`Polynomial` stores coefficients in increasing powers of
``x`` with trailing zeros trimmed.  All values are immutable.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from .errors import DivisionByZeroPoly, NonzeroRemainder

Rational = Fraction

#: degree of the zero polynomial; compares below every integer
NEG_INF = -math.inf

Scalar = Union[int, Fraction, "GaussianRational"]


class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction | str = 0, im: int | Fraction | str = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> GaussianRational:
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @classmethod
    def coerce(cls, value: Scalar) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls._raw(Fraction(value), _ZERO_F)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussianRational")

    # -- predicates ------------------------------------------------------
    def is_real(self) -> bool:
        return not self.im

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational._raw(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational._raw(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            if not other.im:
                if not self.im:
                    return GaussianRational._raw(self.re * other.re, _ZERO_F)
                return GaussianRational._raw(self.re * other.re, self.im * other.re)
            if not self.im:
                return GaussianRational._raw(self.re * other.re, self.re * other.im)
            return GaussianRational._raw(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> GaussianRational:
        if not self.im:
            if not self.re:
                raise ZeroDivisionError("GaussianRational division by zero")
            return GaussianRational._raw(1 / self.re, _ZERO_F)
        n = self.re * self.re + self.im * self.im
        return GaussianRational._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("GaussianRational division by zero")
            return GaussianRational._raw(self.re / other, self.im / other)
        if isinstance(other, GaussianRational):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __neg__(self) -> GaussianRational:
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self) -> GaussianRational:
        return self

    def __pow__(self, m: int) -> GaussianRational:
        if not isinstance(m, int):
            return NotImplemented
        if m < 0:
            return self.inverse() ** (-m)
        if not self.im:
            return GaussianRational._raw(self.re**m, _ZERO_F)
        result, base = ONE, self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def conjugate(self) -> GaussianRational:
        return GaussianRational._raw(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def abs_bound(self) -> Fraction:
        """Rational upper bound ``|re| + |im|`` for the modulus."""
        return abs(self.re) + abs(self.im)

    # -- comparison ------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- text ------------------------------------------------------------
    def __repr__(self) -> str:
        return f"GaussianRational({str(self)!r})"

    def __str__(self) -> str:
        if not self.im:
            return _frac_text(self.re)
        im = "i" if self.im == 1 else "-i" if self.im == -1 else f"{_frac_text(self.im)}*i"
        if not self.re:
            return im
        return f"{_frac_text(self.re)}{'' if im.startswith('-') else '+'}{im}"

    @classmethod
    def parse(cls, text: str) -> GaussianRational:
        """Parse ``p/q``, ``p/q+r/s*i``, ``r/s*i`` (also ``i``, ``-i``)."""
        s = text.replace(" ", "")
        m = _REAL_RE.fullmatch(s)
        if m:
            return cls(Fraction(s))
        m = _IMAG_RE.fullmatch(s) or _COMPLEX_RE.fullmatch(s)
        if not m:
            raise ValueError(f"malformed Gaussian rational: {text!r}")
        groups = m.groupdict()
        re_part = Fraction(groups["re"]) if groups.get("re") else _ZERO_F
        im_part = Fraction(groups["im"]) if groups["im"] else Fraction(1)
        if groups["isign"] == "-":
            im_part = -im_part
        return cls(re_part, im_part)


_ZERO_F = Fraction(0)
_NUM = r"\d+(?:/\d+)?"
_IPART = rf"(?:(?P<im>{_NUM})\*)?i"
_REAL_RE = re.compile(rf"[-+]?{_NUM}")
_IMAG_RE = re.compile(rf"(?P<isign>[-+]?){_IPART}")
_COMPLEX_RE = re.compile(rf"(?P<re>[-+]?{_NUM})(?P<isign>[-+]){_IPART}")

ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I_UNIT = GaussianRational(0, 1)


def _frac_text(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse the ``p/q`` or ``p`` text form."""
    s = text.strip()
    if not re.fullmatch(rf"[-+]?{_NUM}", s):
        raise ValueError(f"malformed rational: {text!r}")
    return Fraction(s)


def gr(value: Scalar) -> GaussianRational:
    """Shorthand coercion used throughout the package."""
    return GaussianRational.coerce(value)


def i_power(m: int) -> GaussianRational:
    """``i**m`` for any integer ``m``."""
    return (ONE, I_UNIT, -ONE, -I_UNIT)[m % 4]


class Polynomial:
    """Dense univariate polynomial in ``x`` over Q(i).

    ``coeffs[k]`` is the coefficient of ``x**k``; the tuple is trimmed so the
    last entry is nonzero, and the zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [gr(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[GaussianRational, ...] = tuple(cs)

    @classmethod
    def _trusted(cls, cs: list[GaussianRational]) -> Polynomial:
        while cs and not cs[-1]:
            cs.pop()
        obj = object.__new__(cls)
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls._trusted([gr(c)])

    @classmethod
    def x(cls) -> Polynomial:
        return cls._trusted([ZERO, ONE])

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> Polynomial:
        return cls._trusted([ZERO] * k + [gr(c)])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> Polynomial:
        """Monic ``prod (x - r)``."""
        p = ONE_POLY
        for r in roots:
            p = p * cls._trusted([-gr(r), ONE])
        return p

    # -- structure -------------------------------------------------------
    @property
    def degree(self) -> int | float:
        """Degree; :data:`NEG_INF` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def leading(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, k: int) -> GaussianRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def is_real(self) -> bool:
        return all(not c.im for c in self.coeffs)

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Polynomial):
            try:
                other = Polynomial.constant(other)
            except TypeError:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Polynomial._trusted(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._trusted([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            try:
                other = Polynomial.constant(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return ZERO_POLY
            out = [ZERO] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if not ca:
                    continue
                for j, cb in enumerate(b):
                    out[i + j] = out[i + j] + ca * cb
            return Polynomial._trusted(out)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> Polynomial:
        c = gr(c)
        if not c:
            return ZERO_POLY
        return Polynomial._trusted([c * a for a in self.coeffs])

    def __truediv__(self, c):
        if isinstance(c, Polynomial):
            return poly_exact_div(self, c)
        c = gr(c)
        if not c:
            raise ZeroDivisionError("polynomial divided by zero scalar")
        return self.scale(c.inverse())

    def __pow__(self, m: int) -> Polynomial:
        if not isinstance(m, int) or m < 0:
            return NotImplemented
        result, base = ONE_POLY, self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, point: Scalar) -> GaussianRational:
        return poly_eval(self, point)

    # -- calculus ---------------------------------------------------------
    def derivative(self) -> Polynomial:
        return poly_derivative(self)

    def delta(self) -> Polynomial:
        return poly_delta(self)

    def shift(self, j: Scalar) -> Polynomial:
        """``p(x + j)``."""
        return compose_affine(self, ONE, gr(j))

    # -- text ------------------------------------------------------------
    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def __str__(self) -> str:
        return poly_text(self)

    @classmethod
    def parse(cls, text: str) -> Polynomial:
        return parse_poly(text)


ZERO_POLY = Polynomial()
ONE_POLY = Polynomial.constant(1)
X = Polynomial.x()


def compose_affine(p: Polynomial, slope: Scalar, intercept: Scalar) -> Polynomial:
    """``p(slope*x + intercept)`` expanded exactly (Horner in the ring)."""
    slope, intercept = gr(slope), gr(intercept)
    if not p.coeffs:
        return ZERO_POLY
    lin = [intercept, slope]
    acc: list[GaussianRational] = [p.coeffs[-1]]
    for c in reversed(p.coeffs[:-1]):
        nxt = [ZERO] * (len(acc) + 1)
        for k, a in enumerate(acc):
            nxt[k] = nxt[k] + a * lin[0]
            nxt[k + 1] = nxt[k + 1] + a * lin[1]
        nxt[0] = nxt[0] + c
        acc = nxt
    return Polynomial._trusted(acc)


def poly_derivative(p: Polynomial) -> Polynomial:
    return Polynomial._trusted([c * k for k, c in enumerate(p.coeffs) if k > 0])


def poly_delta(p: Polynomial) -> Polynomial:
    """Forward difference ``p(x+1) - p(x)``."""
    return compose_affine(p, ONE, ONE) - p


def poly_eval(p: Polynomial, point: Scalar) -> GaussianRational:
    point = gr(point)
    acc = ZERO
    for c in reversed(p.coeffs):
        acc = acc * point + c
    return acc


def poly_divmod(p: Polynomial, q: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Euclidean division ``p = q*quot + rem`` with ``deg rem < deg q``."""
    if not q.coeffs:
        raise DivisionByZeroPoly("division by the zero polynomial")
    rem = list(p.coeffs)
    dq = len(q.coeffs) - 1
    inv_lead = q.coeffs[-1].inverse()
    if len(rem) - 1 < dq:
        return ZERO_POLY, p
    quot = [ZERO] * (len(rem) - dq)
    for k in range(len(rem) - 1 - dq, -1, -1):
        c = rem[k + dq] * inv_lead
        quot[k] = c
        if c:
            for j, b in enumerate(q.coeffs):
                rem[k + j] = rem[k + j] - c * b
    return Polynomial._trusted(quot), Polynomial._trusted(rem[:dq])


def poly_exact_div(p: Polynomial, q: Polynomial) -> Polynomial:
    """Return ``r`` with ``p == q*r``; raise :class:`NonzeroRemainder` otherwise."""
    quot, rem = poly_divmod(p, q)
    if rem:
        raise NonzeroRemainder(f"({p}) is not divisible by ({q}); remainder {rem}", rem)
    return quot


def denominator_lcm(p: Polynomial) -> int:
    """Least common multiple of all coefficient denominators (re and im)."""
    den = 1
    for c in p.coeffs:
        den = math.lcm(den, c.re.denominator, c.im.denominator)
    return den


# -- special scalars and polynomials ------------------------------------------

@lru_cache(maxsize=None)
def _poch_cached(base: GaussianRational, n: int) -> GaussianRational:
    acc = ONE
    for k in range(n):
        acc = acc * (base + k)
    return acc


def pochhammer(base: Scalar, n: int) -> GaussianRational:
    """Rising factorial ``(base)_n``."""
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    return _poch_cached(gr(base), n)


@lru_cache(maxsize=None)
def _poch_poly_cached(shift: GaussianRational, n: int) -> Polynomial:
    p = ONE_POLY
    for k in range(n):
        p = p * Polynomial._trusted([shift + k, ONE])
    return p


def pochhammer_poly(shift: Scalar, n: int) -> Polynomial:
    """``(x + shift)(x + shift + 1)...(x + shift + n - 1)``."""
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    return _poch_poly_cached(gr(shift), n)


@lru_cache(maxsize=None)
def falling_poly(j: int) -> Polynomial:
    """``x(x-1)...(x-j+1)``."""
    return Polynomial.from_roots(range(j))


@lru_cache(maxsize=None)
def binom_poly(j: int) -> Polynomial:
    """``binom(x, j)`` as a polynomial: ``x(x-1)...(x-j+1)/j!``."""
    return falling_poly(j).scale(Fraction(1, math.factorial(j)))


def factorial(n: int) -> int:
    return math.factorial(n)


def sign(m: int) -> int:
    """``(-1)**m``."""
    return -1 if m % 2 else 1


# -- text forms ----------------------------------------------------------------

def _coef_text(c: GaussianRational) -> str:
    if c.im:
        return f"({c})"
    return str(c)


def poly_text(p: Polynomial) -> str:
    """Canonical text: descending powers, e.g. ``4x^2-2`` or ``1/2*x^2+x``."""
    if not p.coeffs:
        return "0"
    parts: list[str] = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if not mono:
            term = _coef_text(c)
        elif c == 1:
            term = mono
        elif c == -1:
            term = "-" + mono
        elif c.is_real() and c.re.denominator == 1:
            term = f"{c.re.numerator}{mono}"
        else:
            term = f"{_coef_text(c)}*{mono}"
        if parts and not term.startswith("-"):
            term = "+" + term
        parts.append(term)
    return "".join(parts)


_TERM_RE = re.compile(
    r"(?P<sign>[-+]?)"
    r"(?P<coef>\([^()]*\)|\d+(?:/\d+)?)?"
    r"(?:(?(coef)\*?)(?P<x>x)(?:\^(?P<pow>\d+))?)?"
)


def parse_poly(text: str) -> Polynomial:
    """Inverse of :func:`poly_text`."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    coeffs: dict[int, GaussianRational] = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos or (not m.group("coef") and not m.group("x")):
            raise ValueError(f"malformed polynomial text: {text!r}")
        coef = m.group("coef")
        if coef is None:
            c = ONE
        elif coef.startswith("("):
            c = GaussianRational.parse(coef[1:-1])
        else:
            c = GaussianRational(Fraction(coef))
        if m.group("sign") == "-":
            c = -c
        k = 0 if not m.group("x") else int(m.group("pow") or 1)
        coeffs[k] = coeffs.get(k, ZERO) + c
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise ValueError(f"malformed polynomial text: {text!r}")
    top = max(coeffs) if coeffs else -1
    return Polynomial([coeffs.get(k, ZERO) for k in range(top + 1)])

