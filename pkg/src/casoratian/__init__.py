"""Exact Casoratian and Wronskian determinants of classical orthogonal
polynomials, their invariance under the set involution, and the Christoffel
machinery behind it."""

from .exact_core import GaussianRational, Polynomial, gr
from .families import FamilyId, family_poly
from .report import VerificationReport
from .setcalc import FiniteSet, involute, parse_set, weight
from .verify import LimitId, TheoremId, sweep, verify_invariance, verify_limit

__version__ = "0.1.0"

__all__ = [
    "FamilyId",
    "FiniteSet",
    "GaussianRational",
    "LimitId",
    "Polynomial",
    "TheoremId",
    "VerificationReport",
    "family_poly",
    "gr",
    "involute",
    "parse_set",
    "sweep",
    "verify_invariance",
    "verify_limit",
    "weight",
]
