#!/usr/bin/env python3
"""Christoffel chain: proportionality of the two representations, the ratio
identity, the d-claim, and orthogonality over Krall-dual-Hahn measures."""

from fractions import Fraction

from casoratian.christoffel import (
    Kind,
    claim_d_check,
    gamma_charlier,
    proportionality_check,
    ratio_identity_check,
    sze_check,
)
from casoratian.setcalc import EMPTY, FiniteSet, subsets


def main():
    for F in [FiniteSet((1, 2)), FiniteSet((2, 3)), FiniteSet((1, 3))]:
        for a in (2, Fraction(-3, 2)):
            p = proportionality_check(Kind.CHARLIER, [F], {"a": a}, 5)
            r = ratio_identity_check(F, a, 8)
            gammas = ", ".join(str(gamma_charlier(F, a, n)) for n in range(3))
            print(f"charlier F={F} a={a}: proportionality {p.status}, ratio {r.status}; gamma_0..2 = {gammas}")

    bad = []
    for F1 in subsets(range(1, 5), 2, 1):
        for F2 in subsets(range(1, 5), 2, 1):
            rep = proportionality_check(Kind.MEIXNER, [F1, F2], {"a": Fraction(3, 7), "c": Fraction(5, 3)}, 4)
            if not rep.passed:
                bad.append((F1, F2))
    print(f"meixner proportionality over pairs in {{1..4}}: {len(bad)} failures")

    for F in [FiniteSet((1, 2)), FiniteSet((1, 3)), FiniteSet((1, 2, 4))]:
        rep = claim_d_check(F, Fraction(1, 2), 4 if len(F) < 3 else 3, 200)
        print(f"d-claim F={F}: {rep.status}")

    rep = sze_check([FiniteSet((1,)), EMPTY, EMPTY], 1, 2, 6, 2)
    print(f"dual Hahn Christoffel, F1={{1}}: {rep.status} ({len(rep.checks)} checks)")


if __name__ == "__main__":
    main()
