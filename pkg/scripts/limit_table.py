#!/usr/bin/env python3
"""Tabulate relative errors of the limit transitions against the scale parameter."""

import argparse
from fractions import Fraction

from casoratian.setcalc import FiniteSet
from casoratian.verify import DEFAULT_SCALES, LimitId, LimitSetup, limit_value


def rel_err(value, target):
    num, den = (value - target).abs2(), target.abs2()
    return float(num / den) ** 0.5 if den else float(num) ** 0.5


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--decades", type=int, default=len(DEFAULT_SCALES))
    ap.add_argument("--n", type=int, default=3)
    args = ap.parse_args()
    scales = [Fraction(10) ** (i + 1) for i in range(args.decades)]
    cfg = LimitSetup(n=args.n, F1=FiniteSet((1, 2)))

    print(f"{'limit':28s}" + "".join(f"{'s=' + str(s):>12s}" for s in scales))
    for which in LimitId:
        errs = [rel_err(*limit_value(which, s, cfg)) for s in scales]
        print(f"{which.value:28s}" + "".join(f"{e:12.3e}" for e in errs))


if __name__ == "__main__":
    main()
