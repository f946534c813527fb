#!/usr/bin/env python3
"""Run the six invariance sweeps at the default grids and write a JSON summary.

    python3 scripts/run_sweeps.py --out results/sweeps.json
"""

import argparse
import json
import time
from dataclasses import dataclass
from pathlib import Path

from casoratian.verify import TheoremId, sweep


@dataclass(frozen=True)
class SweepConfig:
    theorem: TheoremId
    max_elem: int
    max_size: int
    min_elem: int = 0


CONFIGS = [
    SweepConfig(TheoremId.CHARLIER, 6, 3),
    SweepConfig(TheoremId.HERMITE, 6, 3),
    SweepConfig(TheoremId.MEIXNER, 4, 2),
    SweepConfig(TheoremId.LAGUERRE, 4, 2),
    SweepConfig(TheoremId.HAHN, 3, 2, min_elem=1),
    SweepConfig(TheoremId.JACOBI, 4, 2, min_elem=1),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, help="optional JSON output path")
    ap.add_argument("--only", choices=[t.value for t in TheoremId], action="append")
    args = ap.parse_args()

    summary = []
    for cfg in CONFIGS:
        if args.only and cfg.theorem.value not in args.only:
            continue
        t0 = time.perf_counter()
        res = sweep(cfg.theorem, cfg.max_elem, cfg.max_size, min_elem=cfg.min_elem)
        dt = time.perf_counter() - t0
        print(f"{cfg.theorem.value:9s} elems {cfg.min_elem}..{cfg.max_elem} |F|<={cfg.max_size}  "
              f"{res.counts}  {dt:6.2f}s")
        row = res.to_dict()
        row["seconds"] = round(dt, 3)
        summary.append(row)

    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(json.dumps(summary, indent=2))
    return 0 if all(not r["failures"] for r in summary) else 1


if __name__ == "__main__":
    raise SystemExit(main())
