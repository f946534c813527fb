"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 internal inconsistency (including a failed exact division).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import christoffel as chr_
from .determinants import BUILDERS, BuilderResult
from .errors import CasoratianError, InternalInconsistency, NonzeroRemainder
from .exact_core import GaussianRational
from .families import FamilyId, REQUIRED_PARAMS, family_identity_check, family_poly
from .report import VerificationReport
from .setcalc import EMPTY, downarrow, involute, parse_set, s_of, set_text, vandermonde, weight
from .verify import DEFAULT_SCALES, LimitId, LimitSetup, TheoremId, sweep, verify_invariance, verify_limit

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

PARAM_NAMES = ("a", "c", "alpha", "beta", "N")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # surface as an exception so main() owns the exit code
        raise UsageError(message)


def _add_params(p: argparse.ArgumentParser) -> None:
    for name in PARAM_NAMES:
        p.add_argument(f"--{name}", help=f"parameter {name} (rational or Gaussian rational)")


def _add_sets(p: argparse.ArgumentParser) -> None:
    p.add_argument("--F", default="{}", help='first set, e.g. "{1,2}"')
    p.add_argument("--F2", help="second set")
    p.add_argument("--F3", help="third set")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="casoratian", description="Exact Casoratian and Wronskian invariance checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("poly", help="print a family polynomial")
    p.add_argument("family")
    p.add_argument("--n", type=int, required=True)
    _add_params(p)
    _add_output(p)

    p = sub.add_parser("caso", help="build a determinant")
    p.add_argument("builder", choices=sorted(BUILDERS))
    _add_sets(p)
    _add_params(p)
    _add_output(p)

    p = sub.add_parser("sets", help="set combinatorics")
    p.add_argument("--F", required=True)
    _add_output(p)

    p = sub.add_parser("verify", help="verify one invariance")
    p.add_argument("theorem")
    _add_sets(p)
    _add_params(p)
    _add_output(p)

    p = sub.add_parser("sweep", help="exhaustive invariance sweep")
    p.add_argument("theorem")
    p.add_argument("--max-elem", type=int, required=True)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--min-elem", type=int, default=0)
    p.add_argument("--include-empty", action="store_true")
    p.add_argument("--grid", help="JSON file holding a list of parameter maps")
    _add_output(p)

    p = sub.add_parser("christoffel", help="proportionality and ratio-identity checks")
    p.add_argument("kind", choices=[k.value for k in chr_.Kind])
    _add_sets(p)
    _add_params(p)
    p.add_argument("--n-max", type=int, default=5)
    _add_output(p)

    p = sub.add_parser("limits", help="limit-transition check")
    p.add_argument("which")
    p.add_argument("--scales", default=",".join(str(s) for s in DEFAULT_SCALES))
    p.add_argument("--n", type=int, default=3)
    _add_sets(p)
    p.add_argument("--x", default="1/3")
    _add_output(p)

    p = sub.add_parser("identities", help="structural identities of a family")
    p.add_argument("family")
    _add_params(p)
    p.add_argument("--n-max", type=int, default=8)
    _add_output(p)
    return parser


# -- helpers ---------------------------------------------------------------------

def _params(args: argparse.Namespace) -> dict[str, GaussianRational]:
    out = {}
    for name in PARAM_NAMES:
        raw = getattr(args, name, None)
        if raw is not None:
            try:
                out[name] = GaussianRational.parse(raw)
            except ValueError as exc:
                raise UsageError(f"--{name}: {exc}") from None
    return out


def _set(text: str | None, notes: list[str]):
    if text is None:
        return EMPTY
    try:
        F, extra = parse_set(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    notes.extend(extra)
    return F


def _sets(args: argparse.Namespace, arity: int, notes: list[str]) -> tuple:
    raw = [args.F, args.F2, args.F3][:arity]
    if arity < 3 and any(getattr(args, f"F{i}") is not None for i in range(arity + 1, 4)):
        raise UsageError(f"this command takes {arity} set(s)")
    return tuple(_set(t, notes) for t in raw)


def _emit(args: argparse.Namespace, payload: Any, text: str) -> None:
    out = json.dumps(payload, indent=2) if args.json else text
    if args.out:
        Path(args.out).write_text(out + "\n")
    else:
        print(out)


def _report_text(rep: VerificationReport) -> str:
    lines = [f"{rep.theorem}: {rep.status}"]
    lines += [f"  {k} = {v}" for k, v in rep.inputs.items()]
    if rep.lhs or rep.rhs:
        lines += [f"  lhs: {rep.lhs}", f"  rhs: {rep.rhs}"]
    for c in rep.checks:
        if c.passed is False or c.witness:
            mark = {True: "ok", False: "FAIL", None: "skip"}[c.passed]
            lines.append(f"  [{mark}] {c.name} {c.witness}".rstrip())
    lines += [f"  note: {n}" for n in rep.notes]
    return "\n".join(lines)


# -- subcommands -----------------------------------------------------------------

def _cmd_poly(args) -> int:
    fid = FamilyId.parse(args.family)
    p = family_poly(fid, args.n, _params(args))
    _emit(args, {"family": fid.value, "n": args.n, "poly": str(p)}, str(p))
    return EXIT_OK


_BUILDER_ARITY = {"charlier": 1, "hermite": 1, "meixner": 2, "laguerre": 2, "hahn": 3, "jacobi": 2}


def _cmd_caso(args) -> int:
    notes: list[str] = []
    sets = _sets(args, _BUILDER_ARITY[args.builder], notes)
    params = _params(args)
    fid = FamilyId.parse(args.builder)
    vals = [params[n] for n in REQUIRED_PARAMS[fid] if n in params]
    if len(vals) != len(REQUIRED_PARAMS[fid]):
        raise UsageError(f"{args.builder} needs {', '.join('--' + n for n in REQUIRED_PARAMS[fid])}")
    res = BUILDERS[args.builder](*sets, *vals)
    if isinstance(res, BuilderResult):
        poly, degenerate, lead = res.normalized, res.degenerate, str(res.leading)
    else:
        poly, degenerate, lead = res, False, str(res.leading) if res else "0"
    payload = {"builder": args.builder, "sets": [set_text(S) for S in sets], "poly": str(poly),
               "degree": poly.degree if poly else None, "leading": lead, "degenerate": degenerate,
               "notes": notes}
    text = "\n".join([str(poly), f"degree: {payload['degree']}", f"leading: {lead}",
                      f"degenerate: {str(degenerate).lower()}"] + [f"note: {n}" for n in notes])
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_sets(args) -> int:
    notes: list[str] = []
    F = _set(args.F, notes)
    payload = {
        "F": set_text(F),
        "I": set_text(involute(F)),
        "w": weight(F),
        "s": s_of(F) if F.is_positive() else None,
        "down": set_text(downarrow(F)),
        "V": str(vandermonde(F)),
        "notes": notes,
    }
    text = "\n".join(f"{k}={v}" for k, v in payload.items() if k != "notes")
    _emit(args, payload, text + "".join(f"\nnote: {n}" for n in notes))
    return EXIT_OK


def _cmd_verify(args) -> int:
    t = TheoremId.parse(args.theorem)
    notes: list[str] = []
    rep = verify_invariance(t, _sets(args, t.arity, notes), _params(args))
    rep.notes = notes + rep.notes
    _emit(args, rep.to_dict(), _report_text(rep))
    return EXIT_FAIL if rep.failed else EXIT_OK


def _load_grid(path: str | None) -> list[dict] | None:
    if path is None:
        return None
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read grid {path}: {exc}") from None
    if not isinstance(data, list) or not all(isinstance(d, dict) for d in data):
        raise UsageError("grid file must hold a JSON list of parameter maps")
    return [{k: GaussianRational.parse(str(v)) for k, v in d.items()} for d in data]


def _cmd_sweep(args) -> int:
    t = TheoremId.parse(args.theorem)
    res = sweep(t, args.max_elem, args.max_size, _load_grid(args.grid), args.min_elem, args.include_empty)
    text = f"{res.theorem}: " + ", ".join(f"{k}={v}" for k, v in res.counts.items())
    for rep in res.failures:
        text += "\n" + _report_text(rep)
    _emit(args, res.to_dict(), text)
    return EXIT_OK if res.ok else EXIT_FAIL


def _cmd_christoffel(args) -> int:
    kind = chr_.Kind.parse(args.kind)
    notes: list[str] = []
    params = _params(args)
    if kind is chr_.Kind.CHARLIER:
        sets = _sets(args, 1, notes)
        reports = [chr_.proportionality_check(kind, sets, params, args.n_max)]
        if sets[0] and sets[0].is_positive():
            if "a" not in params:
                raise UsageError("charlier needs --a")
            reports.append(chr_.ratio_identity_check(sets[0], params["a"], args.n_max))
    else:
        sets = _sets(args, 2, notes)
        reports = [chr_.proportionality_check(kind, sets, params, args.n_max)]
    for r in reports:
        r.notes = notes + r.notes
    _emit(args, [r.to_dict() for r in reports], "\n".join(_report_text(r) for r in reports))
    return EXIT_FAIL if any(r.failed for r in reports) else EXIT_OK


def _cmd_limits(args) -> int:
    which = LimitId.parse(args.which)
    try:
        scales = [GaussianRational.parse(s).re for s in args.scales.split(",")]
        x = GaussianRational.parse(args.x).re
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    notes: list[str] = []
    F1, F2 = _set(args.F if args.F != "{}" else "{1,2}", notes), _set(args.F2, notes)
    rep = verify_limit(which, scales, LimitSetup(n=args.n, F1=F1, F2=F2, x=x))
    _emit(args, rep.to_dict(), _report_text(rep))
    return EXIT_FAIL if rep.failed else EXIT_OK


def _cmd_identities(args) -> int:
    fid = FamilyId.parse(args.family)
    rep = family_identity_check(fid, _params(args), args.n_max)
    _emit(args, rep.to_dict(), _report_text(rep))
    return EXIT_FAIL if rep.failed else EXIT_OK


COMMANDS = {
    "poly": _cmd_poly,
    "caso": _cmd_caso,
    "sets": _cmd_sets,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "christoffel": _cmd_christoffel,
    "limits": _cmd_limits,
    "identities": _cmd_identities,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InternalInconsistency, NonzeroRemainder) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (CasoratianError, ValueError) as exc:
        # invalid parameters, empty components, malformed input
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
