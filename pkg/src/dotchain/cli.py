"""Command-line front end.

Every invocation writes one JSON document to stdout (or CSV for ``fit`` and
``verify`` with ``--csv``).  Exit status is 0 on success, 1 on invalid
input and 2 on internal errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

from . import bounds as _bounds
from .chains import CountReport, count_chains_dp, count_chains_distinct, enumerate_chains
from .constructions import GENERATORS, generate_grid, generate_random_disk
from .geometry import ChainType, GeometryError, format_scalar, scalar
from .pointset import PointSet
from .stats import (DEFAULT_ENERGY_THRESHOLD, energy, is_s_adaptable, max_flat_richness,
                    min_separation, radial_line_profile)

CSV_HEADER = ["n", "count_with_repeats", "count_distinct", "elapsed_ms"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _rationals(text: str) -> List[Fraction]:
    return [scalar(part) for part in text.split(",") if part.strip()]


def _ints(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise GeometryError(f"expected a comma-separated list of integers, got {text!r}") from None


def _reals(values: Optional[Sequence[str]]) -> List[float]:
    out = []
    for v in values or []:
        out.extend(float(part) for part in v.split(",") if part.strip())
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dotchain", description="Exact dot-product chain counting toolkit.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def chain_args(p):
        p.add_argument("--set", required=True, metavar="PATH")
        p.add_argument("--alphas", metavar="LIST")
        p.add_argument("--allow-zero", action="store_true")

    p = sub.add_parser("generate", help="write a constructed point set")
    p.add_argument("--construction", required=True, choices=sorted(GENERATORS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--alpha1", default="1")
    p.add_argument("--alphas", metavar="LIST")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--denom", type=int, default=1000)
    p.add_argument("-o", dest="output", metavar="PATH")

    p = sub.add_parser("count", help="count k-chains in a point set file")
    chain_args(p)
    p.add_argument("--mode", choices=["repeats", "distinct", "both"], default="repeats")

    p = sub.add_parser("enumerate", help="count k-chains and list witnesses")
    chain_args(p)
    p.add_argument("--mode", choices=["repeats", "distinct"], default="distinct")
    p.add_argument("--limit", type=int, default=10)

    p = sub.add_parser("stats", help="richness, radial and s-adaptability statistics")
    p.add_argument("--set", required=True, metavar="PATH")
    p.add_argument("--s", action="append", metavar="REAL")
    p.add_argument("--energy-threshold", type=float, default=DEFAULT_ENERGY_THRESHOLD)
    p.add_argument("--flat-dim", type=int, choices=[1, 2])

    p = sub.add_parser("bounds", help="evaluate a bound formula")
    p.add_argument("--bound", required=True, choices=_bounds.BOUND_IDS)
    p.add_argument("--n", type=float, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=float)
    p.add_argument("--r", type=float)
    p.add_argument("--d", type=int)
    p.add_argument("--s", type=float)
    p.add_argument("--eps", type=float, default=float(_bounds.DEFAULT_EPS))

    p = sub.add_parser("fit", help="fit a growth exponent to a sweep CSV")
    p.add_argument("--set", required=True, metavar="PATH", help="CSV file, or - for stdin")
    p.add_argument("--mode", choices=["repeats", "distinct"], default="repeats")
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("verify", help="generate, count, fit and compare against a bound")
    p.add_argument("--family", required=True, choices=_bounds.FAMILIES)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--sweep", required=True, metavar="LIST")
    p.add_argument("--bound", choices=_bounds.BOUND_IDS)
    p.add_argument("--direction", choices=["upper", "lower"], default="upper")
    p.add_argument("--slack", type=float, default=_bounds.DEFAULT_SLACK)
    p.add_argument("--mode", choices=["repeats", "distinct"], default="repeats")
    p.add_argument("--alpha1", default="1")
    p.add_argument("--alphas", metavar="LIST")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--denom", type=int)
    p.add_argument("--eps", type=float)
    p.add_argument("--csv", action="store_true")
    return parser


# -- subcommands -----------------------------------------------------------

def _generate(args):
    name = args.construction
    promised = chain_type = None
    if name in ("prop3", "axes2d", "lenz3d") and args.k is None:
        raise GeometryError(f"--k is required for {name}")
    if name == "prop3":
        cfg = GENERATORS[name](args.n, args.k, scalar(args.alpha1))
    elif name == "axes2d":
        cfg = GENERATORS[name](args.n, args.k)
    elif name == "lenz3d":
        if args.alphas is None:
            raise GeometryError("--alphas is required for lenz3d")
        cfg = GENERATORS[name](args.n, args.k, _rationals(args.alphas))
    elif name == "random_disk":
        cfg = None
        E = generate_random_disk(args.n, seed=args.seed, denom=args.denom)
    else:
        cfg = None
        E = generate_grid(args.n)
    if cfg is not None:
        E, chain_type, promised = cfg.set, cfg.chain_type, cfg.promised_count_lower_bound
        prov = dict(E.provenance)
        prov["chain_type"] = {"alphas": [format_scalar(a) for a in chain_type.alphas],
                              "allow_zero": chain_type.allow_zero}
        prov["promised_count_lower_bound"] = str(promised)
        E = PointSet(E.name, E.points, prov)
    if args.output:
        E.save(args.output)
        return {"written": args.output, "name": E.name, "n": E.n, "dim": E.dim,
                "provenance": E.provenance}
    return E.to_record()


def _chain_type(args, E: PointSet) -> ChainType:
    if args.alphas is not None:
        return ChainType(tuple(_rationals(args.alphas)), allow_zero=args.allow_zero)
    stored = E.provenance.get("chain_type")
    if stored:
        return ChainType(tuple(scalar(a) for a in stored["alphas"]),
                         allow_zero=bool(stored.get("allow_zero")) or args.allow_zero)
    raise GeometryError("--alphas is required (the set records no chain type)")


def _count(args):
    E = PointSet.load(args.set)
    t = _chain_type(args, E)
    reports: List[CountReport] = []
    if args.mode in ("repeats", "both"):
        reports.append(count_chains_dp(E, t))
    if args.mode in ("distinct", "both"):
        reports.append(count_chains_distinct(E, t))
    out = {"set": E.name, "n": E.n, "k": t.k,
           "alphas": [format_scalar(a) for a in t.alphas],
           "reports": [r.to_record() for r in reports]}
    promised = E.provenance.get("promised_count_lower_bound")
    if promised is not None and args.alphas is None and args.mode != "distinct":
        out["promised_count_lower_bound"] = promised
        out["promise_ok"] = reports[0].count >= int(promised)
    return out


def _enumerate(args):
    E = PointSet.load(args.set)
    t = _chain_type(args, E)
    witnesses, report = enumerate_chains(E, t, distinct=args.mode == "distinct", limit=args.limit)
    rec = report.to_record()
    rec["witnesses"] = [[[format_scalar(c) for c in p] for p in w] for w in witnesses]
    return rec


def _stats(args):
    E = PointSet.load(args.set)
    out = {"set": E.name, "n": E.n, "dim": E.dim}
    if E.n >= 2:
        dims = [args.flat_dim] if args.flat_dim else ([1, 2] if E.dim == 3 else [1])
        for fd in dims:
            rep = max_flat_richness(E, fd)
            out["t" if fd == 1 else "r"] = rep.max_points
            out["t_flat" if fd == 1 else "r_flat"] = rep.flat
    prof = radial_line_profile(E)
    out["radial_max"] = prof.max_count
    out["origin_present"] = prof.origin_present
    if E.n >= 2:
        out["min_sep"] = min_separation(E)
        out["energy"] = {}
        for s in _reals(args.s):
            rep = is_s_adaptable(E, s, args.energy_threshold)
            out["energy"][repr(s)] = {
                "energy": rep.energy_value, "sep_threshold": rep.sep_threshold,
                "separation_ok": rep.separation_ok, "energy_ok": rep.energy_ok,
            }
    return out


def _bounds_cmd(args):
    params = {"n": args.n, "k": args.k, "t": args.t, "r": args.r, "d": args.d,
              "s": args.s, "eps": args.eps}
    spec = _bounds.BoundSpec(args.bound, {k: v for k, v in params.items() if v is not None})
    rec = _bounds.evaluate_bound(spec).to_record()
    rec["params"] = spec.params
    return rec


def _read_sweep_csv(path: str, mode: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    reader = csv.DictReader(io.StringIO(text))
    fields = reader.fieldnames or []
    col = "count_with_repeats" if mode == "repeats" else "count_distinct"
    if col not in fields:
        col = "count" if "count" in fields else None
    if "n" not in fields or col is None:
        raise GeometryError(f"CSV needs columns n and {', '.join(CSV_HEADER[1:3])} (or count)")
    try:
        return [(int(row["n"]), int(row[col])) for row in reader]
    except ValueError as exc:
        raise GeometryError(f"bad CSV value: {exc}") from None


def _fit(args):
    samples = _read_sweep_csv(args.set, args.mode)
    return _bounds.fit_growth_exponent(samples).to_record()


def _sweep_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([str(r.n), str(r.count_with_repeats), str(r.count_distinct), str(r.elapsed_ms)])
    return buf.getvalue()


def _verify(args):
    kwargs = {}
    if args.family == "prop3":
        kwargs["alpha1"] = scalar(args.alpha1)
    if args.alphas is not None:
        kwargs["alphas"] = _rationals(args.alphas)
    if args.family == "random_disk":
        kwargs["seed"] = args.seed
        kwargs["denom"] = args.denom
    bound_params = {"eps": args.eps} if args.eps is not None else None
    report = _bounds.verify_family(
        args.family, args.k, _ints(args.sweep), bound=args.bound, direction=args.direction,
        slack=args.slack, mode=args.mode, bound_params=bound_params, **kwargs)
    if args.csv:
        return _sweep_csv(report.rows)
    return report.to_record()


_COMMANDS = {
    "generate": _generate, "count": _count, "enumerate": _enumerate, "stats": _stats,
    "bounds": _bounds_cmd, "fit": _fit, "verify": _verify,
}


def _default(o):
    if isinstance(o, Fraction):
        return format_scalar(o)
    raise TypeError(f"not JSON serializable: {type(o).__name__}")


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage())
        result = _COMMANDS[args.command](args)
    except UsageError as exc:
        stdout.write(json.dumps({"error": "usage", "message": str(exc)}) + "\n")
        return 1
    except (ValueError, OSError) as exc:
        stdout.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1
    except Exception as exc:  # pragma: no cover - last-resort guard
        stdout.write(json.dumps({"error": "internal", "message": repr(exc)}) + "\n")
        return 2
    if isinstance(result, str):
        stdout.write(result)
    else:
        stdout.write(json.dumps(result, indent=2, default=_default) + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
