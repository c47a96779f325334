"""Command-line interface.

Exit status is 0 on success or PASS, 1 on FAIL, 2 on usage or input errors.
Rationals are always printed as ``P/Q``.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import hgr
from .coloring import enumerate_classes, uniqueness_status, Uniqueness
from .constructions import build_nested_sunflowers, build_quasi_sunflower, complete_kpartite, hkr
from .core import format_rational, has_isolated, min_positive_degree, parse_rational, shadow
from .report import FAIL, Report
from .thresholds import conjecture_probe, phase_point, phi, phi_upper
from .verify import (
    verify_boundary,
    verify_construction,
    verify_corollary_construction,
    verify_ffk,
    verify_main_theorem,
    verify_phi331,
    verify_sunflower_fact,
)


EXHAUSTIVE = "exhaustive"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_list(text: str):
    return [_rational(x) for x in text.split(",") if x.strip()]


def _trials(text: str) -> int | str:
    if text.lower() == EXHAUSTIVE:
        return EXHAUSTIVE
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("trials must be an integer or 'exhaustive'") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="unicolor", description="Unique colorability of uniform hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="write a generated hypergraph in .hgr format")
    p.add_argument("--family", required=True,
                   choices=["hkr", "sunflower", "nested-sunflower", "complete-kpartite"])
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--alpha", type=_rational)
    p.add_argument("--m", type=int)
    p.add_argument("--sizes", type=_int_list)
    p.add_argument("--out", type=Path, help="output file (default: stdout)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("analyze", help="sizes, isolation, shadows and positive degrees")
    p.add_argument("file", type=Path)
    p.add_argument("--i", type=int, action="append", help="degree order (repeatable; default all)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("colorings", help="list coloring classes")
    p.add_argument("file", type=Path)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limit", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check-unique", help="decide unique k-colorability")
    p.add_argument("file", type=Path)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("threshold", help="exact threshold constants")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--i", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run a verification harness (JSON report)")
    p.add_argument("experiment",
                   choices=["construction", "main", "boundary", "phi331", "sunflower", "corollary", "ffk"])
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--alpha", type=_rational)
    p.add_argument("--m", type=int)
    p.add_argument("--m-max", type=int)
    p.add_argument("--r-max", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--trials", type=_trials)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", type=Path, help="write the counterexample of a FAIL here")
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")

    p = sub.add_parser("probe-conjecture", help="exact degree ratios of H_{k,r}(alpha, m)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--alphas", type=_rational_list, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    return parser


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command}: missing {', '.join(missing)}")


def _sampled_only(args: argparse.Namespace) -> None:
    if args.trials == EXHAUSTIVE:
        raise UsageError(f"verify {args.experiment}: --trials must be an integer")


def _emit(out, args: argparse.Namespace, data: dict[str, Any], lines: list[str]) -> None:
    if getattr(args, "json", False):
        out.write(json.dumps(data) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def _construct(args, out) -> int:
    family = args.family
    if family == "hkr":
        _need(args, "k", "r", "alpha", "m")
        H = hkr(args.k, args.r, args.alpha, args.m)[0]
        label = f"H_{{{args.k},{args.r}}}({format_rational(args.alpha)}, {args.m})"
    elif family in ("sunflower", "nested-sunflower"):
        _need(args, "r", "m")
        build = build_quasi_sunflower if family == "sunflower" else build_nested_sunflowers
        H = build(args.r, args.m)
        label = f"{family} r={args.r} m={args.m}"
    else:
        _need(args, "r", "sizes")
        H = complete_kpartite(args.r, args.sizes)[0]
        label = f"complete k-partite r={args.r} sizes={','.join(map(str, args.sizes))}"
    text = hgr.dumps(H, comment=label)
    if args.out is None:
        out.write(text)
        return 0
    args.out.write_text(text)
    _emit(out, args, {"family": family, "n": H.n, "r": H.r, "edges": len(H), "out": str(args.out)},
          [f"wrote {label}: n={H.n} r={H.r} |H|={len(H)} -> {args.out}"])
    return 0


def _analyze(args, out) -> int:
    H = hgr.load(args.file)
    orders = args.i or list(range(1, H.r))
    for i in orders:
        if not 1 <= i <= H.r - 1:
            raise UsageError(f"analyze: --i must be in 1..{H.r - 1}")
    degrees = {str(i): min_positive_degree(H, i) for i in orders}
    shadows = {str(i): len(shadow(H, i)) for i in range(1, H.r)}
    data = {"n": H.n, "r": H.r, "edges": len(H), "isolated": has_isolated(H),
            "min_positive_degree": degrees, "shadow_sizes": shadows}
    lines = [f"n={H.n}", f"r={H.r}", f"|H|={len(H)}", f"isolated={str(has_isolated(H)).lower()}"]
    lines += [f"delta+_{i}={'absent' if d is None else d}" for i, d in degrees.items()]
    lines += [f"|shadow_{i}|={s}" for i, s in shadows.items()]
    _emit(out, args, data, lines)
    return 0


def _colorings(args, out) -> int:
    H = hgr.load(args.file)
    classes = enumerate_classes(H, args.k, args.limit)
    data = {"k": args.k, "classes": len(classes), "representatives": [list(c.assignment) for c in classes]}
    lines = [f"classes={len(classes)}"] + [" ".join(map(str, c.assignment)) for c in classes]
    _emit(out, args, data, lines)
    return 0


def _check_unique(args, out) -> int:
    H = hgr.load(args.file)
    status = uniqueness_status(H, args.k)
    unique = status is Uniqueness.UNIQUE
    _emit(out, args, {"k": args.k, "unique": unique, "status": status.value},
          [str(unique).lower(), f"status={status.value}"])
    return 0


def _threshold(args, out) -> int:
    k, r, i = args.k, args.r, args.i
    data: dict[str, Any] = {"k": k, "r": r, "phase_point": format_rational(phase_point(r))}
    if i is None:
        value = phi(k, r)
        data["phi"] = format_rational(value)
        lines = [format_rational(value), f"phase_point={data['phase_point']}"]
    else:
        bound = phi_upper(k, r, i)
        data.update(i=i, phi_upper=format_rational(bound.value), exact=bound.exact)
        lines = [format_rational(bound.value), "EXACT" if bound.exact else "UPPER_BOUND",
                 f"phase_point={data['phase_point']}"]
    _emit(out, args, data, lines)
    return 0


def _verify(args, out, err) -> int:
    name = args.experiment
    if name == "construction":
        _need(args, "k", "r", "alpha", "m")
        report = verify_construction(args.k, args.r, args.alpha, args.m)
    elif name == "main":
        _need(args, "k", "r", "n_max", "trials")
        trials = None if args.trials == EXHAUSTIVE else args.trials
        if trials is not None and args.seed is None:
            raise UsageError("verify main: sampled runs need --seed")
        report = verify_main_theorem(args.k, args.r, args.n_max, trials, args.seed)
    elif name == "boundary":
        _need(args, "k", "r", "m")
        report = verify_boundary(args.k, args.r, args.m)
    elif name == "phi331":
        _need(args, "m_max", "trials", "n_max", "seed")
        _sampled_only(args)
        report = verify_phi331(args.m_max, args.trials, args.n_max, args.seed)
    elif name == "sunflower":
        _need(args, "r_max", "m_max")
        report = verify_sunflower_fact(args.r_max, args.m_max)
    elif name == "corollary":
        _need(args, "k", "r", "i", "m")
        report = verify_corollary_construction(args.k, args.r, args.i, args.m)
    else:
        _need(args, "trials", "seed")
        _sampled_only(args)
        extra = {key: getattr(args, key) for key in ("n_max", "k_max") if getattr(args, key) is not None}
        report = verify_ffk(args.trials, args.seed, **extra)
    return _finish_report(report, args, out, err)


def _finish_report(report: Report, args, out, err) -> int:
    out.write(report.to_json() + "\n")
    if report.verdict != FAIL:
        return 0
    if report.counterexample is not None:
        if getattr(args, "out", None) is not None:
            args.out.write_text(report.counterexample)
        else:
            err.write(report.counterexample)
    return 1


def _probe(args, out, err) -> int:
    return _finish_report(conjecture_probe(args.k, args.r, args.i, args.alphas, args.m), args, out, err)


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    """Run the CLI with ``argv`` and return the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.command == "construct":
            return _construct(args, out)
        if args.command == "analyze":
            return _analyze(args, out)
        if args.command == "colorings":
            return _colorings(args, out)
        if args.command == "check-unique":
            return _check_unique(args, out)
        if args.command == "threshold":
            return _threshold(args, out)
        if args.command == "verify":
            return _verify(args, out, err)
        return _probe(args, out, err)
    except hgr.HgrFormatError as exc:
        err.write(f"unicolor: {exc}\n")
        return 2
    except (UsageError, ValueError, OSError) as exc:
        err.write(f"unicolor: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
