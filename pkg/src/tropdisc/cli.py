"""Command-line entry point: ``tropdisc <command> --input system.json [...]``."""

import argparse
import json
import logging
import sys
from pathlib import Path

from . import report as rp
from .polytope import PolynomialSyntaxError, load_polynomial
from .system import InvalidSystem, derive, load_system
from .tropical import tropicalize

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PIPELINE = 2
EXIT_MISMATCH = 3
EXIT_RESIDUAL = 4

COMMANDS = ("derive", "tropicalize", "normals", "oracle-compare", "hk-verify", "all")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tropdisc",
        description="Tropical discriminants of reduced Laurent systems.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", required=True, help="system file (JSON)")
    p.add_argument("--poly", help="polynomial file: expression text or JSON term list")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--format", choices=("human", "structured"), default="human")
    return p


def run(args: argparse.Namespace):
    """Execute one command; returns (exit status, report dict)."""
    if args.tol <= 0:
        raise UsageError("--tol must be positive")
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    if args.command in ("oracle-compare", "hk-verify") and not args.poly:
        raise UsageError(f"{args.command} needs --poly")
    try:
        spec = load_system(args.input)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read system file {args.input}: {exc}") from exc
    poly = None
    if args.poly:
        try:
            poly = load_polynomial(args.poly)
        except (OSError, json.JSONDecodeError, PolynomialSyntaxError, KeyError) as exc:
            raise UsageError(f"cannot read polynomial file {args.poly}: {exc}") from exc

    d = derive(spec)
    if poly is not None and poly.dim < d.N:
        poly = load_polynomial(args.poly, d.N)
    out = {}
    status = EXIT_OK
    cmd = args.command
    if cmd in ("derive", "all"):
        out["derive"] = rp.derive_report(spec, d)
    if cmd in ("normals", "all"):
        out["normals"] = rp.normals_report(d)
    fan = None
    if cmd in ("tropicalize", "oracle-compare", "all"):
        fan = tropicalize(d)
    if cmd in ("tropicalize", "all"):
        out["tropicalize"] = rp.tropical_report(spec, d, fan)
    if poly is not None and cmd in ("oracle-compare", "all"):
        out["oracle_compare"] = rp.oracle_report(poly, fan)
        if not out["oracle_compare"]["ok"]:
            status = EXIT_MISMATCH
    if poly is not None and cmd in ("hk-verify", "all"):
        out["hk_verify"] = rp.hk_report(d, poly, args.samples, args.seed, args.tol)
        if not out["hk_verify"]["ok"] and status == EXIT_OK:
            status = EXIT_RESIDUAL
    return status, rp.attach_schema(out, cmd, args.input)


def render(report: dict, fmt: str) -> str:
    if fmt == "structured":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    return rp.render_human(report)


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        status, report = run(args)
    except (UsageError, InvalidSystem) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"pipeline error: {exc}", file=sys.stderr)
        return EXIT_PIPELINE
    text = render(report, args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if status == EXIT_MISMATCH:
        print("oracle mismatch: " + report["oracle_compare"]["summary"], file=sys.stderr)
    elif status == EXIT_RESIDUAL:
        print("residual check failed", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
