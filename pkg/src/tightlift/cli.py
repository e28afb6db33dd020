"""Command-line front-end.

Exit codes: 0 success, 1 unreadable input, 2 domain error (the error
class name is printed), 3 ``--check`` mismatch.
"""
import argparse
from enum import Enum
from fractions import Fraction
import json
import re
import sys

from . import pipeline
from .errors import DomainError, ExpectationMismatch, ParseError

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_MISMATCH = 0, 1, 2, 3


def to_json(value):
    """Plain JSON value; rationals become ``"p/q"`` strings."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): to_json(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json(v) for v in value]
    return value


def fmt(value):
    """Canonical one-line text form, also used for ``--check`` comparisons."""
    value = to_json(value)
    if isinstance(value, list):
        return "[" + ", ".join(fmt(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {fmt(v)}" for k, v in value.items()) + "}"
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _norm(text):
    return re.sub(r"\s+", "", text).lower()


def check(report, expected):
    if not expected:
        raise ParseError("no [expected] block to check against")
    bad = []
    for key, want in expected.items():
        got = fmt(report[key]) if key in report else "<missing>"
        if _norm(got) != _norm(want):
            bad.append(f"{key}: expected {want}, got {got}")
    if bad:
        raise ExpectationMismatch("; ".join(bad))


def _localize_args(tokens):
    vals = {}
    for tok in tokens:
        key, sep, val = tok.partition("=")
        if not sep:
            key, val = "range", tok
        vals[key.strip().lower()] = val.strip()
    try:
        p, dim = int(vals["p"]), int(vals["dim"])
        fixed = int(vals.get("fixed", 0))
        lo = hi = None
        if "range" in vals:
            lo, hi = (int(x) for x in vals["range"].split(":"))
    except (KeyError, ValueError) as exc:
        raise ParseError("usage: localize p=<prime> dim=<n> fixed=<k> [lo:hi]") from exc
    return p, dim, fixed, lo, hi


def build_parser():
    ap = argparse.ArgumentParser(prog="tightlift", description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="machine-readable report")
    ap.add_argument("--check", action="store_true",
                    help="compare with the file's [expected] block")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, hlp in (("grid", "classical invariants of a grid diagram"),
                      ("d3", "d3 and Spin^C data of a Legendrian surgery presentation"),
                      ("spin", "Spin structures, optionally pushed through a move script"),
                      ("cover", "lift a contact structure through a branched cover scene"),
                      ("seifert", "Seifert invariants, covers and lens recognition"),
                      ("pipeline", "grid to verdict on a pipeline scene")):
        sp = sub.add_parser(name, help=hlp)
        sp.add_argument("file")
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        sp.add_argument("--check", action="store_true", default=argparse.SUPPRESS)
    sp = sub.add_parser("localize", help="restriction tables for a representation sphere")
    sp.add_argument("args", nargs="+", metavar="key=value")
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    return ap


_RUNNERS = {
    "grid": pipeline.grid_report,
    "d3": pipeline.d3_report,
    "spin": pipeline.spin_report,
    "cover": pipeline.cover_report,
    "seifert": pipeline.seifert_report,
    "pipeline": pipeline.pipeline_report,
}


_RANGE_RE = re.compile(r"^-\d+:-?\d+$")


def run(argv, out=None, err=None):
    """Run one command; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    # a bare negative range like -2:5 would otherwise look like an option
    argv = [f"range={a}" if _RANGE_RE.match(a) else a for a in (argv or [])]
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_PARSE
    try:
        extra = []
        if args.command == "localize":
            report, extra = pipeline.localize_report(*_localize_args(args.args))
            expected = {}
        else:
            report, expected = _RUNNERS[args.command](args.file)
        if args.json:
            print(json.dumps(to_json(report), indent=2), file=out)
        else:
            for key, value in report.items():
                if key in ("verdict", "matched"):
                    continue
                print(f"{key} = {fmt(value)}", file=out)
            for line in extra:
                print(line, file=out)
            if "verdict" in report:
                tail = f" (matched: {report['matched']})" if report.get("matched") else ""
                print(f"verdict: {report['verdict']}{tail}", file=out)
        if args.check:
            check(report, expected)
    except ParseError as exc:
        print(f"error: ParseError: {exc}", file=err)
        return EXIT_PARSE
    except DomainError as exc:
        where = f" [{exc.stage}]" if getattr(exc, "stage", None) else ""
        print(f"error{where}: {type(exc).__name__}: {exc}", file=err)
        return EXIT_DOMAIN
    except ExpectationMismatch as exc:
        print(f"check failed: {exc}", file=err)
        return EXIT_MISMATCH
    return EXIT_OK


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
