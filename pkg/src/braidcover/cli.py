"""Command line front end.

Exit codes: 0 success, 2 input error, 3 hypothesis guard (annulus / not fully
ramified), 4 internal invariant violation.  On failure a JSON error object is
written to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import BraidCoverError
from .pipeline import DEFAULT_MAX_PERIOD, DEFAULT_MMAX, cmd_classify, cmd_fdtc, cmd_transfer


def _load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("braid", nargs="?", default=None,
                        help='braid word, e.g. "s1 -s2" or "1 -2" (use --braid for words starting with -s)')
    common.add_argument("-b", "--braid", dest="braid_opt", metavar="WORD")
    common.add_argument("-n", "--strands", type=int, default=None,
                        help="number of strands (default: inferred from the word)")
    common.add_argument("--mmax", type=int, default=DEFAULT_MMAX, help="largest power in the floor homogenization")
    common.add_argument("--max-period", type=int, default=DEFAULT_MAX_PERIOD, help="periodic certificate search limit")
    common.add_argument("--json", action="store_true", help="emit the JSON report")
    common.add_argument("--timings", action="store_true", help="include per-stage timings")

    cover = argparse.ArgumentParser(add_help=False)
    cover.add_argument("-d", "--degree", type=int, default=2, help="degree of the standard cyclic cover")
    cover.add_argument("--cover-spec", metavar="FILE", help="JSON cover specification (overrides --degree)")

    parser = argparse.ArgumentParser(prog="braidcover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("fdtc", parents=[common], help="FDTC and right-veering status of a braid")
    sub.add_parser("transfer", parents=[common, cover], help="lift the FDTC to a branched cover")
    p = sub.add_parser("classify", parents=[common, cover], help="run the classification rules")
    p.add_argument("--assert", dest="assertions", metavar="FILE", help="JSON file of user assertions")
    return parser


def run(args) -> int:
    braid = args.braid_opt if args.braid_opt is not None else (args.braid or "")
    common = dict(n=args.strands, m_max=args.mmax, max_period=args.max_period)
    if args.command == "fdtc":
        report = cmd_fdtc(braid, **common)
    else:
        spec = _load_json(args.cover_spec) if args.cover_spec else None
        if args.command == "transfer":
            report = cmd_transfer(braid, degree=args.degree, cover_spec=spec, **common)
        else:
            facts = _load_json(args.assertions) if args.assertions else None
            report = cmd_classify(braid, degree=args.degree, cover_spec=spec, assertions=facts, **common)
    if args.json:
        print(report.to_json(include_timings=args.timings))
    else:
        if not args.timings:
            report.timings = None
        print(report.to_text())
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except BraidCoverError as exc:
        print(json.dumps(exc.to_dict(), indent=2))
        return exc.exit_code
    except (OSError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}, indent=2))
        return 2


if __name__ == "__main__":
    sys.exit(main())
