"""Command-line entry point: ``reembed <subcommand> [flags] <jobfile>``.

Exit codes: 0 on success, 2 when a budget abort left a check inconclusive,
1 on any error.  Budgets and thread counts fall back to the REEMBED_BUDGET
and REEMBED_THREADS environment variables.
"""

from __future__ import annotations

import argparse
import os
import sys

from .groebner import DEFAULT_STEP_LIMIT
from .jobs import parse_job, run_job
from .parse import ParseError


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"error: {name} must be an integer, got {raw!r}")


def build_parser():
    top = argparse.ArgumentParser(
        prog="reembed",
        description="Exact re-embeddings of affine algebras: linear fans, "
                    "cotangent classes, elimination bases, border basis "
                    "schemes.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("jobfile", help="job file (ring + content lines)")
        p.add_argument("--json", action="store_true", dest="json_out",
                       help="emit a JSON report")
        p.add_argument("--budget", type=int, default=None,
                       help="pair-reduction step budget "
                            "(default REEMBED_BUDGET or 10^6)")
        p.add_argument("--threads", type=int, default=None,
                       help="worker count (recorded in the report; "
                            "default REEMBED_THREADS or 1)")

    p = sub.add_parser("gb", help="reduced basis under a chosen ordering")
    p.add_argument("--ordering", default="degrevlex",
                   help="degrevlex | lex | elim(z1,z2,...) | weight matrix "
                        "as JSON rows")
    common(p)

    p = sub.add_parser("gfan-linear",
                       help="fan of a linear ideal (marked reduced bases)")
    common(p)

    p = sub.add_parser("cotangent",
                       help="cotangent classes of the linear part")
    p.add_argument("--fan", action="store_true", dest="show_fan",
                   help="also list every leading-term set (binomial parts)")
    common(p)

    p = sub.add_parser("reembed", help="search for separating re-embeddings")
    p.add_argument("--alg", choices=("gfan", "cotangent"), default="gfan")
    p.add_argument("--size", type=int, default=None,
                   help="separating tuple size (default: linear-part dim)")
    p.add_argument("--optimal-only", action="store_true", default=True,
                   dest="optimal_only")
    p.add_argument("--subsets", action="store_false", dest="optimal_only",
                   help="also try non-optimal sub-tuples (explosive)")
    p.add_argument("--all", action="store_true", dest="all_results",
                   help="collect every verified tuple instead of the first")
    common(p)

    p = sub.add_parser("bbs", help="border basis scheme construction")
    p.add_argument("--reembed", action="store_true", dest="chain_reembed",
                   help="chain the defining ideal into the re-embedding "
                        "search")
    p.add_argument("--optimal-only", action="store_true", default=True,
                   dest="optimal_only")
    p.add_argument("--subsets", action="store_false", dest="optimal_only")
    common(p)

    return top


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        with open(args.jobfile, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    try:
        spec = parse_job(text, command=args.command)
        spec.budget = args.budget if args.budget is not None else \
            _env_int("REEMBED_BUDGET", DEFAULT_STEP_LIMIT)
        spec.threads = args.threads if args.threads is not None else \
            _env_int("REEMBED_THREADS", 1)
        spec.json_out = args.json_out
        for name in ("ordering_spec", "size", "alg", "optimal_only",
                     "all_results", "chain_reembed", "show_fan"):
            cli_name = {"ordering_spec": "ordering"}.get(name, name)
            if hasattr(args, cli_name):
                setattr(spec, name, getattr(args, cli_name))
        report = run_job(spec)
    except ParseError as e:
        print(f"error: {args.jobfile}:{e}", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    sys.stdout.write(report.render(spec.json_out))
    return report.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
