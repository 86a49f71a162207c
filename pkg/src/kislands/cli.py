"""Command-line front end.

Exit status: 0 on success, 2 when a checked bound or certificate fails,
1 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import applicable_bounds
from .canonical import canonical_ordering
from .enumeration import (DEFAULT_ALL_ISLANDS_CAP, DEFAULT_HOLE_CAP, KINDS, count_all_islands,
                          count_k_subsets, largest_hole_size)
from .experiments import (estimate_csv, fmt_decimal, growth_csv, growth_experiment, monte_carlo)
from .horton import DEFAULT_VERIFY_CAP, HortonConstructionError, horton_d, verify_horton
from .pointset import parse_pointset, pointset_from_json, pointset_to_json, serialize_pointset
from .sampler import BODIES, sample_set

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_set(path):
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    if text.lstrip().startswith("{"):
        return pointset_from_json(text)
    return parse_pointset(text)


def _emit(text, out):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table(rows, fmt):
    """rows: list of dicts with identical keys."""
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    keys = list(rows[0]) if rows else []
    if fmt == "csv":
        lines = [",".join(keys)] + [",".join(str(r[k]) for k in keys) for r in rows]
    else:
        lines = ["  ".join(f"{k}={r[k]}" for k in keys) for r in rows]
    return "\n".join(lines) + "\n"


# -- subcommands


def cmd_sample(a):
    S = sample_set(a.body, a.n, a.seed, dim=a.dim, check_general_position=a.check_gp)
    return (pointset_to_json(S) + "\n" if a.format == "json" else serialize_pointset(S)), EXIT_OK


def cmd_count(a):
    S = _read_set(a.input)
    if a.kind == "all":
        r = count_all_islands(S, a.method or "direct", cap=a.cap or DEFAULT_ALL_ISLANDS_CAP)
    else:
        if a.k is None:
            raise UsageError("--k is required unless --kind all")
        r = count_k_subsets(S, a.k, a.kind, method=a.method or "auto")
    row = {"n": r.n, "k": "all" if r.k is None else r.k, "kind": r.kind, "count": r.value}
    return _table([row], a.format), EXIT_OK


def cmd_canonical(a):
    rep = canonical_ordering(_read_set(a.input))
    d = rep.to_dict()
    if a.format == "json":
        return json.dumps(d, indent=2) + "\n", EXIT_OK
    row = {"permutation": " ".join(map(str, d["permutation"])), "a": d["a"],
           "delta_volume": d["delta_volume"]}
    row.update(d["condition_flags"])
    return _table([row], a.format), EXIT_OK


def cmd_horton(a):
    S = horton_d(a.dim, a.n)
    text = pointset_to_json(S) + "\n" if a.format == "json" else serialize_pointset(S)
    code = EXIT_OK
    if a.verify:
        rep = verify_horton(S, cap=a.cap or DEFAULT_VERIFY_CAP)
        text += json.dumps(rep.to_dict(), indent=2) + "\n"
        code = EXIT_OK if rep.ok else EXIT_FAIL
    return text, code


def cmd_verify_horton(a):
    rep = verify_horton(_read_set(a.input), cap=a.cap or DEFAULT_VERIFY_CAP)
    d = rep.to_dict()
    if a.format == "json":
        text = json.dumps(d, indent=2) + "\n"
    else:
        text = _table([{k: v for k, v in d.items() if k != "witnesses"}], a.format)
    return text, EXIT_OK if rep.ok else EXIT_FAIL


def cmd_bounds(a):
    found = applicable_bounds(a.d, a.k, a.n)
    if not found:
        raise UsageError(f"no bound applies to d={a.d}, k={a.k}, n={a.n}")
    rows = [{"formula_id": i, "d": v.d, "k": v.k, "n": v.n, "exact": str(v.value),
             "decimal": fmt_decimal(v.value)} for i, v in found.items()]
    return _table(rows, a.format), EXIT_OK


def cmd_estimate(a):
    rep = monte_carlo(a.body, a.dim, a.k, a.n, a.trials, a.seed, a.kind,
                      threads=a.threads, cap=a.cap or DEFAULT_HOLE_CAP)
    if a.format == "csv":
        text = estimate_csv([rep])
    elif a.format == "json":
        text = json.dumps(rep.to_dict(), indent=2) + "\n"
    else:
        text = _table([rep.row()], "text")
    return text, EXIT_OK if rep.passed else EXIT_FAIL


def cmd_growth(a):
    k = a.k if a.k == "all" else int(a.k)
    sizes = [int(s) for s in a.sizes.split(",") if s]
    rep = growth_experiment(a.source, a.dim, k, sizes, a.trials, a.seed, threads=a.threads, cap=a.cap)
    if a.format == "csv":
        text = growth_csv(rep)
    elif a.format == "json":
        text = json.dumps(rep.to_dict(), indent=2) + "\n"
    else:
        text = _table(rep.rows(), "text")
    ok = True
    if a.min_slope is not None:
        ok = rep.fitted_slope is not None and rep.fitted_slope >= a.min_slope
    if a.min_r2 is not None:
        ok = ok and rep.r_squared is not None and rep.r_squared >= a.min_r2
    return text, EXIT_OK if ok else EXIT_FAIL


def cmd_largest_hole(a):
    S = _read_set(a.input)
    size = largest_hole_size(S, cap=a.cap or DEFAULT_HOLE_CAP)
    return _table([{"n": S.n, "largest_hole": size}], a.format), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="64-bit seed")
    common.add_argument("--format", choices=("csv", "json", "text"), default="text")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--threads", type=int, default=1, help="worker processes for trials")
    common.add_argument("--cap", type=int, default=None, help="raise an enumeration or verification cap")

    p = _Parser(prog="kislands", description="k-holes, k-islands and Horton sets with exact arithmetic")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("sample", parents=[common], help="sample a point set from a convex body")
    s.add_argument("--body", choices=BODIES, default="cube")
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--check-gp", action=argparse.BooleanOptionalAction, default=None,
                   help="force the general-position resampling loop on or off (default: on for n <= 64)")
    s.set_defaults(fn=cmd_sample)

    s = sub.add_parser("count", parents=[common], help="count k-holes, k-islands, convex k-sets or all islands")
    s.add_argument("--input", default="-")
    s.add_argument("--k", type=int)
    s.add_argument("--kind", choices=KINDS + ("all",), default="hole")
    s.add_argument("--method", help="auto/brute/pruned, or direct/convex_bijection with --kind all")
    s.set_defaults(fn=cmd_count)

    s = sub.add_parser("canonical", parents=[common], help="canonical ordering of a point set")
    s.add_argument("--input", default="-")
    s.set_defaults(fn=cmd_canonical)

    s = sub.add_parser("horton", parents=[common], help="build a certified Horton set")
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--verify", action="store_true", help="append the verification report as JSON")
    s.set_defaults(fn=cmd_horton)

    s = sub.add_parser("verify-horton", parents=[common], help="certify a point set as d-Horton")
    s.add_argument("--input", default="-")
    s.set_defaults(fn=cmd_verify_horton)

    s = sub.add_parser("bounds", parents=[common], help="evaluate the applicable closed-form bounds")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(fn=cmd_bounds)

    s = sub.add_parser("estimate", parents=[common], help="Monte Carlo mean count against the bounds")
    s.add_argument("--body", choices=BODIES, default="cube")
    s.add_argument("--dim", type=int, default=2)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--kind", choices=("hole", "island"), default="hole")
    s.set_defaults(fn=cmd_estimate)

    s = sub.add_parser("growth", parents=[common], help="island growth over sizes with a fitted slope")
    s.add_argument("--source", choices=BODIES + ("horton",), default="cube")
    s.add_argument("--dim", type=int, default=2)
    s.add_argument("--k", default="all", help="island size, or 'all'")
    s.add_argument("--sizes", required=True, help="comma-separated, increasing")
    s.add_argument("--trials", type=int, default=20)
    s.add_argument("--min-slope", type=float)
    s.add_argument("--min-r2", type=float)
    s.set_defaults(fn=cmd_growth)

    s = sub.add_parser("largest-hole", parents=[common], help="size of the largest hole")
    s.add_argument("--input", default="-")
    s.set_defaults(fn=cmd_largest_hole)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.fn(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"kislands {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HortonConstructionError as exc:
        print(f"kislands {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
