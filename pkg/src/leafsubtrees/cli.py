"""Command-line interface.

Subcommands: count, enumerate, kappa, table, floor, verify.  Exit codes:
0 on success, 1 when a verification check fails (or a resource/precision
limit aborts the computation), 2 on usage or parse errors.

With --json every command emits one object with the stable field set
{command, inputs, results, checks}, where checks is a list of
{name, pass, expected, actual} records ("expected"/"actual" are strings).
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from typing import Any

from mpmath import mp, mpf

from .asymptotics import (
    FloorThresholdNotFound,
    complete_dary_recurrence,
    floor_formula,
    floor_match_table,
    kappa,
    kappa_bounds,
    log_closed_form,
)
from .enumeration import count as count_classes
from .enumeration import induced_set
from .errors import PrecisionExhaustedError, ResourceLimitError
from .extremal import generate_topological, series_reduced_leaf_counts, verify_minimum
from .formulas import (
    binary_caterpillar_count,
    caterpillar_count,
    complete_dary_count,
    complete_dary_sequence,
    family_count,
    star_count,
)
from .induction import brute_force_set
from .newick import NewickError, parse_newick, to_newick
from .trees import (
    RootedTree,
    binary_caterpillar,
    complete_dary,
    dary_caterpillar,
    star,
    tree_from_code,
)

IDENTITY_TOLERANCE_DIGITS = 20  # verify --lemma1 accepts errors below 1e-20


def format_digits(x: mpf, digits: int) -> str:
    """Decimal string of ``x`` with round-half-even at ``digits`` significant digits."""
    s = mp.nstr(x, digits + 10, strip_zeros=False)
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        return str(+Decimal(s))


def check(name: str, ok: bool, expected: Any, actual: Any) -> dict[str, Any]:
    return {"name": name, "pass": bool(ok), "expected": str(expected), "actual": str(actual)}


def emit(args: argparse.Namespace, report: dict[str, Any], lines: list[str]) -> int:
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for line in lines:
            print(line)
    return 1 if any(not c["pass"] for c in report["checks"]) else 0


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return n


def _load_tree(path: str) -> RootedTree:
    with open(path, encoding="utf-8") as fh:
        return parse_newick(fh.read())


def _family_tree(args: argparse.Namespace) -> RootedTree:
    if args.family == "star":
        return star(args.n)
    if args.family == "bincat":
        return binary_caterpillar(args.n)
    if args.family == "cat":
        return dary_caterpillar(args.d, args.n)
    return complete_dary(args.d, args.h)


def _family_formula(args: argparse.Namespace) -> int:
    if args.family == "star":
        return star_count(args.n)
    if args.family == "bincat":
        return binary_caterpillar_count(args.n)
    if args.family == "cat":
        if args.d == 2:
            return binary_caterpillar_count(args.n)
        return caterpillar_count(args.d, args.n)
    return complete_dary_count(args.d, args.h)


def _require_family_params(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    need = {"star": ("n",), "bincat": ("n",), "cat": ("d", "n"), "complete": ("d", "h")}
    for name in need[args.family]:
        if getattr(args, name) is None:
            parser.error(f"--family {args.family} requires --{name}")


def cmd_count(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    checks: list[dict[str, Any]] = []
    if args.family:
        _require_family_params(parser, args)
    if args.newick:
        tree = _load_tree(args.newick)
        if not tree.is_topological():
            raise ValueError("count requires a topological tree (no outdegree-1 vertex)")
    elif args.method in ("enumerate", "brute"):
        tree = _family_tree(args)
    else:
        tree = None

    method = args.method
    if method == "auto":
        if args.family:
            value = _family_formula(args)
            method = "formula"
        else:
            value = count_classes(tree)
    elif method == "formula":
        if args.family:
            value = _family_formula(args)
        else:
            value = family_count(tree)
            if value is None:
                raise ValueError(
                    "--method formula needs a recognized family "
                    "(star, caterpillar, or complete d-ary)"
                )
    elif method == "enumerate":
        value = len(induced_set(tree))
    else:
        value = len(brute_force_set(tree))

    if args.family and method in ("enumerate", "brute"):
        expected = _family_formula(args)
        checks.append(check(f"{method}_matches_formula", value == expected, expected, value))

    lines = [str(value)]
    for c in checks:
        verdict = "agree" if c["pass"] else "DISAGREE"
        lines.append(f"{c['name'].replace('_', ' ')}: {verdict} ({c['actual']} vs {c['expected']})")
    report = {
        "command": "count",
        "inputs": {
            "newick": args.newick,
            "family": args.family,
            "d": args.d,
            "n": args.n,
            "h": args.h,
            "method": args.method,
        },
        "results": {"count": value, "method": method},
        "checks": checks,
    }
    return emit(args, report, lines)


def cmd_enumerate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    tree = _load_tree(args.newick)
    classes = induced_set(tree)
    ordered = sorted(classes, key=lambda c: (c.leaf_count, c.code))
    rows = []
    for code in ordered:
        row: dict[str, Any] = {
            "leaf_count": code.leaf_count,
            "height": code.height,
            "code": code.code,
        }
        if args.emit_newick:
            row["newick"] = to_newick(tree_from_code(code), canonical=True)
        rows.append(row)
    lines = [row["newick"] if args.emit_newick else row["code"] for row in rows]
    report = {
        "command": "enumerate",
        "inputs": {"newick": args.newick, "emit_newick": bool(args.emit_newick)},
        "results": {
            "host_leaf_count": tree.leaf_count(),
            "count": len(classes),
            "classes": rows,
        },
        "checks": [],
    }
    return emit(args, report, lines)


def cmd_kappa(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    kr = kappa(args.d, args.digits)
    kappa_str = format_digits(kr.kappa, args.digits)
    k_str = format_digits(kr.K, args.digits)
    tail_str = format_digits(kr.tail_bound, 3)
    lines = [
        f"kappa({args.d}) = {kappa_str}",
        f"K({args.d}) = {k_str}",
        f"terms used = {kr.terms_used}",
        f"tail bound <= {tail_str}",
    ]
    report = {
        "command": "kappa",
        "inputs": {"d": args.d, "digits": args.digits},
        "results": {
            "kappa": kappa_str,
            "K": k_str,
            "terms_used": kr.terms_used,
            "tail_bound": tail_str,
        },
        "checks": [],
    }
    return emit(args, report, lines)


def cmd_table(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.kappa:
        if args.d_max is None:
            parser.error("table --kappa requires --d-max")
        rows = [
            {"d": d, "kappa": format_digits(kappa(d, args.digits).kappa, args.digits)}
            for d in range(2, args.d_max + 1)
        ]
        width = max(len(r["kappa"]) for r in rows)
        lines = [f"{'d':>2}  {'kappa(d)':<{width}}"]
        lines += [f"{r['d']:>2}  {r['kappa']:<{width}}" for r in rows]
        inputs = {"kind": "kappa", "d_max": args.d_max, "digits": args.digits}
        results = {"rows": rows}
    else:
        if args.d is None or args.h_max is None:
            parser.error("table --complete requires --d and --h-max")
        seq = complete_dary_sequence(args.d, args.h_max)
        rows = [{"h": h, "count": seq[h]} for h in range(args.h_max + 1)]
        width = max(len(str(seq[-1])), len("count"))
        lines = [f"{'h':>3}  {'count':<{width}}"]
        lines += [f"{r['h']:>3}  {r['count']:<{width}}" for r in rows]
        inputs = {"kind": "complete", "d": args.d, "h_max": args.h_max}
        results = {"rows": rows}
    report = {"command": "table", "inputs": inputs, "results": results, "checks": []}
    return emit(args, report, lines)


def cmd_floor(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    floor_value = floor_formula(args.d, args.h)
    exact = complete_dary_count(args.d, args.h)
    match = floor_value == exact
    lines = [
        f"floor expression = {floor_value}",
        f"exact recursion  = {exact}",
        f"match = {'yes' if match else 'no'}",
    ]
    report = {
        "command": "floor",
        "inputs": {"d": args.d, "h": args.h},
        "results": {"floor_value": floor_value, "exact_value": exact, "match": match},
        "checks": [],
    }
    return emit(args, report, lines)


def _verify_theorem1(args: argparse.Namespace) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    expected_sizes = series_reduced_leaf_counts(args.n_max)
    checks = []
    rows = []
    for n in range(5, args.n_max + 1):
        rep = verify_minimum(n)
        rows.append(
            {
                "n": n,
                "corpus_size": rep.corpus_size,
                "min_count": rep.min_count,
                "minimizers": [c.code for c in rep.minimizers],
                "histogram": [list(pair) for pair in rep.histogram],
            }
        )
        checks.append(
            check(
                f"corpus_size_matches_recurrence(n={n})",
                rep.corpus_size == expected_sizes[n],
                expected_sizes[n],
                rep.corpus_size,
            )
        )
        checks.append(check(f"minimum_count_is_n(n={n})", rep.min_count == n, n, rep.min_count))
        checks.append(
            check(
                f"minimizers_are_star_and_binary_caterpillar(n={n})",
                set(rep.minimizers) == set(rep.expected_minimizers),
                sorted(c.code for c in rep.expected_minimizers),
                sorted(c.code for c in rep.minimizers),
            )
        )
    return {"rows": rows}, checks


def _verify_prop7(args: argparse.Namespace) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    rows = []
    checks = []
    for bound in kappa_bounds(args.d_max):
        rows.append(
            {
                "d": bound.d,
                "kappa": format_digits(bound.kappa, 30),
                "upper_bound": format_digits(bound.upper_bound, 30),
                "margin": format_digits(bound.margin, 3),
            }
        )
        checks.append(
            check(
                f"1 < kappa({bound.d}) <= {bound.d}^(1/{bound.d - 1})",
                bound.ok,
                f"<= {format_digits(bound.upper_bound, 8)}",
                format_digits(bound.kappa, 8),
            )
        )
    return {"rows": rows}, checks


def _verify_prop8(args: argparse.Namespace) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    rows = floor_match_table(args.d, args.h_max)
    threshold = None
    for row in reversed(rows):
        if not row.match:
            break
        threshold = row.h
    results = {
        "threshold": threshold,
        "rows": [
            {
                "h": r.h,
                "floor_value": r.floor_value,
                "exact_value": r.exact_value,
                "match": r.match,
            }
            for r in rows
        ],
    }
    checks = [
        check(
            f"floor_threshold_exists(d={args.d}, h_max={args.h_max})",
            threshold is not None,
            "some H <= h_max with exact floors from H on",
            f"H = {threshold}" if threshold is not None else "none",
        )
    ]
    return results, checks


def _verify_lemma1(args: argparse.Namespace) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    rec = complete_dary_recurrence(args.d)
    seq = rec.iterate(args.n)
    tol = mpf(10) ** (-IDENTITY_TOLERANCE_DIGITS)
    rows = []
    checks = []
    with mp.workdps(60):
        for m in range(1, args.n + 1):
            closed = log_closed_form(rec, m, digits=40)
            direct = mp.log(mpf(seq[m].numerator)) - mp.log(mpf(seq[m].denominator))
            err = abs(closed - direct)
            rows.append({"n": m, "abs_error": format_digits(err, 3)})
            checks.append(
                check(
                    f"log_identity(d={args.d}, n={m})",
                    err < tol,
                    f"< 1e-{IDENTITY_TOLERANCE_DIGITS}",
                    format_digits(err, 3),
                )
            )
    return {"rows": rows}, checks


def _verify_oracle(args: argparse.Namespace) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    rows = []
    checks = []
    for n in range(1, args.n_max + 1):
        corpus = generate_topological(n)
        mismatches = sum(
            1 for t in corpus if induced_set(t).codes != brute_force_set(t).codes
        )
        rows.append({"n": n, "classes": len(corpus), "mismatches": mismatches})
        checks.append(
            check(
                f"enumeration_matches_subset_sweep(n={n})",
                mismatches == 0,
                "0 mismatches",
                f"{mismatches} of {len(corpus)}",
            )
        )
    return {"rows": rows}, checks


def cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.theorem1:
        if args.n_max is None:
            parser.error("verify --theorem1 requires --n-max")
        if args.n_max < 5:
            parser.error("verify --theorem1 needs --n-max >= 5")
        suite = "theorem1"
        results, checks = _verify_theorem1(args)
    elif args.prop7:
        if args.d_max is None:
            parser.error("verify --prop7 requires --d-max")
        suite = "prop7"
        results, checks = _verify_prop7(args)
    elif args.prop8:
        if args.d is None or args.h_max is None:
            parser.error("verify --prop8 requires --d and --h-max")
        suite = "prop8"
        results, checks = _verify_prop8(args)
    elif args.lemma1:
        if args.d is None or args.n is None:
            parser.error("verify --lemma1 requires --d and --n")
        suite = "lemma1"
        results, checks = _verify_lemma1(args)
    else:
        if args.n_max is None:
            parser.error("verify --oracle requires --n-max")
        suite = "oracle"
        results, checks = _verify_oracle(args)

    lines = []
    for c in checks:
        status = "PASS" if c["pass"] else "FAIL"
        lines.append(f"{status}  {c['name']}: expected {c['expected']}, got {c['actual']}")
    failed = sum(1 for c in checks if not c["pass"])
    lines.append(
        f"{suite}: {len(checks) - failed}/{len(checks)} checks passed"
        + ("" if failed == 0 else f" ({failed} FAILED)")
    )
    report = {
        "command": "verify",
        "inputs": {
            "suite": suite,
            "n_max": args.n_max,
            "d_max": args.d_max,
            "d": args.d,
            "h_max": args.h_max,
            "n": args.n,
        },
        "results": results,
        "checks": checks,
    }
    return emit(args, report, lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leafsubtrees",
        description="Count, enumerate, and analyze nonisomorphic leaf-induced "
        "subtrees of rooted trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count induced-subtree classes of a tree")
    src = p_count.add_mutually_exclusive_group(required=True)
    src.add_argument("--newick", metavar="FILE", help="host tree in Newick format")
    src.add_argument(
        "--family",
        choices=["star", "bincat", "cat", "complete"],
        help="named family instead of a file",
    )
    p_count.add_argument("--d", type=int, help="family arity")
    p_count.add_argument("--n", type=int, help="family leaf count")
    p_count.add_argument("--h", type=int, help="family height")
    p_count.add_argument(
        "--method",
        choices=["auto", "enumerate", "brute", "formula"],
        default="auto",
        help="how to compute the count (default: auto)",
    )
    p_count.add_argument("--threads", type=_positive, default=1, help="worker cap")
    p_count.add_argument("--json", action="store_true")
    p_count.set_defaults(func=cmd_count)

    p_enum = sub.add_parser("enumerate", help="list all induced-subtree classes")
    p_enum.add_argument("--newick", metavar="FILE", required=True)
    p_enum.add_argument(
        "--emit-newick",
        action="store_true",
        help="print canonical Newick instead of canonical codes",
    )
    p_enum.add_argument("--threads", type=_positive, default=1, help="worker cap")
    p_enum.add_argument("--json", action="store_true")
    p_enum.set_defaults(func=cmd_enumerate)

    p_kappa = sub.add_parser(
        "kappa", help="growth constant of the complete d-ary count recursion"
    )
    p_kappa.add_argument("--d", type=int, required=True)
    p_kappa.add_argument("--digits", type=_positive, default=16)
    p_kappa.add_argument("--json", action="store_true")
    p_kappa.set_defaults(func=cmd_kappa)

    p_table = sub.add_parser("table", help="tabulate kappa(d) or complete d-ary counts")
    kind = p_table.add_mutually_exclusive_group(required=True)
    kind.add_argument("--kappa", action="store_true", help="kappa(d) for d = 2..d-max")
    kind.add_argument(
        "--complete", action="store_true", help="counts for heights 0..h-max"
    )
    p_table.add_argument("--d-max", type=int)
    p_table.add_argument("--d", type=int)
    p_table.add_argument("--h-max", type=int)
    p_table.add_argument("--digits", type=_positive, default=16)
    p_table.add_argument("--json", action="store_true")
    p_table.set_defaults(func=cmd_table)

    p_floor = sub.add_parser(
        "floor", help="floor expression vs exact recursion for one height"
    )
    p_floor.add_argument("--d", type=int, required=True)
    p_floor.add_argument("--h", type=int, required=True)
    p_floor.add_argument("--json", action="store_true")
    p_floor.set_defaults(func=cmd_floor)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    suite = p_verify.add_mutually_exclusive_group(required=True)
    suite.add_argument(
        "--theorem1",
        action="store_true",
        help="minimum induced-class count and its extremal families, n = 5..n-max",
    )
    suite.add_argument(
        "--prop7",
        action="store_true",
        help="1 < kappa(d) <= d^(1/(d-1)) for d = 2..d-max",
    )
    suite.add_argument(
        "--prop8",
        action="store_true",
        help="floor expression vs exact recursion for h = 0..h-max",
    )
    suite.add_argument(
        "--lemma1",
        action="store_true",
        help="closed log expression vs directly iterated sequence",
    )
    suite.add_argument(
        "--oracle",
        action="store_true",
        help="bottom-up enumeration vs subset sweep on all trees with <= n-max leaves",
    )
    p_verify.add_argument("--n-max", type=int)
    p_verify.add_argument("--d-max", type=int)
    p_verify.add_argument("--d", type=int)
    p_verify.add_argument("--h-max", type=int)
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--threads", type=_positive, default=1, help="worker cap")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except NewickError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ResourceLimitError, PrecisionExhaustedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
