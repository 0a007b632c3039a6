"""Command line interface.

Verbs:

* ``expand``   print the remainder polynomial of a type
* ``resolve``  resolve a type and print the fan summary
* ``verify``   run every cross-check on one type, exit nonzero on failure
* ``sweep``    resolve all types in a range, optionally writing CSV
* ``family``   resolve members of the two classical families
* ``export``   write JSON / SVG / DOT artifacts for a type

Exit codes: 0 success, 1 a check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys

from .fan import DEFAULT_SEED, GroupType, build_resolution, resolution_report
from .polynomial import expand
from .render import (
    fan_json_text,
    fan_to_svg,
    polynomial_json_text,
    subdivision_tree_dot,
)
from .verify import (
    compare_2d,
    family_type,
    measure_type,
    summarize,
    sweep,
    write_sweep_csv,
)


def _parse_weights(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"weights must be comma-separated integers, got {text!r}"
        )


def _add_type_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("-r", "--order", type=int, required=True, help="group order r")
    sub.add_argument(
        "-w",
        "--weights",
        type=_parse_weights,
        required=True,
        metavar="A1,A2,...",
        help="weights, comma separated, one of them 1",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fujiki-oka",
        description="Exact toric resolutions of cyclic quotient singularities.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("expand", help="print the remainder polynomial")
    _add_type_args(p)
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")

    p = subs.add_parser("resolve", help="resolve and summarise the fan")
    _add_type_args(p)
    p.add_argument("--max-depth", type=int, default=None, help="cap subdivision depth")

    p = subs.add_parser("verify", help="run all cross-checks on one type")
    _add_type_args(p)
    p.add_argument("--samples", type=int, default=1000, help="coverage sample count")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="sampling seed")

    p = subs.add_parser("sweep", help="resolve every type in a range")
    p.add_argument("--dim", type=int, required=True, help="number of weights")
    p.add_argument("--r-max", type=int, required=True, help="largest order")
    p.add_argument("--r-min", type=int, default=2, help="smallest order")
    p.add_argument("--gorenstein", action="store_true", help="weight sums divisible by r only")
    p.add_argument("--crepant-only", action="store_true", help="report crepant types only")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--csv", metavar="PATH", help="write records as CSV")
    p.add_argument("--allow-large", action="store_true", help="lift the size cap")

    p = subs.add_parser("family", help="resolve members of a classical family")
    p.add_argument("name", choices=("plus", "minus"), help="which family")
    p.add_argument("-k", type=int, default=None, help="single member index")
    p.add_argument("--k-max", type=int, default=None, help="members 1..k_max")

    p = subs.add_parser("export", help="write artifacts for a type")
    _add_type_args(p)
    p.add_argument("--json", metavar="PATH", help="fan JSON")
    p.add_argument("--poly", metavar="PATH", help="polynomial JSON")
    p.add_argument("--svg", metavar="PATH", help="triangle cross-section (3 weights)")
    p.add_argument("--dot", metavar="PATH", help="subdivision tree in DOT")

    return parser


def _group(args: argparse.Namespace) -> GroupType:
    return GroupType.from_weights(args.order, args.weights)


def _cmd_expand(args: argparse.Namespace) -> int:
    poly = expand(_group(args).fraction)
    if args.json:
        sys.stdout.write(polynomial_json_text(poly))
    else:
        print(poly.pretty())
    return 0


def _cmd_resolve(args: argparse.Namespace) -> int:
    group = _group(args)
    fan = build_resolution(group, max_depth=args.max_depth)
    smooth = all(c.is_smooth_type() for c in fan.max_cones)
    print(f"type {group}")
    print(f"maximal cones {fan.euler}")
    print(f"rays {len(fan.rays)}")
    print(f"smooth {'yes' if smooth else 'no'}")
    print(f"crepant {'yes' if fan.is_crepant() else 'no'}")
    for ray in fan.rays:
        tag = "exceptional" if ray.exceptional else "axis"
        coords = ",".join(str(v) for v in ray.scaled)
        print(f"  ray ({coords}) {tag} discrepancy {ray.discrepancy}")
    return 0


def _checkline(ok: bool, label: str) -> bool:
    print(f"[{'ok' if ok else 'FAIL'}] {label}")
    return ok


def _cmd_verify(args: argparse.Namespace) -> int:
    group = _group(args)
    report, fan, poly = resolution_report(group, samples=args.samples, seed=args.seed)
    print(f"type {group}")
    print(f"euler {report.euler}  size {report.size}  height {report.total_height}")
    ok = True
    r = group.r
    ok &= _checkline(report.size == report.total_height + r, "size = height + r")
    ok &= _checkline(report.euler == report.size, "euler = size")
    ok &= _checkline(report.euler == report.total_height + r, "euler = height + r")
    ok &= _checkline(
        report.crepant_by_ages == report.crepant_by_fan,
        f"crepancy criteria agree ({'crepant' if report.crepant else 'not crepant'})",
    )
    v = report.validation
    ok &= _checkline(v.multiplicity_ok, "multiplicities all 1")
    ok &= _checkline(v.rays_ok, "rays primitive in the lattice")
    ok &= _checkline(
        v.coverage_ok,
        f"coverage clean on {v.samples} samples "
        f"(uncovered {v.uncovered}, overlapping {v.overlapping}, gaps {v.boundary_gaps})",
    )
    ok &= _checkline(v.faces_ok, "cone pairs meet in common faces")
    if group.n == 2:
        a = group.weights[1] if group.weights[0] == 1 else group.weights[0]
        if 0 < a < r:
            cmp2 = compare_2d(r, a)
            ok &= _checkline(
                cmp2.ok,
                f"matches continued fraction {list(cmp2.expansion)} and hull",
            )
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def _cmd_sweep(args: argparse.Namespace) -> int:
    records = sweep(
        dim=args.dim,
        r_max=args.r_max,
        r_min=args.r_min,
        gorenstein_only=args.gorenstein,
        crepant_only=args.crepant_only,
        jobs=args.jobs,
        allow_large=args.allow_large,
    )
    if args.csv:
        write_sweep_csv(records, args.csv)
        print(f"wrote {len(records)} records to {args.csv}")
    stats = summarize(records)
    print(
        f"types {stats['types']}  crepant {stats['crepant']}  "
        f"gorenstein {stats['gorenstein']}"
    )
    if stats["all_ok"]:
        print("all identities hold")
        return 0
    print("FAILURES: " + ", ".join(stats["failures"]))
    return 1


def _cmd_family(args: argparse.Namespace) -> int:
    if (args.k is None) == (args.k_max is None):
        print("error: pass exactly one of -k or --k-max", file=sys.stderr)
        return 2
    ks = [args.k] if args.k is not None else list(range(1, args.k_max + 1))
    ok = True
    for k in ks:
        group = family_type(args.name, k)
        rec = measure_type(group)
        match = rec.euler == group.r and rec.ok
        ok &= match
        flag = "ok" if match else "FAIL"
        print(f"[{flag}] k={k} {group} euler {rec.euler}")
    return 0 if ok else 1


def _cmd_export(args: argparse.Namespace) -> int:
    if not (args.json or args.poly or args.svg or args.dot):
        print("error: nothing to export; pass --json/--poly/--svg/--dot", file=sys.stderr)
        return 2
    group = _group(args)
    fan = build_resolution(group)
    poly = expand(group.fraction)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(fan_json_text(fan, poly))
        print(f"wrote {args.json}")
    if args.poly:
        with open(args.poly, "w") as fh:
            fh.write(polynomial_json_text(poly))
        print(f"wrote {args.poly}")
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(fan_to_svg(fan))
        print(f"wrote {args.svg}")
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(subdivision_tree_dot(fan))
        print(f"wrote {args.dot}")
    return 0


_COMMANDS = {
    "expand": _cmd_expand,
    "resolve": _cmd_resolve,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "family": _cmd_family,
    "export": _cmd_export,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
