"""Command-line entry point.

Exit codes: 0 success, 1 failed check or limit violation, 2 usage error.
Data lines are deterministic; timing goes on separate lines starting with ``#``.
"""

from __future__ import annotations

import argparse
import sys

from foldcube import oracle
from foldcube.autgroup import group_order
from foldcube.checks import CHECKS, run_check
from foldcube.topology import CayleyGraph, format_dot, format_edgelist
from foldcube.witness import NotAnEdge, arc_witness
from foldcube.z2core import LimitExceeded, Z2Vector


class UsageError(Exception):
    pass


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _arc(text: str, n: int) -> tuple[Z2Vector, Z2Vector]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"arc must be U,V: {text!r}")
    try:
        return Z2Vector.parse(parts[0], n), Z2Vector.parse(parts[1], n)
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_graph(args) -> int:
    g = CayleyGraph(args.n, args.mode == "folded")
    text = format_edgelist(g) if args.format == "edgelist" else format_dot(g)
    _emit(text, args.out)
    return 0


def cmd_order(args) -> int:
    folded = args.mode == "folded"
    formula = group_order(args.n, folded)
    line = f"formula={formula.value}"
    status = 0
    if args.brute:
        brute = len(oracle.brute_force_automorphisms(CayleyGraph(args.n, folded)))
        match = brute == formula.value
        line += f" brute={brute} match={'true' if match else 'false'}"
        status = 0 if match else 1
    lines = [line]
    if formula.regime != "formula":
        lines.append(f"regime={formula.regime}")
    _emit("\n".join(lines) + "\n", args.out)
    return status


def cmd_witness(args) -> int:
    g = CayleyGraph(args.n, args.mode == "folded")
    u1, v1 = _arc(args.from_arc, args.n)
    u2, v2 = _arc(args.to_arc, args.n)
    try:
        w = arc_witness(u1, v1, u2, v2, g)
    except NotAnEdge as e:
        raise UsageError(str(e)) from None
    _emit(w.format(), args.out)
    return 0 if w.verified else 1


def cmd_check(args) -> int:
    folded = args.mode == "folded"
    names = list(CHECKS) if args.which == "all" else [args.which]
    lines = []
    ok = True
    for name in names:
        sizes = [args.n] if args.n is not None else CHECKS[name][2]
        if args.n is None:
            lines.append(f"{name}: sizes={','.join(map(str, sizes))}")
        for n in sizes:
            out = run_check(name, n, folded)
            ok &= out.passed
            lines.extend(out.lines())
    lines.append(f"overall={'pass' if ok else 'FAIL'}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=["folded", "hypercube"], default="folded")
    common.add_argument("--out", default=None, help="output path (default stdout)")

    p = argparse.ArgumentParser(prog="foldcube", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("graph", parents=[common], help="export the graph")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--format", choices=["edgelist", "dot"], default="edgelist")
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("order", parents=[common], help="automorphism group order")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--brute", action="store_true", help="cross-check by brute force (n <= 5)")
    sp.set_defaults(func=cmd_order)

    sp = sub.add_parser("witness", parents=[common], help="arc-transitivity witness")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--from", dest="from_arc", required=True, metavar="U,V")
    sp.add_argument("--to", dest="to_arc", required=True, metavar="U,V")
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("check", parents=[common], help="run verification suites")
    sp.add_argument("--n", type=int, default=None,
                    help="dimension (default: each check's standard sizes)")
    sp.add_argument("which", nargs="?", default="all", choices=[*CHECKS, "all"])
    sp.set_defaults(func=cmd_check)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 2:
        parser.error(f"--n must be at least 2, got {args.n}")
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except LimitExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
