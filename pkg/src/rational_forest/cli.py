"""Command-line interface: thin adapters over the library, no math here.

Exit status: 0 on success, 2 on malformed input, 1 when --verify finds the
closed forms disagreeing with the brute-force oracle (which would mean a
bug, and should be loud).  Indices are serialized as decimal strings
because they outgrow 64-bit integers at moderate levels.
"""

import argparse
import json
import sys

from . import apps, bitpath, locate, trees
from .rational import Rational, parse_rational
from .trees import Tree

VERIFY_MAX_LEVEL = 18


class VerificationError(Exception):
    """Closed form and brute-force oracle disagree."""


def _emit(args, payload: dict, plain: str) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(plain)


def _oracle_vertex(tree: Tree, level: int, index: int) -> Rational:
    return trees.level(tree, level)[index - 1]


def _cmd_locate(args) -> int:
    q = parse_rational(args.fraction)
    tree = Tree.from_string(args.tree)
    result = locate.locate_vertex(tree, q)
    lvl, idx = result.address.level, result.address.index
    if args.verify and lvl <= VERIFY_MAX_LEVEL:
        if _oracle_vertex(tree, lvl, idx) != q:
            raise VerificationError(f"{q} is not vertex {idx} of {tree.value} level {lvl}")
        if result.path and trees.locate_by_walk(tree, q) != result.path:
            raise VerificationError(f"parent walk disagrees with closed form for {q}")
    payload = {"tree": tree.value, "level": lvl, "index": str(idx), "path": result.path}
    _emit(args, payload, f"level {lvl} index {idx} path {result.path or '(empty)'}")
    return 0


def _cmd_value(args) -> int:
    tree = Tree.from_string(args.tree)
    q = trees.value_at(tree, args.path)
    _emit(args, {"tree": tree.value, "path": args.path, "value": str(q)}, str(q))
    return 0


def _cmd_map(args) -> int:
    if args.mapping in ("sb-sc", "sc-sb"):
        if len(args.args) != 1:
            raise ValueError(f"map {args.mapping} takes exactly one path argument")
        src = args.args[0]
        if args.mapping == "sb-sc":
            out = locate.sb_to_sc(src)
            payload = {"sb": src, "sc": out}
        else:
            out = locate.sc_to_sb(src)
            payload = {"sc": src, "sb": out}
        if args.verify and len(src) + 1 <= VERIFY_MAX_LEVEL:
            sb, sc = (src, out) if args.mapping == "sb-sc" else (out, src)
            if trees.value_at(Tree.SB, sb) != trees.value_at(Tree.SC, sc):
                raise VerificationError(f"paths {sb} and {sc} address different vertices")
        _emit(args, payload, " -> ".join(f"{k}:{v}" for k, v in payload.items()))
        return 0
    if args.mapping == "s-cw":
        if len(args.args) != 2:
            raise ValueError("map s-cw takes <level> <index>")
        lvl, ns = int(args.args[0]), int(args.args[1])
        nc = locate.s_to_cw_index(lvl, ns)
        s_path = bitpath.address_to_path(bitpath.NodeAddress(Tree.S, lvl, ns))
        cw_path = locate.s_path_to_cw_path(s_path)
        if args.verify and lvl <= VERIFY_MAX_LEVEL:
            if _oracle_vertex(Tree.S, lvl, ns) != _oracle_vertex(Tree.CW, lvl, nc):
                raise VerificationError(f"s ({lvl},{ns}) and cw ({lvl},{nc}) differ")
        payload = {
            "s": {"level": lvl, "index": str(ns), "path": s_path},
            "cw": {"level": lvl, "index": str(nc), "path": cw_path},
        }
        _emit(args, payload, f"s ({lvl},{ns}) -> cw ({lvl},{nc})")
        return 0
    raise ValueError(f"unknown mapping {args.mapping!r}, expected sb-sc, sc-sb or s-cw")


def _cmd_enumerate(args) -> int:
    if args.count < 0:
        raise ValueError("--count must be >= 0")
    tree = Tree.from_string(args.tree)
    items = []
    for idx, q in trees.bfs_iter(tree):
        if idx > args.count:
            break
        items.append({"index": str(idx), "value": str(q)})
    _emit(args, {"tree": tree.value, "vertices": items},
          "\n".join(f"{it['index']} {it['value']}" for it in items))
    return 0


def _cmd_level(args) -> int:
    tree = Tree.from_string(args.tree)
    values = [str(q) for q in trees.level(tree, args.m)]
    _emit(args, values, " ".join(values))
    return 0


def _cmd_fib(args) -> int:
    print(apps.fibonacci(args.n))
    return 0


def _cmd_buttons(args) -> int:
    q = parse_rational(args.fraction)
    seq = apps.buttons_for(q)
    outcome = apps.simulate_buttons(seq)
    if outcome != q:
        raise VerificationError(f"simulated sequence for {q} ended at {outcome}")
    payload = {"keys": [k.value for k in seq], "verified": True, "value": str(q)}
    plain = " ".join(k.value for k in seq) + f"\n= {q} (float replay {apps.replay_float(seq):.12g})"
    _emit(args, payload, plain)
    return 0


def _cmd_render(args) -> int:
    tree = Tree.from_string(args.tree)
    if args.format not in (None, "dot"):
        raise ValueError("render only emits dot")
    print(trees.render_dot(tree, args.depth), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rational-forest",
        description="Exact enumeration and location of rationals on four binary trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, default="json", choices=("json", "plain")):
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("locate", help="closed-form level/index/path of a fraction")
    p.add_argument("tree", help="s, sc, sb or cw")
    p.add_argument("fraction", help='fraction as "n/d"')
    p.add_argument("--verify", action="store_true",
                   help="recompute via brute-force generation (levels <= 18)")
    add_format(p)
    p.set_defaults(func=_cmd_locate)

    p = sub.add_parser("value", help="vertex at a 0/1 path")
    p.add_argument("tree")
    p.add_argument("path", help="string of 0s and 1s (may be empty: '')")
    add_format(p, default="plain")
    p.set_defaults(func=_cmd_value)

    p = sub.add_parser("map", help="cross-tree position transforms")
    p.add_argument("mapping", help="sb-sc <path> | sc-sb <path> | s-cw <level> <index>")
    p.add_argument("args", nargs="*")
    p.add_argument("--verify", action="store_true")
    add_format(p)
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("enumerate", help="first K vertices in BFS order")
    p.add_argument("tree")
    p.add_argument("--count", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("level", help="contents of one level, left to right")
    p.add_argument("tree")
    p.add_argument("m", type=int)
    add_format(p)
    p.set_defaults(func=_cmd_level)

    p = sub.add_parser("fib", help="Fibonacci number via the all-ones continued fraction")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_fib)

    p = sub.add_parser("buttons", help="broken-calculator key sequence producing n/d")
    p.add_argument("fraction")
    add_format(p)
    p.set_defaults(func=_cmd_buttons)

    p = sub.add_parser("render", help="Graphviz DOT of levels 0..depth (depth <= 8)")
    p.add_argument("tree")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--format", choices=("dot",), default="dot")
    p.set_defaults(func=_cmd_render)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
