"""Generative definitions of the four rational-enumeration trees.

Tree kinds:

* ``s``  -- vertices in (0,1]; m/n has children m/(m+n) and n/(m+n).
           1/1 sits alone at level 0 and has the single child 1/2.
* ``sc`` -- all positive rationals; grown by mediants from the anchors 1/0
           and 0/1 at level 0, with 1/1 the single level-1 root.
* ``sb`` -- Stern-Brocot: each vertex is the mediant of its two enclosing
           bounds, root 1/1 between 0/1 and 1/0.
* ``cw`` -- Calkin-Wilf: a/b has children a/(a+b) and (a+b)/b, root 1/1.

Everything here is the brute-force side of the library: levels and BFS
streams are produced by literally applying the growth rules, and the
parent walks invert them one step at a time.  The closed-form locators in
:mod:`rational_forest.locate` are tested against these.

All functions are pure over immutable values and safe to use from multiple
threads.
"""

import enum
import os
from typing import Iterator, NamedTuple

from .contfrac import cf_expand
from .rational import ONE, ONE_OVER_ZERO, Rational, ZERO_OVER_ONE

DEFAULT_DEPTH_CAP = 24
DEPTH_CAP_ENV = "RATIONAL_FOREST_DEPTH_CAP"


class Tree(enum.Enum):
    S = "s"
    SC = "sc"
    SB = "sb"
    CW = "cw"

    @classmethod
    def from_string(cls, text: str) -> "Tree":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown tree kind {text!r}, expected s|sc|sb|cw") from None


class ScNode(NamedTuple):
    """SC vertex with the two values its children are mediants with.

    The left child is value (+) left_inc and inherits left_inc; the right
    child is value (+) parent and uses value's parent as its own increment.
    """

    value: Rational
    parent: Rational
    left_inc: Rational


class SbNode(NamedTuple):
    """Stern-Brocot vertex with its enclosing bounds: value = low (+) high."""

    low: Rational
    value: Rational
    high: Rational


SC_ROOT = ScNode(ONE, ZERO_OVER_ONE, ONE_OVER_ZERO)
SB_ROOT = SbNode(ZERO_OVER_ONE, ONE, ONE_OVER_ZERO)


def depth_cap() -> int:
    """Generation depth limit; override with RATIONAL_FOREST_DEPTH_CAP."""
    raw = os.environ.get(DEPTH_CAP_ENV)
    if raw is None:
        return DEFAULT_DEPTH_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"{DEPTH_CAP_ENV} must be positive, got {cap}")
    return cap


def _med(a: Rational, b: Rational) -> Rational:
    # Raw componentwise sum.  The growth theorems guarantee tree mediants
    # are reduced; the test suite verifies that instead of re-reducing here.
    return Rational(a.num + b.num, a.den + b.den)


def children(tree: Tree, node):
    """(left, right) child states of a vertex state.

    States are plain Rationals for the s and cw trees, ScNode for sc,
    SbNode for sb.  The single-child s root 1/1 is rejected because it has
    no right child.
    """
    if tree is Tree.S:
        m, n = node
        if m == n:
            raise ValueError("1/1 has only the single child 1/2")
        return Rational(m, m + n), Rational(n, m + n)
    if tree is Tree.CW:
        a, b = node
        return Rational(a, a + b), Rational(a + b, b)
    if tree is Tree.SC:
        v, p, li = node
        return ScNode(_med(v, li), v, li), ScNode(_med(v, p), v, p)
    lo, v, hi = node
    return SbNode(lo, _med(lo, v), v), SbNode(v, _med(v, hi), hi)


def node_value(tree: Tree, node) -> Rational:
    if tree is Tree.SC:
        return node.value
    if tree is Tree.SB:
        return node.value
    return node


def _expand(tree: Tree, states: list) -> list:
    out = []
    for st in states:
        out.extend(children(tree, st))
    return out


def iter_level_states(tree: Tree) -> Iterator[tuple[int, list]]:
    """Yield (level, state list) from the first path-bearing vertex down.

    Starts at level 1 for s/sc/sb (vertices 1/2 and 1/1) and level 0 for
    cw.  Pseudo anchors never appear, matching what paths can address.
    """
    if tree is Tree.S:
        level, states = 1, [Rational(1, 2)]
    elif tree is Tree.SC:
        level, states = 1, [SC_ROOT]
    elif tree is Tree.SB:
        level, states = 1, [SB_ROOT]
    else:
        level, states = 0, [ONE]
    while True:
        yield level, states
        states = _expand(tree, states)
        level += 1


def level(tree: Tree, m: int) -> list[Rational]:
    """Left-to-right contents of level m, by brute-force expansion."""
    if m < 0:
        raise ValueError("level must be >= 0")
    cap = depth_cap()
    if m > cap:
        raise ValueError(f"level {m} exceeds depth cap {cap}")
    if m == 0:
        if tree is Tree.S:
            return [ONE]
        if tree is Tree.SC:
            return [ONE_OVER_ZERO, ZERO_OVER_ONE]
        if tree is Tree.SB:
            return [ZERO_OVER_ONE, ONE_OVER_ZERO]
        return [ONE]
    for lvl, states in iter_level_states(tree):
        if lvl == m:
            return [node_value(tree, st) for st in states]


def bfs_iter(tree: Tree) -> Iterator[tuple[int, Rational]]:
    """Unbounded stream of (global BFS index, value), pseudo anchors excluded.

    Indices start at 1 with the tree's topmost enumerable vertex; the
    caller bounds consumption.
    """
    idx = 1
    if tree is Tree.S:
        yield idx, ONE
        idx += 1
    for _, states in iter_level_states(tree):
        for st in states:
            yield idx, node_value(tree, st)
            idx += 1


def value_at(tree: Tree, path: str) -> Rational:
    """Vertex reached by following 0=left / 1=right moves from the path origin.

    The origin (empty path) is 1/2 for the s tree, 1/1 for the others.
    """
    _check_path(path)
    cap = depth_cap()
    if len(path) > cap:
        raise ValueError(f"path length {len(path)} exceeds depth cap {cap}")
    if tree is Tree.S:
        node = Rational(1, 2)
    elif tree is Tree.SC:
        node = SC_ROOT
    elif tree is Tree.SB:
        node = SB_ROOT
    else:
        node = ONE
    for bit in path:
        node = children(tree, node)[int(bit)]
    return node_value(tree, node)


def _check_path(path: str) -> None:
    if any(c not in "01" for c in path):
        raise ValueError(f"malformed path {path!r}, expected a 0/1 string")


def _check_locatable(tree: Tree, q: Rational) -> None:
    if q.is_pseudo:
        raise ValueError(f"{q} is not an enumerable vertex")
    if tree is Tree.S and q.num > q.den:
        raise ValueError(f"{q} is outside (0,1], the s-tree domain")


def locate_by_walk(tree: Tree, q: Rational) -> str:
    """Path of q found by walking parent steps up to the path origin.

    Numerator+denominator shrinks strictly on every parent step, so the
    walk terminates.  The s-tree tops 1/1 and 1/2 both map to the empty
    path (1/2 is the origin; 1/1 has no path at all).
    """
    _check_locatable(tree, q)
    if tree is Tree.S:
        return _walk_s(q)
    if tree is Tree.CW:
        return _walk_cw(q)
    if tree is Tree.SB:
        return _walk_sb(q)
    return _walk_sc(q)


def _walk_s(q: Rational) -> str:
    if q == ONE or q == Rational(1, 2):
        return ""
    bits = []
    m, n = q
    while (m, n) != (1, 2):
        if n - m > m:
            bits.append("0")  # left child of m/(n-m)
            n = n - m
        else:
            bits.append("1")  # right child of (n-m)/m
            m, n = n - m, m
    return "".join(reversed(bits))


def _walk_cw(q: Rational) -> str:
    bits = []
    a, b = q
    while (a, b) != (1, 1):
        if a < b:
            bits.append("0")
            b -= a
        else:
            bits.append("1")
            a -= b
    return "".join(reversed(bits))


def _walk_sb(q: Rational) -> str:
    lo, hi = ZERO_OVER_ONE, ONE_OVER_ZERO
    cur = ONE
    bits = []
    while cur != q:
        if q < cur:
            bits.append("0")
            hi = cur
        else:
            bits.append("1")
            lo = cur
        cur = _med(lo, hi)
    return "".join(bits)


def _walk_sc(q: Rational) -> str:
    if q == ONE:
        return ""
    if q.num > q.den:
        # vertices above 1 mirror their reciprocals under the first move
        return "0" + _walk_sc(q.reciprocal())[1:]
    terms = list(cf_expand(q))
    bits = []
    while terms != [0, 2]:
        if terms[-1] >= 3:
            bits.append("0")  # left child: last term was incremented
            terms[-1] -= 1
        else:
            bits.append("1")  # right child: trailing 2 was appended
            terms.pop()
            terms[-1] += 1
    bits.append("1")  # 1/2 is the right child of the root
    return "".join(reversed(bits))


def render_dot(tree: Tree, depth: int) -> str:
    """Graphviz DOT drawing of levels 0..depth (capped at 8 for legibility).

    Edges are emitted left child first and the graph is ordered, so the
    drawing preserves the left-to-right vertex order of each level.
    """
    if not 0 <= depth <= 8:
        raise ValueError("render depth must be between 0 and 8")
    lines = [
        f'digraph "{tree.value}-tree" {{',
        "  graph [ordering=out];",
        '  node [shape=plaintext, fontname="monospace"];',
    ]

    def node_id(q: Rational) -> str:
        return f'"{q}"'

    for q in level(tree, 0):
        lines.append(f"  {node_id(q)};")
    if depth >= 1:
        top = level(tree, 1)[0]
        if tree is Tree.S:
            lines.append(f"  {node_id(ONE)} -> {node_id(top)};")
        elif tree is Tree.SC:
            lines.append(f"  {node_id(ONE_OVER_ZERO)} -> {node_id(top)};")
            lines.append(f"  {node_id(ZERO_OVER_ONE)} -> {node_id(top)};")
        elif tree is Tree.SB:
            lines.append(f"  {node_id(ZERO_OVER_ONE)} -> {node_id(top)};")
            lines.append(f"  {node_id(ONE_OVER_ZERO)} -> {node_id(top)};")
        for lvl, states in iter_level_states(tree):
            if lvl >= depth:
                break
            for st in states:
                parent = node_value(tree, st)
                left, right = children(tree, st)
                lines.append(f"  {node_id(parent)} -> {node_id(node_value(tree, left))};")
                lines.append(f"  {node_id(parent)} -> {node_id(node_value(tree, right))};")
    lines.append("}")
    return "\n".join(lines) + "\n"
