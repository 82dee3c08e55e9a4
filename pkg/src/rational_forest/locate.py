"""Closed-form vertex location and the position transforms linking the trees.

The s and sc trees are located straight from the continued fraction of the
target: the term list dictates the 0/1 path, the level and the in-level
index without generating anything.  Two transforms then close the loop
between all four trees:

* sb <-> sc: same-length paths related bitwise by a first-digit flip plus
  an adjacent XOR, so either direction is a single pass.
* s -> cw: a vertex of s-level M reappears in cw-level M; its cw path is
  obtained by rewriting "1 0...0 1" segments to "1 1...1 0", prepending a
  digit, and complementing when the path has an odd number of 1s.

Everything returns exact big integers; level-70 indices do not fit machine
words and are handled like any other value.
"""

from typing import NamedTuple

from .bitpath import NodeAddress, path_to_address
from .contfrac import ContinuedFraction, cf_expand
from .rational import ONE, Rational
from .trees import Tree, locate_by_walk


class LocateResult(NamedTuple):
    address: NodeAddress
    path: str
    cf: ContinuedFraction


def s_locate(q: Rational) -> LocateResult:
    """Level, index and path of q in the s tree, for q strictly inside (0,1).

    With q = [0, a1, ..., ak]: the level is sum(ai) - 1, the path reads
    0^(ak-2) 1 0^(a_{k-1}-1) 1 ... 1 0^(a1-1), and the index is
    1 + sum over proper prefixes of 2^(sum(prefix)-1).
    """
    if q.is_pseudo or q.num >= q.den:
        raise ValueError(f"{q} is outside (0,1)")
    cf = cf_expand(q)
    a = cf[1:]
    lvl = sum(a) - 1
    index = 1 + sum(1 << (sum(a[:i]) - 1) for i in range(1, len(a)))
    path = "0" * (a[-1] - 2) + "".join("1" + "0" * (t - 1) for t in reversed(a[:-1]))
    return LocateResult(NodeAddress(Tree.S, lvl, index), path, cf)


def sc_path(q: Rational) -> LocateResult:
    """Level, index and path of q != 1 in the sc tree.

    For q = [0, a1, ..., ak] in (0,1) the path is
    1 0^(a1-1) 1 0^(a2-1) ... 1 0^(ak-2); a value above 1 takes the path of
    its reciprocal with the first move flipped to the left.
    """
    if q.is_pseudo or q == ONE:
        raise ValueError(f"{q} has no sc path (root and pseudo anchors are fixed)")
    cf = cf_expand(q)
    if q.num > q.den:
        path = "0" + sc_path(q.reciprocal()).path[1:]
    else:
        a = cf[1:]
        path = "".join("1" + "0" * (t - 1) for t in a[:-1]) + "1" + "0" * (a[-1] - 2)
    return LocateResult(path_to_address(path, Tree.SC), path, cf)


def _check_bits(path: str) -> None:
    if any(c not in "01" for c in path):
        raise ValueError(f"malformed path {path!r}, expected a 0/1 string")


def _complement(path: str) -> str:
    return "".join("1" if c == "0" else "0" for c in path)


def sb_to_sc(e: str) -> str:
    """sc path of the vertex whose sb path is e (same vertex, same level)."""
    _check_bits(e)
    if not e:
        raise ValueError("the empty path has no counterpart (roots coincide)")
    out = ["1" if e[0] == "0" else "0"]
    for i in range(1, len(e)):
        out.append("1" if e[i] != e[i - 1] else "0")
    return "".join(out)


def sc_to_sb(f: str) -> str:
    """Inverse of sb_to_sc: prefix-decode the adjacent XOR."""
    _check_bits(f)
    if not f:
        raise ValueError("the empty path has no counterpart (roots coincide)")
    out = ["1" if f[0] == "0" else "0"]
    for i in range(1, len(f)):
        out.append("1" if f[i] != out[i - 1] else "0")
    return "".join(out)


def s_to_cw_index(m: int, ns: int) -> int:
    """cw in-level index of the vertex at s address (level m, index ns).

    Write ns - 1 = 2^r1 + ... + 2^rk with r1 > ... > rk.  Paired exponents
    telescope; an unpaired leading exponent folds against 2^m instead.
    """
    if m < 1:
        raise ValueError("level must be >= 1")
    if not 1 <= ns <= 1 << (m - 1):
        raise ValueError(f"index {ns} out of range for level {m}")
    r = [i for i in range(m) if (ns - 1) >> i & 1]
    r.reverse()
    k = len(r)
    if k % 2 == 0:
        return 1 + sum((1 << (r[2 * j] + 1)) - (1 << (r[2 * j + 1] + 1)) for j in range(k // 2))
    return (
        1
        + (1 << m)
        - (1 << (r[0] + 1))
        + sum((1 << (r[2 * j + 1] + 1)) - (1 << (r[2 * j + 2] + 1)) for j in range((k - 1) // 2))
    )


def s_path_to_cw_path(x: str) -> str:
    """cw path of the vertex whose s path is x; one digit longer than x.

    Each "1 0...0 1" segment of x becomes "1 1...1 0" (an unpaired final 1
    opens a run to the end), a digit is prepended, and the whole string is
    complemented when x has an odd number of 1s.
    """
    _check_bits(x)
    out = []
    open_run = False
    for b in x:
        if open_run:
            out.append("1" if b == "0" else "0")
            if b == "1":
                open_run = False
        else:
            out.append(b)
            if b == "1":
                open_run = True
    y = "0" + "".join(out)
    if x.count("1") % 2 == 1:
        y = _complement(y)
    return y


def sb_path(q: Rational) -> str:
    """sb path of q by mediant bisection (brute-force counterpart)."""
    return locate_by_walk(Tree.SB, q)


def cw_path(q: Rational) -> str:
    """cw path of q by the subtraction parent walk (brute-force counterpart)."""
    return locate_by_walk(Tree.CW, q)


def sb_locate(q: Rational) -> LocateResult:
    """Closed-form sb location: the sc path pulled back through sc_to_sb."""
    if q.is_pseudo:
        raise ValueError(f"{q} is not an enumerable vertex")
    if q == ONE:
        return LocateResult(NodeAddress(Tree.SB, 1, 1), "", cf_expand(q))
    sc = sc_path(q)
    path = sc_to_sb(sc.path)
    return LocateResult(path_to_address(path, Tree.SB), path, sc.cf)


def cw_locate(q: Rational) -> LocateResult:
    """Closed-form cw location via the s-tree transform.

    Values in (0,1) go through s_locate and the path rewrite; values above
    1 take the complement of their reciprocal's path (the cw tree is
    mirror-symmetric); 1/1 is the root.
    """
    if q.is_pseudo:
        raise ValueError(f"{q} is not an enumerable vertex")
    cf = cf_expand(q)
    if q == ONE:
        return LocateResult(NodeAddress(Tree.CW, 0, 1), "", cf)
    if q.num > q.den:
        path = _complement(cw_locate(q.reciprocal()).path)
    else:
        path = s_path_to_cw_path(s_locate(q).path)
    return LocateResult(path_to_address(path, Tree.CW), path, cf)


def closed_form_path(tree: Tree, q: Rational) -> str:
    """Dispatch to the closed-form locator of the given tree."""
    if tree is Tree.S:
        if q == ONE:
            return ""
        return s_locate(q).path
    if tree is Tree.SC:
        return "" if q == ONE else sc_path(q).path
    if tree is Tree.SB:
        return sb_locate(q).path
    return cw_locate(q).path


def locate_vertex(tree: Tree, q: Rational) -> LocateResult:
    """LocateResult for any tree, using the closed forms throughout."""
    if tree is Tree.S:
        if q == ONE:
            return LocateResult(NodeAddress(Tree.S, 0, 1), "", cf_expand(q))
        return s_locate(q)
    if tree is Tree.SC:
        if q == ONE:
            return LocateResult(NodeAddress(Tree.SC, 1, 1), "", cf_expand(q))
        return sc_path(q)
    if tree is Tree.SB:
        return sb_locate(q)
    return cw_locate(q)


def run_decomposition(bits: str) -> list[tuple[int, int]]:
    """Maximal runs of 1s in a 0/1 string as (low bit position, run length).

    Ascending by position; the backbone of the arithmetic identity relating
    1E0 to 1F0 across the sb/sc transform.
    """
    _check_bits(bits)
    runs = []
    n = len(bits)
    i = 0
    while i < n:
        if bits[i] == "1":
            j = i
            while j < n and bits[j] == "1":
                j += 1
            runs.append((n - j, j - i))  # low bit position, ones count
            i = j
        else:
            i += 1
    runs.reverse()
    return runs
