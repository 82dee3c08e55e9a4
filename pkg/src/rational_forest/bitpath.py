"""0/1 path strings and their (level, index) addresses.

A path records the left(0)/right(1) moves from a tree's path origin; its
binary value plus one is the vertex's 1-based rank within its level.  The
level carried by an address follows each tree's own numbering: for the
s/sc/sb trees the origin vertex sits at level 1, so level = path length + 1,
while the cw tree numbers its root level 0, so level = path length.  The
empty path is a valid address everywhere (1/2 for s, 1/1 otherwise).
"""

from typing import NamedTuple

from .trees import Tree


class NodeAddress(NamedTuple):
    tree: Tree
    level: int
    index: int


def _check_path(path: str) -> None:
    if any(c not in "01" for c in path):
        raise ValueError(f"malformed path {path!r}, expected a 0/1 string")


def path_value(path: str) -> int:
    """Binary value of the path; the empty path has value 0."""
    _check_path(path)
    return int(path, 2) if path else 0


def _path_width(tree: Tree, level: int) -> int:
    # number of path bits addressing a vertex of the given level
    if tree is Tree.CW:
        if level < 0:
            raise ValueError("cw levels start at 0")
        return level
    if level < 1:
        raise ValueError(f"{tree.value} paths address levels >= 1 only")
    return level - 1


def path_to_address(path: str, tree: Tree) -> NodeAddress:
    lvl = len(path) if tree is Tree.CW else len(path) + 1
    return NodeAddress(tree, lvl, path_value(path) + 1)


def address_to_path(addr: NodeAddress) -> str:
    """Inverse of path_to_address; rejects indices outside the level."""
    width = _path_width(addr.tree, addr.level)
    if not 1 <= addr.index <= 1 << width:
        raise ValueError(f"index {addr.index} out of range for level {addr.level}")
    if width == 0:
        return ""
    return format(addr.index - 1, f"0{width}b")


def global_index(addr: NodeAddress) -> int:
    """1-based BFS enumeration position of an address, top-down left-to-right.

    Pseudo anchors (sc/sb level 0) are excluded from the enumeration and
    rejected here.
    """
    tree, lvl, idx = addr
    if tree is Tree.CW:
        if lvl < 0 or not 1 <= idx <= 1 << lvl:
            raise ValueError(f"invalid address {addr}")
        return (1 << lvl) + idx - 1
    if tree is Tree.S:
        if lvl == 0:
            if idx != 1:
                raise ValueError(f"invalid address {addr}")
            return 1
        if not 1 <= idx <= 1 << (lvl - 1):
            raise ValueError(f"invalid address {addr}")
        # the root shifts everything by one relative to a plain binary heap
        return (1 << (lvl - 1)) + idx
    if lvl == 0:
        raise ValueError(f"level 0 of the {tree.value} tree holds pseudo-fractions only")
    if not 1 <= idx <= 1 << (lvl - 1):
        raise ValueError(f"invalid address {addr}")
    return (1 << (lvl - 1)) + idx - 1
