"""Exact-arithmetic library for four binary trees enumerating the rationals."""

from .rational import Rational, addable, determinant, make_rational, mediant, parse_rational
from .contfrac import cf_eval, cf_expand, s_children_cf, sc_children_cf
from .bitpath import NodeAddress, address_to_path, global_index, path_to_address, path_value
from .trees import Tree, bfs_iter, children, level, locate_by_walk, value_at
from .locate import (
    LocateResult,
    cw_locate,
    cw_path,
    locate_vertex,
    s_locate,
    s_path_to_cw_path,
    s_to_cw_index,
    sb_locate,
    sb_path,
    sb_to_sc,
    sc_path,
    sc_to_sb,
)
from .apps import Button, SqrtState, buttons_for, fibonacci, simulate_buttons

__all__ = [
    "Rational", "addable", "determinant", "make_rational", "mediant", "parse_rational",
    "cf_eval", "cf_expand", "s_children_cf", "sc_children_cf",
    "NodeAddress", "address_to_path", "global_index", "path_to_address", "path_value",
    "Tree", "bfs_iter", "children", "level", "locate_by_walk", "value_at",
    "LocateResult", "cw_locate", "cw_path", "locate", "s_locate", "s_path_to_cw_path",
    "s_to_cw_index", "sb_locate", "sb_path", "sb_to_sc", "sc_path", "sc_to_sb",
    "Button", "SqrtState", "buttons_for", "fibonacci", "simulate_buttons",
]

__version__ = "0.1.0"
