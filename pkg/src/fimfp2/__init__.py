"""Munn-tree arithmetic for free inverse monoids and the first homology of the
Cayley digraph of the free monogenic inverse monoid."""

from .fim import MunnTree, fim_equal, munn_tree, mt_inverse, mt_multiply, reduce
from .monogenic import Interval, TypeI, TypeII, eval_word, mult, normal_form, nf_word
from .cayley import EdgeClass, EdgeKind, EdgeRef, Path, classify_edge, geodesic, tree_path
from .homology import HomologyVector, act, act_word, basis_cycle, homology_of_path, max_weight, unit, weight

__version__ = "0.1.0"

__all__ = [
    "MunnTree", "fim_equal", "munn_tree", "mt_inverse", "mt_multiply", "reduce",
    "Interval", "TypeI", "TypeII", "eval_word", "mult", "normal_form", "nf_word",
    "EdgeClass", "EdgeKind", "EdgeRef", "Path", "classify_edge", "geodesic", "tree_path",
    "HomologyVector", "act", "act_word", "basis_cycle", "homology_of_path", "max_weight", "unit", "weight",
]
