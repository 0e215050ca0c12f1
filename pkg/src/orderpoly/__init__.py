"""Exact computation and checking of Psi polynomials of labeled graphs and acyclic digraphs.

``Psi`` sums ``C(x + delta(pi), n)`` over orderings; it agrees with the
reciprocal chromatic polynomial (graphs) or the order polynomial of the
reachability poset (digraphs) exactly when no witness triple exists.
"""

from .errors import OrderPolyError, TheoremViolation
from .order import order_polynomial, order_polynomial_binom, reciprocity_check, strict_order_polynomial_binom
from .polys import BinomPoly, RatPoly, ZPoly, binom_basis_collapse, monomial_to_binom
from .psi import (
    acyclic_orientations,
    chromatic,
    delta_poly,
    graph_defect,
    psi,
    verify_graph_identity,
    witnesses,
)
from .relabel import algorithm_A, delta_diff_large_relabel, delta_diff_turning, sink_elimination_sequence, theorem_defect
from .gn import caterpillar_labeling, gn_membership, structured_membership, tree_conjecture_scan
from .structures import AcyclicDigraph, LabeledGraph, Poset
from .textio import dumps, load, parse

__all__ = [
    "AcyclicDigraph", "BinomPoly", "LabeledGraph", "OrderPolyError", "Poset", "RatPoly",
    "TheoremViolation", "ZPoly", "acyclic_orientations", "algorithm_A", "binom_basis_collapse",
    "caterpillar_labeling", "chromatic", "delta_diff_large_relabel", "delta_diff_turning",
    "delta_poly", "dumps", "gn_membership", "graph_defect", "load", "monomial_to_binom",
    "order_polynomial", "order_polynomial_binom", "parse", "psi", "reciprocity_check",
    "sink_elimination_sequence", "strict_order_polynomial_binom", "structured_membership",
    "theorem_defect", "tree_conjecture_scan", "verify_graph_identity", "witnesses",
]
