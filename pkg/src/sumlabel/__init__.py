"""Topological integer additive set-sequential labelings of finite graphs.

Checks, constructs and searches for set-labelings whose vertex labels form a
topology on a finite ground set and whose vertex and edge (sumset) labels
together cover every non-empty subset.
"""

from .bounds import BoundsReport, audit, tiassl_bounds
from .construct import admissible_topologies, build_from_topology, construct_tiass_graph
from .errors import SumLabelError
from .graphcore import Graph
from .kernels import BACKEND
from .labeling import LabelClass, Labeling, check, classify, induced_edge_label
from .search import SearchOutcome, Status, decide
from .setalg import GroundSet, compute_structural_sets, nontrivial_representations, sumset
from .topology import enumerate_topologies, is_topology

__all__ = [
    "BACKEND",
    "BoundsReport",
    "Graph",
    "GroundSet",
    "LabelClass",
    "Labeling",
    "SearchOutcome",
    "Status",
    "SumLabelError",
    "admissible_topologies",
    "audit",
    "build_from_topology",
    "check",
    "classify",
    "compute_structural_sets",
    "construct_tiass_graph",
    "decide",
    "enumerate_topologies",
    "induced_edge_label",
    "is_topology",
    "nontrivial_representations",
    "sumset",
    "tiassl_bounds",
]
