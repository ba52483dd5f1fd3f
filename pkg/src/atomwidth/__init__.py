"""Clique-width of atoms in bigenic graph classes: recognizers, clique-width
expressions, width-certifying constructions, the decomposition of
(2P2, co(P2+P3))-free atoms and the (H1, H2) classifier."""

from .catalog import G, parse_graph_name
from .classify import ClassificationGap, Outcome, Verdict, classify, classify_atoms, classify_general
from .cwd import build_bipartite_chain, build_complete, build_cograph, eval_graph, exact_cliquewidth, width
from .decompose import InternalClaimViolation, NotAtom, NotInClass, ReductionTranscript, decompose
from .graph import Graph, GraphError, complement, induced_subgraph
from .recognizers import contains_induced, find_clique_cutset, is_atom, is_h_free

__version__ = "0.1.0"

__all__ = [
    "G", "Graph", "GraphError", "ClassificationGap", "InternalClaimViolation", "NotAtom", "NotInClass",
    "Outcome", "ReductionTranscript", "Verdict", "build_bipartite_chain", "build_complete", "build_cograph",
    "classify", "classify_atoms", "classify_general", "complement", "contains_induced", "decompose",
    "eval_graph", "exact_cliquewidth", "find_clique_cutset", "induced_subgraph", "is_atom", "is_h_free",
    "parse_graph_name", "width",
]
