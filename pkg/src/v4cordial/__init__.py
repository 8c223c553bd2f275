"""V4-cordial labelings of hypergraphs: constructions, verification and exhaustive search.

A labeling assigns each vertex an element of the Klein four-group; it is
cordial when the four vertex-label counts differ by at most one and so do the
counts of the induced edge labels (each edge gets the sum of its vertices'
labels).
"""

from .constructors import (
    Decision,
    Reason,
    Verdict,
    check_middle_edge_obstruction,
    construct,
    construct_hyperpath,
    construct_star,
    construct_uniform_hypertree,
    decide_matching,
    extend_by_extension_lemma,
)
from .generators import enumerate_uniform_hypertrees, generate_random_hypertree
from .group import AUTOMORPHISMS, ELEMENTS, GroupAutomorphism, GroupElement, add, total
from .hypergraph import Hypergraph, classify, pendant_order
from .labeling import CordialityReport, PartialLabeling, induced_edge_labeling, is_friendly, verify
from .oracle import SearchConfig, SearchOutcome, Status, count_cordial_witnesses, exhaustive_search

__all__ = [
    "AUTOMORPHISMS",
    "CordialityReport",
    "Decision",
    "ELEMENTS",
    "GroupAutomorphism",
    "GroupElement",
    "Hypergraph",
    "PartialLabeling",
    "Reason",
    "SearchConfig",
    "SearchOutcome",
    "Status",
    "Verdict",
    "add",
    "check_middle_edge_obstruction",
    "classify",
    "construct",
    "construct_hyperpath",
    "construct_star",
    "construct_uniform_hypertree",
    "count_cordial_witnesses",
    "decide_matching",
    "enumerate_uniform_hypertrees",
    "exhaustive_search",
    "extend_by_extension_lemma",
    "generate_random_hypertree",
    "induced_edge_labeling",
    "is_friendly",
    "pendant_order",
    "total",
    "verify",
]
