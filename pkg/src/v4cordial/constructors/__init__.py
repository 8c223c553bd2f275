"""Constructive labelers for the recognised hypergraph classes, plus a dispatcher.

:func:`construct` routes a hypergraph to the matching decider, the star,
hyperpath or uniform-hypertree constructor, or the 3-edge path obstruction,
and falls back to exhaustive search for anything else. Paths whose edges all
have two vertices are ordinary graph paths and always go to the search, so
the non-cordial ones carry the search certificate.
"""

from __future__ import annotations

from ..hypergraph import (
    Hypergraph,
    Matching,
    PathHypergraph,
    SingletonEdge,
    Star,
    as_uniform_hypertree,
    classify,
)
from ..labeling import verify
from ..oracle import SearchConfig, Status, exhaustive_search
from ._common import ConstructionError
from .decision import Decision, Reason, Verdict
from .extension import NotApplicable, conditions_hold, extend_by_extension_lemma
from .hyperpath import EdgeTooSmall, NotAHyperpath, check_middle_edge_obstruction, construct_hyperpath
from .matching import NotAMatching, congruence_blocked, decide_matching, matching_rule
from .star import NotAStar, construct_star, star_rule
from .uniform import NotUniformHypertree, PTooSmall, construct_uniform_hypertree

__all__ = [
    "ConstructionError",
    "Decision",
    "EdgeTooSmall",
    "NotAHyperpath",
    "NotAMatching",
    "NotAStar",
    "NotApplicable",
    "NotUniformHypertree",
    "PTooSmall",
    "Reason",
    "Verdict",
    "check_middle_edge_obstruction",
    "conditions_hold",
    "congruence_blocked",
    "construct",
    "construct_hyperpath",
    "construct_star",
    "construct_uniform_hypertree",
    "decide_matching",
    "extend_by_extension_lemma",
    "matching_rule",
    "star_rule",
]


def construct(h: Hypergraph, cfg: SearchConfig | None = None) -> Decision:
    """Decide cordiality of ``h`` with a certificate when possible.

    Returns a cordial labeling (always re-verified), a non-cordiality reason,
    or ``Verdict.UNKNOWN`` when the search budget in ``cfg`` runs out.
    Singleton edges are only accepted in matchings.
    """
    cls = classify(h)
    if isinstance(cls, Matching):
        return decide_matching(h, cls)
    if any(len(e) == 1 for e in h.edges):
        raise SingletonEdge("singleton edges are only supported in matchings")

    labeling = None
    method = ""
    graph_path = isinstance(cls, PathHypergraph) and all(len(e) == 2 for e in h.edges)
    if isinstance(cls, Star):
        labeling, method = construct_star(h, cls), "star"
    elif isinstance(cls, PathHypergraph) and cls.is_hyperpath:
        labeling, method = construct_hyperpath(h, cls), "hyperpath"
    elif graph_path:
        pass  # plain graph paths are settled by search
    elif isinstance(cls, PathHypergraph) and check_middle_edge_obstruction(h):
        return Decision.not_cordial(Reason.MIDDLE_EDGE_PATH, method="middle_edge_path")
    else:
        tree = as_uniform_hypertree(h)
        if tree is not None and tree.p >= 3:
            labeling, method = construct_uniform_hypertree(h, tree), "uniform_hypertree"

    if labeling is None:
        outcome = exhaustive_search(h, cfg)
        if outcome.status is Status.FOUND:
            labeling, method = outcome.labeling, "oracle"
        elif outcome.status is Status.EXHAUSTED:
            return Decision.not_cordial(Reason.ORACLE_EXHAUSTED, method="oracle")
        else:
            return Decision.unknown(method="oracle")
    if not verify(h, labeling).cordial:  # pragma: no cover
        raise ConstructionError(f"{method} produced a labeling that is not cordial")
    return Decision.cordial(labeling, method=method)
