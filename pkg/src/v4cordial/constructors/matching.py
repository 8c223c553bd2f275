"""Deciding cordiality of matchings (edges pairwise disjoint, singletons allowed).

A 1-regular matching is cordial unless ``n`` and ``m`` are both even with
``n != m (mod 4)``: then the label sum over all vertices equals the sum over
all edges, which is (0,0) for the count that is a multiple of 4 but cannot be
for the one that is 2 mod 4. With isolated vertices present every matching is
cordial.
"""

from __future__ import annotations

from ..hypergraph import Hypergraph, HypergraphError, Matching, as_matching
from ..labeling import PartialLabeling, deficient, verify
from ._common import ConstructionError, assign_all, balanced, edge_counts, fill_friendly, partial_sum
from .decision import Decision, Reason
from .extension import extend_core
from .star import Part, label_star
from .tables import equal_blocks, mixed_blocks, matching_small_cases


class NotAMatching(HypergraphError):
    pass


def congruence_blocked(n: int, m: int) -> bool:
    """True when ``n``, ``m`` are even and differ mod 4 (no cordial labeling for 1-regular matchings)."""
    return n % 2 == 0 and m % 2 == 0 and n % 4 != m % 4


def matching_rule(profile: tuple[int, ...]) -> str:
    """Rule for a reduced 1-regular matching profile ``(m1, m2, m3, m4)`` (``m_k`` edges of size ``k``).

    One of O (all singletons or one edge), F' (a 4-edge plus another
    non-singleton), x (blocked by the congruence), T', R' or ** (tabulated).
    """
    sizes = [k + 1 for k in range(4) for _ in range(profile[k])]
    m = len(sizes)
    n = sum(sizes)
    if m <= 1 or all(s == 1 for s in sizes):
        return "O"
    if 4 in sizes and sum(1 for s in sizes if s > 1) >= 2:
        return "F'"
    if congruence_blocked(n, m):
        return "x"
    if _t_edge(sizes, n, m) is not None:
        return "T'"
    if _r_edge(sizes, n, m) is not None:
        return "R'"
    return "**"


def _t_edge(sizes: list[int], n: int, m: int) -> int | None:
    if n % 4 != 1 and m % 4 != 1:
        return None
    for i, s in enumerate(sizes):
        if not congruence_blocked(n - s, m - 1):
            return i
    return None


def _r_edge(sizes: list[int], n: int, m: int) -> int | None:
    for i, s in enumerate(sizes):
        if s < 2 or congruence_blocked(n - s, m - 1):
            continue
        if n % 4 == 2 and m % 4 != 0:
            return i
        if n % 4 == 3 and not (s == 2 and m % 4 == 0):
            return i
    return None


def _reduce(pl: PartialLabeling, parts: list[Part], trace: list[str] | None) -> list[Part]:
    parts = list(parts)
    while True:
        big = next((p for p in parts if p.f >= 5), None)
        if big is not None:
            assign_all(pl, big.free[:4], balanced(4))
            del big.free[:4]
            if trace is not None:
                trace.append("copy")
            continue
        hit = None
        for k in (1, 2, 3, 4):
            same = [p for p in parts if p.f == k]
            if len(same) >= 4:
                hit = (f"equal{k}", list(zip(same[:4], equal_blocks()[k])))
                break
        if hit is None:
            for ftuple, blocks in mixed_blocks():
                chosen: list[Part] = []
                for f in ftuple:
                    cand = next((p for p in parts if p.f == f and not any(p is c for c in chosen)), None)
                    if cand is None:
                        break
                    chosen.append(cand)
                if len(chosen) == 4:
                    hit = ("sum" + "".join(map(str, ftuple)), list(zip(chosen, blocks)))
                    break
        if hit is not None:
            name, pairs = hit
            for p, block in pairs:
                assign_all(pl, p.free, block)
                p.free = []
            parts = [p for p in parts if p.f]
            if trace is not None:
                trace.append(name)
            continue
        return parts


def label_matching(pl: PartialLabeling, parts: list[Part], trace: list[str] | None = None) -> None:
    """Cordially label the free vertices of a 1-regular matching not blocked by the congruence.

    As for stars, labels already in ``pl`` must form full copies of V4 and sum
    to (0,0) inside every edge.
    """
    while True:
        parts = _reduce(pl, parts, trace)
        m = len(parts)
        if m <= 1 or all(p.f == 1 for p in parts):
            if trace is not None and m:
                trace.append("O")
            for p in parts:
                fill_friendly(pl, p.free)
            return
        four = next((p for p in parts if p.f == 4), None)
        other = next((p for p in parts if p is not four and p.f >= 2), None) if four else None
        if four is None or other is None:
            break
        if trace is not None:
            trace.append("F'")
        assign_all(pl, four.free[:3], [1, 2, 3])
        del four.free[:3]
        pl.assign(other.free[0], 0)
        del other.free[0]

    sizes = [p.f for p in parts]
    n = sum(sizes)
    if congruence_blocked(n, m):  # pragma: no cover - the reductions keep n, m mod 4
        raise ConstructionError("residual matching is blocked by the congruence")

    i = _t_edge(sizes, n, m)
    if i is not None:
        if trace is not None:
            trace.append("T'")
        chosen = parts[i]
        free = list(chosen.free)
        rest = [Part(p.edge, list(p.free)) for j, p in enumerate(parts) if j != i]
        label_matching(pl, rest, trace)
        if (m - 1) % 4 == 0:
            fill_friendly(pl, free)
            return
        fill_friendly(pl, free[:-1])
        targets = deficient(edge_counts(pl.labels, [p.edge for p in rest]))
        s = partial_sum(pl, chosen.edge)
        low = [g for g in range(4) if pl.counts[g] == min(pl.counts)]
        g = next(g for g in low if not targets or s ^ g in targets)
        pl.assign(free[-1], g)
        return

    i = _r_edge(sizes, n, m)
    if i is not None:
        if trace is not None:
            trace.append("R'")
        chosen = parts[i]
        free = list(chosen.free)
        rest = [Part(p.edge, list(p.free)) for j, p in enumerate(parts) if j != i]
        label_matching(pl, rest, trace)
        others = edge_counts(pl.labels, [p.edge for p in rest])
        if not extend_core(pl, free, chosen.edge, others, n, m):  # pragma: no cover
            raise ConstructionError("extension step refused")
        return

    prof = tuple(sizes.count(k) for k in (1, 2, 3, 4))
    row = matching_small_cases().get(prof)
    if row is None:  # pragma: no cover
        raise ConstructionError(f"no rule for matching profile {prof}")
    if trace is not None:
        trace.append("**")
    for k in (1, 2, 3):
        group = [p for p in parts if p.f == k]
        for p, block in zip(group, row.blocks[k]):
            assign_all(pl, p.free, block)


def decide_matching(h: Hypergraph, cls: Matching | None = None, trace: list[str] | None = None) -> Decision:
    """Cordial labeling of a matching, or the congruence certificate that none exists."""
    found = as_matching(h)
    if found is None:
        raise NotAMatching("some vertex lies in two edges")
    cls = cls if cls is not None else found
    if found.is_one_regular and congruence_blocked(h.n, h.m):
        return Decision.not_cordial(Reason.MATCHING_CONGRUENCE, method="matching")

    pl = PartialLabeling(h.n)
    covered = sorted(set().union(*h.edges)) if h.m else []
    isolated = sorted(set(range(h.n)) - set(covered))
    parts = [Part(tuple(sorted(e)), sorted(e)) for e in h.edges]
    if not congruence_blocked(len(covered), h.m) or h.m == 0:
        label_matching(pl, parts, trace)
        fill_friendly(pl, isolated)
    else:
        # an isolated vertex becomes the centre of a star; edge sums shift uniformly
        if trace is not None:
            trace.append("lift")
        label_star(pl, isolated[0], parts, trace)
        fill_friendly(pl, isolated[1:])
    c = pl.to_labeling()
    if not verify(h, c).cordial:  # pragma: no cover
        raise ConstructionError("matching labeling failed verification")
    return Decision.cordial(c, method="matching")
