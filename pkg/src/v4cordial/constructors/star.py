"""Cordial labelings of stars.

A star is reduced by peeling off balanced groups of labels whose edge sums do
not disturb cordiality: a full copy of V4 inside a large edge, four edges of
equal size, or four edges with 8 or 12 free vertices in total. What is left
has at most three edges of each size 2..5 and is settled by one of five rules.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..hypergraph import Hypergraph, HypergraphError, Star, as_star
from ..labeling import PartialLabeling, VertexLabeling, deficient, verify
from ._common import ConstructionError, assign_all, balanced, edge_counts, fill_friendly, partial_sum
from .extension import conditions_hold, extend_core
from .tables import equal_blocks, mixed_blocks, star_small_cases


class NotAStar(HypergraphError):
    pass


@dataclass
class Part:
    """An edge of the residual star: its full vertex set and its still unlabeled non-centre vertices."""

    edge: tuple[int, ...]
    free: list[int] = field(default_factory=list)

    @property
    def f(self) -> int:
        return len(self.free)


def residual_profile(parts: list[Part]) -> tuple[int, int, int, int]:
    prof = [0, 0, 0, 0]
    for p in parts:
        prof[p.f - 1] += 1
    return tuple(prof)


def star_rule(profile: tuple[int, ...]) -> str:
    """Rule settling a reduced star profile ``(m1, m2, m3, m4)``: one of O, T, F, R, *."""
    m1, m2, m3, m4 = profile
    m = m1 + m2 + m3 + m4
    n = 1 + m1 + 2 * m2 + 3 * m3 + 4 * m4
    if m == 1 or m == m1:
        return "O"
    if m % 4 == 1 or n % 4 == 1:
        return "T"
    if m4 >= 1 and m2 + m3 + m4 >= 2:
        return "F"
    if any(conditions_hold(n, m, f) for f, mk in zip((1, 2, 3, 4), profile) if mk):
        return "R"
    return "*"


def _reduce(pl: PartialLabeling, parts: list[Part], trace: list[str] | None) -> list[Part]:
    """Apply the three reductions until none fits; returns the residual parts."""
    parts = list(parts)
    while True:
        big = next((p for p in parts if p.f >= 5), None)
        if big is not None:
            assign_all(pl, big.free[:4], balanced(4))
            del big.free[:4]
            if trace is not None:
                trace.append("copy")
            continue
        done = False
        for k in (1, 2, 3, 4):
            same = [p for p in parts if p.f == k]
            if len(same) >= 4:
                for p, block in zip(same[:4], equal_blocks()[k]):
                    assign_all(pl, p.free, block)
                    p.free = []
                parts = [p for p in parts if p.f]
                if trace is not None:
                    trace.append(f"equal{k}")
                done = True
                break
        if done:
            continue
        for ftuple, blocks in mixed_blocks():
            chosen: list[Part] = []
            for f in ftuple:
                cand = next((p for p in parts if p.f == f and not any(p is c for c in chosen)), None)
                if cand is None:
                    break
                chosen.append(cand)
            if len(chosen) == 4:
                for p, block in zip(chosen, blocks):
                    assign_all(pl, p.free, block)
                    p.free = []
                parts = [p for p in parts if p.f]
                if trace is not None:
                    trace.append("sum" + "".join(map(str, ftuple)))
                done = True
                break
        if not done:
            return parts


def _last_vertex_choice(pl: PartialLabeling, vertex: int, part: Part, targets: list[int]) -> None:
    low = [g for g in range(4) if pl.counts[g] == min(pl.counts)]
    s = partial_sum(pl, part.edge)
    for g in low:
        if not targets or s ^ g in targets:
            pl.assign(vertex, g)
            return
    raise ConstructionError("no label for the last vertex")  # pragma: no cover


def label_star(
    pl: PartialLabeling, center: int, parts: list[Part], trace: list[str] | None = None
) -> None:
    """Label ``center`` and the free vertices of ``parts`` so the star becomes cordial.

    Vertices already labeled in ``pl`` must form full copies of V4 and every
    edge's labeled vertices other than the centre must sum to (0,0).
    """
    parts = _reduce(pl, parts, trace)
    if not parts:
        if not pl.is_labeled(center):
            fill_friendly(pl, [center])
        return
    prof = residual_profile(parts)
    rule = star_rule(prof)
    if trace is not None:
        trace.append(rule)
    m = len(parts)
    n = 1 + sum(p.f for p in parts)

    if rule == "O":
        fill_friendly(pl, [center])
        for p in parts:
            fill_friendly(pl, p.free)
        return

    if rule == "T":
        last = parts[-1]
        free = list(last.free)
        label_star(pl, center, [Part(p.edge, list(p.free)) for p in parts[:-1]], trace)
        if m % 4 == 1:
            fill_friendly(pl, free)
        else:
            fill_friendly(pl, free[:-1])
            others = edge_counts(pl.labels, [p.edge for p in parts[:-1]])
            _last_vertex_choice(pl, free[-1], last, deficient(others))
        return

    if rule == "F":
        four = next(p for p in parts if p.f == 4)
        other = next(p for p in parts if p is not four and p.f >= 2)
        assign_all(pl, four.free[:3], [1, 2, 3])
        del four.free[:3]
        pl.assign(other.free[0], 0)
        del other.free[0]
        label_star(pl, center, parts, trace)
        return

    if rule == "R":
        ranked = sorted(range(m), key=lambda i: (-parts[i].f, i))
        i = next(i for i in ranked if conditions_hold(n, m, parts[i].f))
        chosen = parts[i]
        free = list(chosen.free)
        rest = [Part(p.edge, list(p.free)) for j, p in enumerate(parts) if j != i]
        label_star(pl, center, rest, trace)
        others = edge_counts(pl.labels, [p.edge for p in rest])
        if not extend_core(pl, free, chosen.edge, others, n, m):  # pragma: no cover
            raise ConstructionError("extension step refused")
        return

    row = star_small_cases()[prof]
    for k in (1, 2, 3, 4):
        group = [p for p in parts if p.f == k]
        for p, block in zip(group, row.blocks[k]):
            assign_all(pl, p.free, block)
    if row.center is not None:
        pl.assign(center, row.center)
    else:
        fill_friendly(pl, [center])


def construct_star(h: Hypergraph, cls: Star | None = None, trace: list[str] | None = None) -> VertexLabeling:
    """Cordial labeling of a star (every edge has at least two vertices).

    A lone vertex counts as the star with no edges.
    """
    if h.n == 1 and h.m == 0:
        return (0,)
    cls = cls if cls is not None else as_star(h)
    if cls is None or as_star(h) is None:
        raise NotAStar("hypergraph is not a star")
    center = cls.center
    parts = [Part(tuple(sorted(e)), sorted(e - {center})) for e in h.edges]
    pl = PartialLabeling(h.n)
    label_star(pl, center, parts, trace)
    c = pl.to_labeling()
    if not verify(h, c).cordial:  # pragma: no cover
        raise ConstructionError("star labeling failed verification")
    return c
