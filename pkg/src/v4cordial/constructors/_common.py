"""Small helpers shared by the constructors."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..labeling import PartialLabeling, edge_sum


class ConstructionError(RuntimeError):
    """A constructor reached a state its case analysis does not cover."""


def balanced(k: int) -> list[int]:
    """``k`` labels cycling through V4 in canonical order."""
    return [i % 4 for i in range(k)]


def fill_friendly(pl: PartialLabeling, vertices: Iterable[int]) -> None:
    """Give each vertex the smallest currently least frequent label."""
    counts = pl.counts
    for v in vertices:
        low = min(counts)
        pl.assign(v, counts.index(low))


def assign_all(pl: PartialLabeling, vertices: Sequence[int], labels: Sequence[int]) -> None:
    if len(vertices) != len(labels):
        raise ConstructionError(f"{len(labels)} labels for {len(vertices)} vertices")
    for v, g in zip(vertices, labels):
        pl.assign(v, g)


def edge_counts(labels: Sequence[int], edges: Iterable[Iterable[int]]) -> list[int]:
    counts = [0, 0, 0, 0]
    for e in edges:
        counts[edge_sum(labels, e)] += 1
    return counts


def partial_sum(pl: PartialLabeling, edge: Iterable[int]) -> int:
    s = 0
    for v in edge:
        if pl.is_labeled(v):
            s ^= pl[v]
    return s
