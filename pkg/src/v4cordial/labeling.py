"""Vertex labelings, induced edge labelings and cordiality certificates."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .group import ELEMENTS, format_element, parse_element
from .hypergraph import Hypergraph

UNLABELED = 4

VertexLabeling = tuple[int, ...]
EdgeLabeling = tuple[int, ...]


class LengthMismatch(ValueError):
    pass


class PartialLabeling:
    """Labeling under construction; unlabeled slots hold :data:`UNLABELED`.

    Per-element counts of the assigned labels are kept current so constructors
    can query balance in O(1).
    """

    __slots__ = ("labels", "counts")

    def __init__(self, n: int):
        self.labels = [UNLABELED] * n
        self.counts = [0, 0, 0, 0]

    @classmethod
    def from_labels(cls, labels: Iterable[int | None]) -> PartialLabeling:
        labels = list(labels)
        pl = cls(len(labels))
        for v, g in enumerate(labels):
            if g is not None and g != UNLABELED:
                pl.assign(v, g)
        return pl

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def assign(self, v: int, g: int) -> None:
        old = self.labels[v]
        if old != UNLABELED:
            self.counts[old] -= 1
        self.labels[v] = g
        self.counts[g] += 1

    def clear(self, v: int) -> None:
        old = self.labels[v]
        if old != UNLABELED:
            self.counts[old] -= 1
            self.labels[v] = UNLABELED

    def swap(self, u: int, v: int) -> None:
        self.labels[u], self.labels[v] = self.labels[v], self.labels[u]

    def is_labeled(self, v: int) -> bool:
        return self.labels[v] != UNLABELED

    def unlabeled(self) -> list[int]:
        return [v for v, g in enumerate(self.labels) if g == UNLABELED]

    def is_total(self) -> bool:
        return UNLABELED not in self.labels

    def to_labeling(self) -> VertexLabeling:
        if not self.is_total():
            raise ValueError(f"vertices {self.unlabeled()} are unlabeled")
        return tuple(self.labels)

    def __repr__(self) -> str:
        return f"PartialLabeling({self.labels})"


def label_counts(labels: Iterable[int]) -> list[int]:
    counts = [0, 0, 0, 0]
    for g in labels:
        counts[g] += 1
    return counts


def edge_sum(labels: Sequence[int], edge: Iterable[int]) -> int:
    s = 0
    for v in edge:
        s ^= labels[v]
    return s


def induced_edge_labeling(h: Hypergraph, c: Sequence[int]) -> EdgeLabeling:
    """Label every edge with the group sum of its vertex labels."""
    if len(c) != h.n:
        raise LengthMismatch(f"labeling has {len(c)} entries, hypergraph has {h.n} vertices")
    return tuple(edge_sum(c, e) for e in h.edges)


def _as_count_list(counts: Mapping[int, int] | Sequence[int]) -> list[int]:
    if isinstance(counts, Mapping):
        return [counts.get(g, 0) for g in ELEMENTS]
    counts = list(counts)
    if len(counts) != 4:
        raise ValueError("expected four counts")
    return counts


def is_friendly(counts: Mapping[int, int] | Sequence[int]) -> bool:
    """True iff the four element counts differ pairwise by at most one."""
    cs = _as_count_list(counts)
    return max(cs) - min(cs) <= 1


def deficient(counts: Sequence[int]) -> list[int]:
    """Elements whose count is strictly below the maximum, in canonical order."""
    top = max(counts)
    return [g for g in ELEMENTS if counts[g] < top]


def least_frequent(counts: Sequence[int]) -> list[int]:
    low = min(counts)
    return [g for g in ELEMENTS if counts[g] == low]


@dataclass(frozen=True)
class CordialityReport:
    vertex_counts: tuple[int, int, int, int]
    edge_counts: tuple[int, int, int, int]
    friendly: bool
    edge_friendly: bool
    violations: tuple[str, ...] = field(default=())

    @property
    def cordial(self) -> bool:
        return self.friendly and self.edge_friendly

    def to_json(self) -> dict:
        return {
            "cordial": self.cordial,
            "friendly": self.friendly,
            "edge_friendly": self.edge_friendly,
            "vertex_counts": {format_element(g): self.vertex_counts[g] for g in ELEMENTS},
            "edge_counts": {format_element(g): self.edge_counts[g] for g in ELEMENTS},
            "violations": list(self.violations),
        }


def _violations(kind: str, counts: Sequence[int]) -> list[str]:
    out = []
    for a, b in combinations(ELEMENTS, 2):
        if abs(counts[a] - counts[b]) >= 2:
            out.append(
                f"{kind} labels {format_element(a)} and {format_element(b)} occur "
                f"{counts[a]} and {counts[b]} times"
            )
    return out


def verify(h: Hypergraph, c: Sequence[int]) -> CordialityReport:
    """Check friendliness of ``c`` and of the edge labeling it induces."""
    edge_labels = induced_edge_labeling(h, c)
    if any(g not in (0, 1, 2, 3) for g in c):
        raise ValueError("labels must be V4 elements 0..3")
    vc = label_counts(c)
    ec = label_counts(edge_labels)
    return CordialityReport(
        vertex_counts=tuple(vc),
        edge_counts=tuple(ec),
        friendly=is_friendly(vc),
        edge_friendly=is_friendly(ec),
        violations=tuple(_violations("vertex", vc) + _violations("edge", ec)),
    )


def is_cordial_labeling(h: Hypergraph, c: Sequence[int]) -> bool:
    return verify(h, c).cordial


def labeling_to_json(c: Sequence[int]) -> dict:
    return {"labels": [format_element(g) for g in c]}


def labeling_from_json(data: dict | str) -> VertexLabeling:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        raw = data["labels"]
    except (KeyError, TypeError) as exc:
        raise ValueError("expected an object with a 'labels' list") from exc
    return tuple(int(parse_element(s)) for s in raw)
