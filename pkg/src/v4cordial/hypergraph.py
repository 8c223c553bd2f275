"""Hypergraph model, validation, structural classification and file formats.

A hypergraph is a vertex count ``n`` (vertices are ``0..n-1``) plus an
ordered list of edges, each a non-empty set of vertices. Classification
recognises the shapes for which a constructive labeling procedure exists:
matchings, stars, path hypergraphs and uniform hypertrees.

Hypertree test
--------------
A cycle here is a closed walk through at least two distinct edges with
distinct vertices, so two edges sharing two vertices already form a cycle.
Acyclicity is therefore the same as the bipartite vertex/edge incidence graph
being a forest, and a hypergraph is a hypertree exactly when it is connected,
any two edges share at most one vertex, and ``n == 1 + sum(|e| - 1)``. That
count identity is what :func:`is_hypertree` checks instead of enumerating
walks.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


class HypergraphError(ValueError):
    """Base class for malformed or unsuitable hypergraph input."""


class OutOfRangeVertex(HypergraphError):
    pass


class EmptyEdge(HypergraphError):
    pass


class DuplicateEdge(HypergraphError):
    pass


class SingletonEdge(HypergraphError):
    pass


class NotAHypertree(HypergraphError):
    pass


class ParseError(HypergraphError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph on vertices ``0..n-1``.

    Construction does not validate; call :func:`validate` (or use
    :meth:`from_edges`, which does).
    """

    n: int
    edges: tuple[frozenset[int], ...] = ()

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Iterable[int]], *, allow_duplicates: bool = False
    ) -> Hypergraph:
        h = cls(n, tuple(frozenset(e) for e in edges))
        validate(h, allow_duplicates=allow_duplicates)
        return h

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def order(self) -> int:
        return self.n

    @property
    def size(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def edge_sizes(self) -> list[int]:
        return [len(e) for e in self.edges]

    def sorted_edges(self) -> list[list[int]]:
        return [sorted(e) for e in self.edges]

    def relabel(self, perm: Sequence[int]) -> Hypergraph:
        """Image under the vertex map ``v -> perm[v]``."""
        return Hypergraph(self.n, tuple(frozenset(perm[v] for v in e) for e in self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, edges={self.sorted_edges()})"


def validate(h: Hypergraph, *, allow_duplicates: bool = False) -> None:
    """Raise on the first broken invariant; return ``None`` when ``h`` is well formed."""
    if h.n < 0:
        raise HypergraphError(f"vertex count must be non-negative, got {h.n}")
    seen: dict[frozenset[int], int] = {}
    for i, e in enumerate(h.edges):
        if not e:
            raise EmptyEdge(f"edge {i} is empty")
        for v in e:
            if not isinstance(v, int) or v < 0 or v >= h.n:
                raise OutOfRangeVertex(f"edge {i} contains vertex {v!r} outside [0, {h.n})")
        if not allow_duplicates:
            if e in seen:
                raise DuplicateEdge(f"edges {seen[e]} and {i} are equal")
            seen[e] = i


# ---------------------------------------------------------------------------
# structure classes


@dataclass(frozen=True)
class Matching:
    is_one_regular: bool
    edge_sizes: tuple[int, ...]
    tag: str = field(default="matching", init=False)


@dataclass(frozen=True)
class Star:
    center: int
    profile: tuple[int, ...]  # (m1, m2, m3, m4, m5, ...): m_k edges with k non-centre vertices
    tag: str = field(default="star", init=False)


@dataclass(frozen=True)
class PathHypergraph:
    edge_order: tuple[int, ...]
    is_hyperpath: bool
    tag: str = field(default="path", init=False)


@dataclass(frozen=True)
class UniformHypertree:
    p: int
    pendant_order: tuple[int, ...]
    tag: str = field(default="uniform_hypertree", init=False)


@dataclass(frozen=True)
class Other:
    tag: str = field(default="other", init=False)


StructureClass = Matching | Star | PathHypergraph | UniformHypertree | Other


def _is_connected(h: Hypergraph) -> bool:
    if h.n == 0:
        return True
    parent = list(range(h.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in h.edges:
        it = iter(e)
        r = find(next(it))
        for v in it:
            rv = find(v)
            if rv != r:
                parent[rv] = r
    root = find(0)
    return all(find(v) == root for v in range(h.n))


def is_hypertree(h: Hypergraph) -> bool:
    if h.m == 0:
        return False
    if h.n != 1 + sum(len(e) - 1 for e in h.edges):
        return False
    if any(len(e & f) > 1 for e, f in combinations(h.edges, 2)):
        return False
    return _is_connected(h)


def profile_of(sizes: Iterable[int]) -> tuple[int, ...]:
    """Counts ``(m1, m2, ...)`` of how many sizes equal 1, 2, ...; at least four entries."""
    sizes = list(sizes)
    top = max([4, *sizes])
    prof = [0] * top
    for s in sizes:
        prof[s - 1] += 1
    return tuple(prof)


def as_matching(h: Hypergraph) -> Matching | None:
    deg = h.degrees()
    if any(d > 1 for d in deg):
        return None
    return Matching(is_one_regular=all(d == 1 for d in deg), edge_sizes=tuple(h.edge_sizes()))


def as_star(h: Hypergraph) -> Star | None:
    if h.m == 0 or any(len(e) < 2 for e in h.edges):
        return None
    common = frozenset.intersection(*h.edges)
    if h.m == 1:
        if h.n != len(h.edges[0]):
            return None
        center = min(common)
    else:
        if len(common) != 1:
            return None
        (center,) = common
    if h.n != 1 + sum(len(e) - 1 for e in h.edges):
        return None
    # private parts pairwise disjoint and covering everything
    covered = set()
    for e in h.edges:
        private = e - {center}
        if covered & private:
            return None
        covered |= private
    if len(covered) + 1 != h.n:
        return None
    return Star(center=center, profile=profile_of(len(e) - 1 for e in h.edges))


def path_edge_order(h: Hypergraph) -> tuple[int, ...] | None:
    """Edge order making ``h`` a path hypergraph, or ``None``.

    Consecutive edges must share exactly one vertex, non-consecutive edges must
    be disjoint and every vertex must be covered. Of the two orientations the one
    starting at the smaller edge index is returned.
    """
    m = h.m
    if m == 0 or h.n != 1 + sum(len(e) - 1 for e in h.edges):
        return None
    if m == 1:
        return (0,)
    nbrs: list[list[int]] = [[] for _ in range(m)]
    for i, j in combinations(range(m), 2):
        k = len(h.edges[i] & h.edges[j])
        if k > 1:
            return None
        if k == 1:
            nbrs[i].append(j)
            nbrs[j].append(i)
    if any(len(x) > 2 for x in nbrs):
        return None
    ends = [i for i in range(m) if len(nbrs[i]) == 1]
    if len(ends) != 2:
        return None
    order = [min(ends)]
    prev = -1
    while len(order) < m:
        cur = order[-1]
        nxt = [j for j in nbrs[cur] if j != prev]
        if not nxt:
            return None
        prev = cur
        order.append(nxt[0])
    if len(set(order)) != m:
        return None
    # junction vertices of an edge must be distinct (implied by disjointness of
    # non-consecutive edges, checked above through the neighbour structure)
    if not _is_connected(h):
        return None
    return tuple(order)


def as_path(h: Hypergraph) -> PathHypergraph | None:
    order = path_edge_order(h)
    if order is None:
        return None
    return PathHypergraph(edge_order=order, is_hyperpath=all(len(e) >= 3 for e in h.edges))


def as_uniform_hypertree(h: Hypergraph) -> UniformHypertree | None:
    if h.m == 0:
        return None
    sizes = set(h.edge_sizes())
    if len(sizes) != 1 or not is_hypertree(h):
        return None
    return UniformHypertree(p=sizes.pop(), pendant_order=pendant_order(h))


def classify(h: Hypergraph) -> StructureClass:
    """Most specific recognised class, tried in the order matching, star, path, uniform hypertree."""
    for probe in (as_matching, as_star, as_path, as_uniform_hypertree):
        cls = probe(h)
        if cls is not None:
            return cls
    return Other()


# ---------------------------------------------------------------------------
# pendant orders


def _incidence_adjacency(h: Hypergraph) -> list[list[int]]:
    """Incidence graph: nodes ``0..n-1`` are vertices, ``n + i`` is edge ``i``."""
    adj: list[list[int]] = [[] for _ in range(h.n + h.m)]
    for i, e in enumerate(h.edges):
        for v in sorted(e):
            adj[v].append(h.n + i)
            adj[h.n + i].append(v)
    return adj


def _bfs(adj: list[list[int]], src: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def longest_path_end_edges(h: Hypergraph) -> tuple[int, list[int]]:
    """Length (in edges) of a longest path of a hypertree and the edges that end one.

    In the incidence tree two edge nodes at distance ``d`` are the two ends of a
    path with ``d/2 + 1`` edges.
    """
    adj = _incidence_adjacency(h)
    ecc = []
    for i in range(h.m):
        dist = _bfs(adj, h.n + i)
        ecc.append(max(dist[h.n :]))
    best = max(ecc)
    return best // 2 + 1, [i for i in range(h.m) if ecc[i] == best]


def pendant_order(h: Hypergraph) -> tuple[int, ...]:
    """Lexicographically smallest pendant edge order whose last edge ends a longest path.

    Every edge after the first meets the union of its predecessors in exactly
    one vertex.
    """
    if not is_hypertree(h):
        raise NotAHypertree("pendant orders exist only for hypertrees")
    m = h.m
    if m == 1:
        return (0,)
    _, ends = longest_path_end_edges(h)
    end_set = set(ends)
    order: list[int] = []
    covered: set[int] = set()
    used = [False] * m
    for step in range(m):
        for i in range(m):
            if used[i]:
                continue
            if step > 0 and not (h.edges[i] & covered):
                continue
            if step < m - 1 and not (end_set - set(order) - {i}):
                continue
            if step == m - 1 and i not in end_set:
                continue
            break
        else:  # pragma: no cover - impossible for hypertrees
            raise NotAHypertree("could not extend pendant order")
        order.append(i)
        used[i] = True
        covered |= h.edges[i]
    return tuple(order)


def is_pendant_order(h: Hypergraph, order: Sequence[int]) -> bool:
    if sorted(order) != list(range(h.m)):
        return False
    covered: set[int] = set()
    for k, i in enumerate(order):
        if k > 0 and len(h.edges[i] & covered) != 1:
            return False
        covered |= h.edges[i]
    return True


# ---------------------------------------------------------------------------
# file formats


def to_json(h: Hypergraph) -> dict:
    return {"n": h.n, "edges": h.sorted_edges()}


def from_json(data: dict | str, *, allow_duplicates: bool = False) -> Hypergraph:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        n = data["n"]
        edges = data["edges"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"expected an object with 'n' and 'edges': {exc}", 1) from exc
    if not isinstance(n, int) or not isinstance(edges, list):
        raise ParseError("'n' must be an integer and 'edges' a list", 1)
    for i, e in enumerate(edges):
        if not isinstance(e, list) or not all(isinstance(v, int) for v in e):
            raise ParseError(f"edge {i} must be a list of integers", 1)
    return Hypergraph.from_edges(n, edges, allow_duplicates=allow_duplicates)


def to_text(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.m}"]
    lines.extend(" ".join(map(str, e)) for e in h.sorted_edges())
    return "\n".join(lines) + "\n"


def _ints(line: str, lineno: int) -> list[int]:
    out = []
    for match in re.finditer(r"\S+", line):
        try:
            out.append(int(match.group()))
        except ValueError:
            raise ParseError(
                f"expected an integer, got {match.group()!r}", lineno, match.start() + 1
            ) from None
    return out


def from_text(text: str, *, allow_duplicates: bool = False) -> Hypergraph:
    """Parse ``n m`` followed by one line of vertex ids per edge.

    Blank lines and ``#`` comments are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            rows.append((lineno, line))
    if not rows:
        raise ParseError("missing header 'n m'", 1)
    lineno, header = rows[0]
    head = _ints(header, lineno)
    if len(head) != 2:
        raise ParseError("header must be 'n m'", lineno)
    n, m = head
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else lineno
        raise ParseError(f"header announces {m} edges, found {len(body)}", last)
    edges = [_ints(line, ln) for ln, line in body]
    for (ln, _), e in zip(body, edges):
        if len(set(e)) != len(e):
            raise ParseError("repeated vertex inside an edge", ln)
    return Hypergraph.from_edges(n, edges, allow_duplicates=allow_duplicates)


def loads(text: str, fmt: str | None = None, *, allow_duplicates: bool = False) -> Hypergraph:
    """Parse either format; with ``fmt=None`` JSON is detected by a leading ``{``."""
    if fmt is None:
        fmt = "json" if text.lstrip().startswith("{") else "text"
    if fmt == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
        return from_json(data, allow_duplicates=allow_duplicates)
    if fmt == "text":
        return from_text(text, allow_duplicates=allow_duplicates)
    raise ValueError(f"unknown format {fmt!r}")


def dumps(h: Hypergraph, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(to_json(h))
    if fmt == "text":
        return to_text(h)
    raise ValueError(f"unknown format {fmt!r}")
