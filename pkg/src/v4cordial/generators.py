"""Seeded random instances and isomorphism-free enumeration of uniform hypertrees."""

from __future__ import annotations

import random
from typing import Iterable, Iterator, Sequence

from .hypergraph import Hypergraph


def _sizes(edge_sizes: Iterable[int] | tuple[int, int]) -> list[int]:
    """Accept either an explicit collection of sizes or an inclusive ``(lo, hi)`` pair."""
    if isinstance(edge_sizes, range):
        return list(edge_sizes)
    sizes = list(edge_sizes)
    if len(sizes) == 2 and isinstance(edge_sizes, tuple) and sizes[0] < sizes[1]:
        return list(range(sizes[0], sizes[1] + 1))
    return sorted(set(sizes))


def generate_random_hypertree(
    edge_size_range: Iterable[int] | tuple[int, int], m: int, seed: int | None = None
) -> Hypergraph:
    """Random hypertree with ``m`` edges whose sizes are drawn from ``edge_size_range``.

    Each new edge is attached to a uniformly chosen existing vertex.
    ``(3, 5)`` means sizes 3..5; pass a list such as ``[3]`` for fixed sizes.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    sizes = _sizes(edge_size_range)
    if not sizes or min(sizes) < 2:
        raise ValueError("edge sizes must be at least 2")
    rng = random.Random(seed)
    s = rng.choice(sizes)
    edges = [list(range(s))]
    n = s
    for _ in range(m - 1):
        s = rng.choice(sizes)
        anchor = rng.randrange(n)
        edges.append([anchor, *range(n, n + s - 1)])
        n += s - 1
    return Hypergraph.from_edges(n, edges)


def random_star(sizes: Sequence[int] | tuple[int, int], m: int, seed: int | None = None) -> Hypergraph:
    """Star with centre 0 and ``m`` edges of sizes drawn from ``sizes`` (each at least 2)."""
    rng = random.Random(seed)
    pool = _sizes(sizes)
    return star_from_sizes([rng.choice(pool) for _ in range(m)])


def star_from_sizes(sizes: Sequence[int]) -> Hypergraph:
    edges = []
    nxt = 1
    for s in sizes:
        edges.append([0, *range(nxt, nxt + s - 1)])
        nxt += s - 1
    return Hypergraph.from_edges(nxt, edges)


def matching_from_sizes(sizes: Sequence[int], isolated: int = 0) -> Hypergraph:
    edges = []
    nxt = 0
    for s in sizes:
        edges.append(list(range(nxt, nxt + s)))
        nxt += s
    return Hypergraph.from_edges(nxt + isolated, edges)


def random_matching(
    sizes: Sequence[int] | tuple[int, int], m: int, isolated: int = 0, seed: int | None = None
) -> Hypergraph:
    rng = random.Random(seed)
    pool = _sizes(sizes)
    return matching_from_sizes([rng.choice(pool) for _ in range(m)], isolated)


def path_from_sizes(sizes: Sequence[int]) -> Hypergraph:
    """Path hypergraph whose consecutive edges share one vertex, numbered along the path."""
    edges = []
    start = 0
    for s in sizes:
        edges.append(list(range(start, start + s)))
        start += s - 1
    return Hypergraph.from_edges(start + 1, edges)


def random_hyperpath(sizes: Sequence[int] | tuple[int, int], m: int, seed: int | None = None, shuffle: bool = True) -> Hypergraph:
    """Random hyperpath; with ``shuffle`` the vertex ids and edge order are permuted."""
    rng = random.Random(seed)
    pool = _sizes(sizes)
    h = path_from_sizes([rng.choice(pool) for _ in range(m)])
    if not shuffle:
        return h
    perm = list(range(h.n))
    rng.shuffle(perm)
    edges = [sorted(perm[v] for v in e) for e in h.edges]
    rng.shuffle(edges)
    return Hypergraph.from_edges(h.n, edges)


def random_hypergraph(n: int, m: int, max_size: int | None = None, seed: int | None = None) -> Hypergraph:
    """Hypergraph with ``m`` distinct random edges on ``n`` vertices (fewer if ``n`` is tiny)."""
    rng = random.Random(seed)
    max_size = max_size or n
    seen: set[frozenset[int]] = set()
    edges = []
    tries = 0
    while len(edges) < m and tries < 50 * (m + 1):
        tries += 1
        k = rng.randint(1, max(1, min(max_size, n)))
        e = frozenset(rng.sample(range(n), k)) if n else frozenset()
        if e and e not in seen:
            seen.add(e)
            edges.append(sorted(e))
    return Hypergraph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# enumeration up to isomorphism


def _incidence_tree(h: Hypergraph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(h.n + h.m)]
    for i, e in enumerate(h.edges):
        for v in e:
            adj[v].append(h.n + i)
            adj[h.n + i].append(v)
    return adj


def _centers(adj: list[list[int]]) -> list[int]:
    deg = [len(a) for a in adj]
    leaves = [v for v, d in enumerate(deg) if d <= 1]
    remaining = len(adj)
    while remaining > 2:
        remaining -= len(leaves)
        nxt = []
        for v in leaves:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
            deg[v] = 0
        leaves = nxt
    return leaves


def canonical_form(h: Hypergraph) -> str:
    """Canonical string of a hypertree's incidence tree (vertex and edge nodes kept apart)."""
    adj = _incidence_tree(h)

    def encode(v: int, parent: int) -> str:
        kind = "e" if v >= h.n else "v"
        kids = sorted(encode(w, v) for w in adj[v] if w != parent)
        return kind + "(" + "".join(kids) + ")"

    return min(encode(c, -1) for c in _centers(adj))


def enumerate_uniform_hypertrees(p: int, m: int) -> Iterator[Hypergraph]:
    """Every p-uniform hypertree with ``m`` edges, one per isomorphism class."""
    level = {canonical_form(h): h for h in [Hypergraph.from_edges(p, [list(range(p))])]}
    for _ in range(m - 1):
        nxt: dict[str, Hypergraph] = {}
        for h in level.values():
            for v in range(h.n):
                edges = [sorted(e) for e in h.edges] + [[v, *range(h.n, h.n + p - 1)]]
                g = Hypergraph.from_edges(h.n + p - 1, edges)
                key = canonical_form(g)
                if key not in nxt:
                    nxt[key] = g
        level = nxt
    for key in sorted(level):
        yield level[key]
