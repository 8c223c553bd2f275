"""Cordial labelings of hyperpaths and the 3-edge path obstruction.

A hyperpath with ``m >= 4`` edges is labeled from the inside out: the inner
path ``e3..e_{m-2}`` is labeled first (for ``m = 4`` it is a single vertex),
then the two outer edges on each side receive the remaining labels so that
``e1, e2, e_{m-1}, e_m`` end with four distinct sums. The last six labels are
placed with the completion tables; a short enumeration covers the few
configurations the tables do not list.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Sequence

from ..group import AUTOMORPHISMS
from ..hypergraph import Hypergraph, HypergraphError, PathHypergraph, as_path
from ..labeling import PartialLabeling, VertexLabeling, verify
from ._common import ConstructionError
from .tables import path_rows


class NotAHyperpath(HypergraphError):
    pass


class EdgeTooSmall(HypergraphError):
    pass


def check_middle_edge_obstruction(h: Hypergraph) -> bool:
    """True iff ``h`` is a 3-edge path whose middle edge has two vertices, ``e1 | e3 = V`` and ``4 | n``."""
    cls = as_path(h)
    if cls is None or h.m != 3:
        return False
    e1, e2, e3 = (h.edges[i] for i in cls.edge_order)
    return len(e2) == 2 and len(e1 | e3) == h.n and h.n % 4 == 0


class _Path:
    """Edges in path order with their junctions."""

    def __init__(self, edges: Sequence[frozenset[int]]):
        self.edges = [frozenset(e) for e in edges]
        m = len(self.edges)
        self.junctions = [next(iter(self.edges[i] & self.edges[i + 1])) for i in range(m - 1)]

    def inner(self, i: int) -> list[int]:
        """Vertices of edge ``i`` that are not junctions, in increasing id."""
        js = set()
        if i > 0:
            js.add(self.junctions[i - 1])
        if i < len(self.edges) - 1:
            js.add(self.junctions[i])
        return sorted(self.edges[i] - js)

    def walk(self) -> list[int]:
        """All vertices along the path."""
        out: list[int] = []
        for i in range(len(self.edges)):
            out += self.inner(i)
            if i < len(self.junctions):
                out.append(self.junctions[i])
        return out


def _esum(labels: dict[int, int], e) -> int:
    s = 0
    for v in e:
        s ^= labels[v]
    return s


def _friendly_sequence(k: int) -> list[int]:
    return [i % 4 for i in range(k)]


def _label_two(path: _Path) -> dict[int, int]:
    walk = path.walk()
    n = len(walk)
    e1, e2 = path.edges
    j = path.junctions[0]
    if n % 4 == 0:
        # nonzero label at the junction: the two sums then differ by it
        labels = {j: 1}
        counts = [0, 1, 0, 0]
        for v in walk:
            if v == j:
                continue
            g = counts.index(min(counts))
            labels[v] = g
            counts[g] += 1
        return labels
    labels = {}
    counts = [0, 0, 0, 0]
    for v in walk[:-1]:
        g = counts.index(min(counts))
        labels[v] = g
        counts[g] += 1
    last = walk[-1]
    low = [g for g in range(4) if counts[g] == min(counts)]
    for g in low:
        labels[last] = g
        if _esum(labels, e1) != _esum(labels, e2):
            return labels
    raise ConstructionError("two-edge path left without a distinguishing label")  # pragma: no cover


def _label_three(path: _Path, trace: list[str] | None) -> dict[int, int]:
    walk = path.walk()
    labels = {v: i % 4 for i, v in enumerate(walk)}
    e1, e2, e3 = path.edges
    j1, j2 = path.junctions

    def sums():
        return _esum(labels, e1), _esum(labels, e2), _esum(labels, e3)

    s1, s2, s3 = sums()
    if s1 == s3:
        nxt = walk[walk.index(j1) + 1]
        labels[j1], labels[nxt] = labels[nxt], labels[j1]
        if trace is not None:
            trace.append("switch1")
    s1, s2, s3 = sums()
    if s2 in (s1, s3):
        pos = walk.index(j2)
        for succ in walk[pos + 1 : pos + 3]:
            labels[j2], labels[succ] = labels[succ], labels[j2]
            s1, s2, s3 = sums()
            if s2 not in (s1, s3):
                if trace is not None:
                    trace.append("switch2")
                break
            labels[j2], labels[succ] = labels[succ], labels[j2]
        else:  # pragma: no cover
            raise ConstructionError("three-edge repair failed")
    return labels


def _six_type(six: Sequence[int]) -> int:
    """0 for 0,0,a,a,b,b; 1 for 0,a,a,b,b,c; 2 for 0,0,a,a,b,c (up to renaming a, b, c); 3 otherwise."""
    counts = [six.count(g) for g in range(4)]
    nz = sorted(counts[1:])
    if counts[0] == 2 and nz == [0, 2, 2]:
        return 0
    if counts[0] == 1 and nz == [1, 2, 2]:
        return 1
    if counts[0] == 2 and nz == [1, 1, 2]:
        return 2
    return 3


# the two unbalanced types first, then 0,0,a,a,b,b, then anything else
_SIX_RANK = {1: 0, 2: 1, 0: 2, 3: 3}


def _sub_multisets(counts: Sequence[int], size: int) -> list[tuple[int, ...]]:
    out = []

    def rec(g: int, left: int, acc: list[int]) -> None:
        if g == 4:
            if left == 0:
                out.append(tuple(x for x in range(4) for _ in range(acc[x])))
            return
        for k in range(min(counts[g], left) + 1):
            acc.append(k)
            rec(g + 1, left - k, acc)
            acc.pop()

    rec(0, size, [])
    return out


def _table_completion(s: tuple[int, ...], six: tuple[int, ...]) -> tuple[tuple[int, ...], ...] | None:
    """Labels for (e1, e2, e_{m-1}, e_m) from the completion tables, after normalising ``s``."""
    for t in range(4):
        for phi in AUTOMORPHISMS:
            six_n = tuple(sorted(phi(g) for g in six))
            for rev in (False, True):
                pattern = tuple(phi(x ^ t) for x in s)
                if rev:
                    pattern = pattern[::-1]
                for row in path_rows():
                    if row.pattern == pattern and row.six == six_n:
                        inv = phi.inverse()
                        inserts = tuple(tuple(inv(g) for g in part) for part in row.inserts)
                        return inserts[::-1] if rev else inserts
    return None


def _search_completion(s: tuple[int, ...], six: tuple[int, ...]) -> tuple[tuple[int, ...], ...] | None:
    seen = set()
    for perm in permutations(six):
        if perm in seen:
            continue
        seen.add(perm)
        parts = (perm[0:2], perm[2:3], perm[3:4], perm[4:6])
        finals = {s[i] ^ _xor(parts[i]) for i in range(4)}
        if len(finals) == 4:
            return parts
    return None


def _xor(labels: Sequence[int]) -> int:
    s = 0
    for g in labels:
        s ^= g
    return s


def _outer_step(path: _Path, inner: dict[int, int], trace: list[str] | None) -> dict[int, int] | None:
    edges = path.edges
    m = len(edges)
    J = path.junctions
    n = len(set().union(*edges))
    x = inner[J[1]]
    y = inner[J[m - 3]]
    z = _xor(inner.values())
    per = -(-n // 4)
    counts = [per] * 4
    for g in inner.values():
        counts[g] -= 1
    d = sum(counts) - (n - len(inner))

    a1 = path.inner(0)
    b = path.inner(1)
    c = path.inner(m - 2)
    d1 = path.inner(m - 1)
    reserved = (a1[-2:], b[-1:], c[-1:], d1[-2:])
    excess = sorted(a1[:-2] + b[:-1] + c[:-1] + d1[:-2])
    jx, jy = J[0], J[m - 2]

    candidates = []
    for phantom in combinations(range(4), d):
        if any(counts[g] < 1 for g in phantom):
            continue
        supply = list(counts)
        for g in phantom:
            supply[g] -= 1
        target = x ^ y ^ z ^ _xor(phantom)
        for xp in range(4):
            yp = xp ^ target
            rest = list(supply)
            rest[xp] -= 1
            rest[yp] -= 1
            if min(rest) < 0:
                continue
            # preferred: one of x', y' is a most frequent label and a 0 is left over
            preferred = max(supply) in (supply[xp], supply[yp]) and rest[0] > 0
            candidates.append((not preferred, phantom, xp, yp, rest))
    candidates.sort(key=lambda t: t[:4])

    for _, phantom, xp, yp, rest in candidates:
        sixes = sorted(_sub_multisets(rest, 6), key=lambda t: (_SIX_RANK[_six_type(t)], t))
        for six in sixes:
            left = list(rest)
            for g in six:
                left[g] -= 1
            spread = [g for g in range(4) for _ in range(left[g])]
            labels = dict(inner)
            labels[jx] = xp
            labels[jy] = yp
            for v, g in zip(excess, spread):
                labels[v] = g
            s = tuple(
                _xor(labels[v] for v in e if v in labels)
                for e in (edges[0], edges[1], edges[m - 2], edges[m - 1])
            )
            parts = _table_completion(s, six)
            how = "table"
            if parts is None:
                parts = _search_completion(s, six)
                how = "search"
            if parts is None:
                continue
            for slots, part in zip(reserved, parts):
                for v, g in zip(slots, part):
                    labels[v] = g
            if trace is not None:
                trace.append(how)
            return labels
    return None


def _label(path: _Path, trace: list[str] | None) -> dict[int, int]:
    m = len(path.edges)
    if m == 1:
        return {v: g for v, g in zip(sorted(path.edges[0]), _friendly_sequence(len(path.edges[0])))}
    if m == 2:
        return _label_two(path)
    if m == 3:
        return _label_three(path, trace)
    if m == 4:
        candidates = [{path.junctions[1]: g} for g in range(4)]
    else:
        candidates = [_label(_Path(path.edges[2 : m - 2]), trace)]
    for inner in candidates:
        out = _outer_step(path, inner, trace)
        if out is not None:
            return out
    raise ConstructionError("outer step found no completion")  # pragma: no cover


def construct_hyperpath(h: Hypergraph, cls: PathHypergraph | None = None, trace: list[str] | None = None) -> VertexLabeling:
    """Cordial labeling of a hyperpath (a path hypergraph with all edges of size >= 3)."""
    found = as_path(h)
    if found is None:
        raise NotAHyperpath("hypergraph is not a path")
    if not found.is_hyperpath:
        raise EdgeTooSmall("every edge of a hyperpath needs at least 3 vertices")
    cls = cls if cls is not None else found
    path = _Path([h.edges[i] for i in cls.edge_order])
    labels = _label(path, trace)
    pl = PartialLabeling(h.n)
    for v, g in labels.items():
        pl.assign(v, g)
    c = pl.to_labeling()
    if not verify(h, c).cordial:  # pragma: no cover
        raise ConstructionError("hyperpath labeling failed verification")
    return c
