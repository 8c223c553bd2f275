"""Exhaustive search for V4-cordial labelings of small hypergraphs.

The search walks vertices in increasing id and tries labels in canonical
order, so the first witness it reports is the lexicographically least cordial
labeling. Only count-feasible (friendly) vertex assignments are explored, and a
branch is cut as soon as the edges whose vertices are all labeled break the
edge-count bounds.

Symmetry: the six automorphisms of V4 permute the non-zero elements freely
and preserve cordiality, so it is enough to search labelings in which the
non-zero elements make their first appearance in the order (0,1), (1,0),
(1,1). Each automorphism orbit has exactly one such representative, and it is
the lexicographic minimum of its orbit, which keeps the reported witness equal
to the unreduced search's.

:func:`naive_search` is a separate brute-force enumerator (numpy, all 4**n
labelings) used to cross-check the pruned search.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .hypergraph import Hypergraph
from .labeling import VertexLabeling, is_cordial_labeling


class Status(str, Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted"
    ABORTED = "aborted"


@dataclass(frozen=True)
class SearchConfig:
    node_budget: int | None = None
    parallel_width: int = 1
    use_symmetry: bool = True

    def __post_init__(self) -> None:
        if self.node_budget is not None and self.node_budget < 0:
            raise ValueError("node_budget must be non-negative")
        if self.parallel_width < 1:
            raise ValueError("parallel_width must be at least 1")


@dataclass(frozen=True)
class SearchOutcome:
    status: Status
    labeling: VertexLabeling | None = None
    nodes: int = 0
    elapsed: float = 0.0

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND

    def to_json(self) -> dict:
        from .labeling import labeling_to_json

        out = {"status": self.status.value, "nodes": self.nodes, "wall_time": self.elapsed}
        if self.labeling is not None:
            out.update(labeling_to_json(self.labeling))
        return out


class _BudgetExceeded(Exception):
    pass


def _bounds(total: int) -> tuple[int, int]:
    """Upper count per element and how many elements may reach it."""
    hi = -(-total // 4)
    r = total % 4
    return hi, (r if r else 4)


class _Search:
    """Depth-first search state for one hypergraph."""

    def __init__(self, h: Hypergraph, use_symmetry: bool, budget: int | None):
        self.n = h.n
        self.use_symmetry = use_symmetry
        self.budget = budget
        self.nodes = 0
        self.v_hi, self.v_at_hi = _bounds(h.n)
        self.e_hi, self.e_at_hi = _bounds(h.m)
        closing: list[list[tuple[int, ...]]] = [[] for _ in range(h.n)]
        for e in h.edges:
            vs = tuple(sorted(e))
            closing[vs[-1]].append(vs)
        self.closing = closing
        self.labels = [0] * h.n
        self.vc = [0, 0, 0, 0]
        self.ec = [0, 0, 0, 0]
        self.v_full = 0
        self.e_full = 0

    def _allowed(self, top: int) -> range:
        if self.use_symmetry:
            return range(min(top + 1, 3) + 1)
        return range(4)

    def _push(self, v: int, g: int) -> list[int] | None:
        """Assign ``g`` to ``v``; return closed edge sums, or ``None`` if infeasible."""
        vc = self.vc
        if vc[g] >= self.v_hi:
            return None
        if vc[g] + 1 == self.v_hi and self.v_full >= self.v_at_hi:
            return None
        vc[g] += 1
        if vc[g] == self.v_hi:
            self.v_full += 1
        self.labels[v] = g
        sums: list[int] = []
        ok = True
        ec = self.ec
        labels = self.labels
        for vs in self.closing[v]:
            s = 0
            for u in vs:
                s ^= labels[u]
            ec[s] += 1
            sums.append(s)
            if ec[s] == self.e_hi:
                self.e_full += 1
            if ec[s] > self.e_hi or (ec[s] == self.e_hi and self.e_full > self.e_at_hi):
                ok = False
                break
        if not ok:
            self._pop(g, sums)
            return None
        return sums

    def _pop(self, g: int, sums: list[int]) -> None:
        ec = self.ec
        for s in sums:
            if ec[s] == self.e_hi:
                self.e_full -= 1
            ec[s] -= 1
        if self.vc[g] == self.v_hi:
            self.v_full -= 1
        self.vc[g] -= 1

    def replay(self, prefix: Sequence[int]) -> int | None:
        """Apply a prefix assignment; return the largest label used or ``None`` if infeasible."""
        top = 0
        for v, g in enumerate(prefix):
            if g not in self._allowed(top) or self._push(v, g) is None:
                return None
            top = max(top, g)
        return top

    def search(self, start: int, top: int, count: bool) -> int:
        """Explore from vertex ``start``; return number of leaves found (stops at 1 unless counting)."""
        n = self.n
        budget = self.budget
        found = 0

        def rec(v: int, top: int) -> bool:
            nonlocal found
            if v == n:
                found += 1
                return not count
            for g in self._allowed(top):
                self.nodes += 1
                if budget is not None and self.nodes > budget:
                    raise _BudgetExceeded
                sums = self._push(v, g)
                if sums is None:
                    continue
                if rec(v + 1, top if g <= top else g):
                    return True
                self._pop(g, sums)
            return False

        rec(start, top)
        return found

    def prefixes(self, depth: int) -> list[tuple[int, ...]]:
        """All feasible assignments of the first ``depth`` vertices, in lexicographic order."""
        out: list[tuple[int, ...]] = []

        def rec(v: int, top: int) -> None:
            if v == depth:
                out.append(tuple(self.labels[:depth]))
                return
            for g in self._allowed(top):
                sums = self._push(v, g)
                if sums is None:
                    continue
                rec(v + 1, max(top, g))
                self._pop(g, sums)

        rec(0, 0)
        return out


def _run_subtree(args: tuple) -> tuple[str, VertexLabeling | None, int, int]:
    h, prefix, use_symmetry, budget, count = args
    s = _Search(h, use_symmetry, budget)
    top = s.replay(prefix)
    if top is None:
        return ("exhausted", None, 0, 0)
    try:
        found = s.search(len(prefix), top, count)
    except _BudgetExceeded:
        return ("aborted", None, s.nodes, 0)
    if found and not count:
        return ("found", tuple(s.labels), s.nodes, found)
    return ("exhausted", None, s.nodes, found)


def _split_depth(h: Hypergraph, workers: int) -> int:
    # enough subtrees to keep every worker busy, but never the whole tree
    return max(1, min(h.n - 1, 4 if workers <= 4 else 6))


def _parallel(h: Hypergraph, cfg: SearchConfig, count: bool) -> tuple[str, VertexLabeling | None, int, int]:
    splitter = _Search(h, cfg.use_symmetry, None)
    prefixes = splitter.prefixes(_split_depth(h, cfg.parallel_width))
    tasks = [(h, p, cfg.use_symmetry, cfg.node_budget, count) for p in prefixes]
    nodes = 0
    total = 0
    aborted = False
    with ProcessPoolExecutor(max_workers=cfg.parallel_width) as pool:
        # results come back in submission (= lexicographic) order
        for status, labeling, k, found in pool.map(_run_subtree, tasks):
            nodes += k
            total += found
            if status == "aborted":
                aborted = True
            elif status == "found":
                pool.shutdown(wait=False, cancel_futures=True)
                return ("found", labeling, nodes, 1)
    if aborted:
        return ("aborted", None, nodes, total)
    return ("exhausted", None, nodes, total)


def _run(h: Hypergraph, cfg: SearchConfig, count: bool) -> tuple[str, VertexLabeling | None, int, int]:
    if cfg.parallel_width > 1 and h.n >= 6:
        return _parallel(h, cfg, count)
    return _run_subtree((h, (), cfg.use_symmetry, cfg.node_budget, count))


def exhaustive_search(h: Hypergraph, cfg: SearchConfig | None = None) -> SearchOutcome:
    """Find the lexicographically least cordial labeling of ``h``, or prove none exists.

    With ``parallel_width > 1`` the first few vertices are fixed in every
    possible way and the subtrees are searched by worker processes; the node
    budget then applies to each subtree separately. Results are merged in
    lexicographic order, so the witness does not depend on the worker count.
    """
    cfg = cfg or SearchConfig()
    t0 = time.perf_counter()
    status, labeling, nodes, _ = _run(h, cfg, count=False)
    elapsed = time.perf_counter() - t0
    if labeling is not None:
        assert is_cordial_labeling(h, labeling)
    return SearchOutcome(Status(status), labeling, nodes, elapsed)


def count_cordial_witnesses(h: Hypergraph, cfg: SearchConfig | None = None) -> int | None:
    """Number of cordial labelings, counted up to automorphisms of V4.

    Without symmetry reduction (``use_symmetry=False``) every labeling is
    counted individually instead. Returns ``None`` if the node budget runs out.
    """
    cfg = cfg or SearchConfig()
    status, _, _, total = _run(h, cfg, count=True)
    if status == "aborted":
        return None
    return total


# ---------------------------------------------------------------------------
# brute force


def _all_labelings(n: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    shifts = 2 * np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((idx[:, None] >> shifts[None, :]) & 3).astype(np.int8)


def _cordial_mask(h: Hypergraph, lab: np.ndarray) -> np.ndarray:
    elems = np.arange(4, dtype=np.int8)
    vcounts = (lab[:, :, None] == elems).sum(axis=1)
    ok = vcounts.max(axis=1) - vcounts.min(axis=1) <= 1
    if h.m:
        sums = np.stack(
            [np.bitwise_xor.reduce(lab[:, sorted(e)], axis=1) for e in h.edges], axis=1
        )
        ecounts = (sums[:, :, None] == elems).sum(axis=1)
        ok &= ecounts.max(axis=1) - ecounts.min(axis=1) <= 1
    return ok


def naive_labelings(h: Hypergraph, chunk: int = 1 << 16):
    """Yield arrays of all cordial labelings of ``h`` in lexicographic order (4**n scan)."""
    if h.n == 0:
        if h.m == 0:
            yield np.zeros((1, 0), dtype=np.int8)
        return
    total = 4**h.n
    for start in range(0, total, chunk):
        lab = _all_labelings(h.n, start, min(total, start + chunk))
        mask = _cordial_mask(h, lab)
        if mask.any():
            yield lab[mask]


def naive_search(h: Hypergraph) -> VertexLabeling | None:
    """Lexicographically least cordial labeling by plain enumeration, or ``None``."""
    for block in naive_labelings(h):
        return tuple(int(g) for g in block[0])
    return None
