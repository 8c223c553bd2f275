"""Cordial labelings of p-uniform hypertrees, p >= 3.

Edges are added one at a time along a pendant order. The extension step
handles every residue class of ``(p, m) mod 4`` except ``p = 2`` and ``m = 3``,
where ``n = 0 (mod 4)`` and the edge-sum constraint is tight. There the last
two edges (if they meet) or the last three edges (if the last two are
disjoint) are labeled together on top of a cordial labeling of the rest.

Every labeled prefix ``X_k`` satisfies: vertex counts friendly, and the sums
of the first ``k`` edges friendly. A single :class:`PartialLabeling` is shared
by the whole recursion; a prefix is always labeled before any vertex outside
it.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

from ..hypergraph import Hypergraph, HypergraphError, UniformHypertree, as_uniform_hypertree, is_pendant_order
from ..labeling import PartialLabeling, VertexLabeling, deficient, verify
from ._common import ConstructionError, assign_all, balanced, edge_counts, fill_friendly
from .extension import conditions_hold, extend_core


class NotUniformHypertree(HypergraphError):
    pass


class PTooSmall(HypergraphError):
    pass


def residual_cell(p: int, m: int) -> bool:
    """True when the extension step cannot add the ``m``-th edge of a p-uniform hypertree."""
    return not conditions_hold(1 + (p - 1) * m, m, p - 1) and m > 1


class _Builder:
    def __init__(self, h: Hypergraph, p: int, trace: list[str] | None):
        self.h = h
        self.p = p
        self.pl = PartialLabeling(h.n)
        self.trace = trace

    def note(self, what: str) -> None:
        if self.trace is not None:
            self.trace.append(what)

    def edge(self, i: int) -> frozenset[int]:
        return self.h.edges[i]

    def union(self, order: Sequence[int]) -> set[int]:
        out: set[int] = set()
        for i in order:
            out |= self.h.edges[i]
        return out

    def sums(self, order: Sequence[int]) -> list[int]:
        return edge_counts(self.pl.labels, [self.h.edges[i] for i in order])

    # -- main recursion ---------------------------------------------------

    def label(self, order: tuple[int, ...]) -> None:
        k = len(order)
        if k == 1:
            fill_friendly(self.pl, sorted(self.edge(order[0])))
            return
        if not residual_cell(self.p, k):
            self.label(order[:-1])
            new = sorted(self.edge(order[-1]) - self.union(order[:-1]))
            n = 1 + (self.p - 1) * k
            if not extend_core(self.pl, new, sorted(self.edge(order[-1])), self.sums(order[:-1]), n, k):
                raise ConstructionError("extension step refused")  # pragma: no cover
            return
        last, prev = self.edge(order[-1]), self.edge(order[-2])
        if last & prev:
            self.case_one(order)
        else:
            self.case_two(order)

    # -- last two edges meet ------------------------------------------------

    def case_one(self, order: tuple[int, ...]) -> None:
        self.note("case1")
        head = order[:-2]
        self.label(head)
        e1, e2 = self.edge(order[-2]), self.edge(order[-1])
        (v,) = e1 & e2
        seen = self.union(head)
        x, y = deficient(self.pl.counts)
        (z,) = [g for g, c in enumerate(self.sums(head)) if c == max(self.sums(head))]
        if v in seen:
            self.note("case1.shared")
            self.shared_anchor(e1, v, e2, v, x, y, z)
        else:
            self.note("case1.chain")
            (u,) = e1 & seen
            self.chain(e1, u, e2, v, x, y, z)

    def shared_anchor(self, e1, a1: int, e2, a2: int, x: int, y: int, z: int) -> None:
        """``e1``, ``e2`` hang from labeled vertices ``a1``, ``a2`` with equal labels; all else free.

        ``x``, ``y`` are the two scarce vertex labels and ``z`` the one edge
        label that is already one ahead.
        """
        pl = self.pl
        lam = pl[a1]
        assert pl[a2] == lam
        f1 = sorted(e1 - {a1})
        f2 = sorted(e2 - {a2})
        if z not in (x ^ lam, y ^ lam):
            assign_all(pl, f1, [x] + balanced(len(f1) - 1))
            assign_all(pl, f2, [y] + balanced(len(f2) - 1))
            return
        self.note("collision")
        if self.p < 6:  # pragma: no cover - only p = 2 (mod 4) reaches this branch
            raise ConstructionError("collision branch needs p >= 6")
        alpha = next(g for g in range(4) if z not in (x ^ lam ^ g, y ^ lam ^ g))
        assign_all(pl, f1, [x, alpha, 1, 2, 3] + balanced(len(f1) - 5))
        assign_all(pl, f2, [y, 0] + [g for g in range(4) if g != alpha] + balanced(len(f2) - 5))

    def chain(self, e1, u: int, e2, v: int, x: int, y: int, z: int) -> None:
        """``e1`` hangs from labeled ``u``; ``e2`` hangs from ``v``, a new vertex of ``e1``."""
        pl = self.pl
        mu = pl[u]
        if x ^ mu == z:
            x, y = y, x
        rest = [w for w in sorted(e1 - {u}) if w != v]
        g = next(g for g in range(4) if y ^ g not in (z, x ^ mu))
        supply = balanced(self.p - 2)
        supply.remove(g)
        pl.assign(rest[0], x)
        pl.assign(v, g)
        assign_all(pl, rest[1:], supply)
        f2 = sorted(e2 - {v})
        assign_all(pl, f2, [y] + balanced(len(f2) - 1))

    # -- last two edges disjoint --------------------------------------------

    def case_two(self, order: tuple[int, ...]) -> None:
        k = len(order)
        a, b, c = (self.edge(i) for i in order[-3:])
        if k == 3:
            # the first edge meets both others; putting it in the middle gives two meeting edges
            self.note("case2.reindex")
            self.label((order[1], order[0], order[2]))
            return
        head = order[:-3]
        ab, ac = bool(a & b), bool(a & c)
        if ab and not ac:
            self.note("case2.reindex")
            self.label(head + (order[-1], order[-3], order[-2]))
            return
        if ac and not ab:
            self.note("case2.reindex")
            self.label(head + (order[-2], order[-3], order[-1]))
            return
        self.label(head)
        seen = self.union(head)
        if ab and ac:
            self.note("case2.both")
            self.both_meet(a, b, c, seen, head)
        else:
            self.note("case2.apart")
            self.all_apart(order[-3:], seen, head)

    def _two_after_one(self, head: Sequence[int], first: int, e1, a1: int, e2, a2: int) -> None:
        x, y = deficient(self.pl.counts)
        counts = self.sums(tuple(head) + (first,))
        (z,) = [g for g, cnt in enumerate(counts) if cnt == max(counts)]
        self.shared_anchor(e1, a1, e2, a2, x, y, z)

    def both_meet(self, a, b, c, seen: set[int], head: Sequence[int]) -> None:
        pl = self.pl
        (v1,) = a & seen
        (u,) = a & b
        (w,) = a & c
        x = deficient(pl.counts)[0]
        if v1 not in (u, w):
            free = [t for t in sorted(a) if t not in (v1, u, w)]
            supply = balanced(self.p - 2)
            supply.remove(x)
            pl.assign(u, x)
            pl.assign(w, x)
            assign_all(pl, free, supply)
        else:
            self.note("case2.both.anchor")
            lam = pl[v1]
            other = w if v1 == u else u
            free = [t for t in sorted(a) if t not in (v1, other)]
            supply = balanced(self.p - 2)
            supply.remove(lam)
            pl.assign(free[0], x)
            pl.assign(other, lam)
            assign_all(pl, free[1:], supply)
        first = self._index(a)
        self._two_after_one(head, first, b, u, c, w)

    def all_apart(self, triple: Sequence[int], seen: set[int], head: Sequence[int]) -> None:
        pl = self.pl
        edges = [self.edge(i) for i in triple]
        anchors = [next(iter(e & seen)) for e in edges]
        labs = [pl[t] for t in anchors]
        if len(set(labs)) < 3:
            self.note("case2.apart.repeat")
            if labs[1] == labs[2]:
                idx = (0, 1, 2)
            elif labs[0] == labs[2]:
                idx = (1, 0, 2)
            else:
                idx = (2, 0, 1)
            i0, i1, i2 = idx
            x = deficient(pl.counts)[0]
            free = sorted(edges[i0] - {anchors[i0]})
            assign_all(pl, free, balanced(self.p - 2) + [x])
            self._two_after_one(head, triple[i0], edges[i1], anchors[i1], edges[i2], anchors[i2])
            return
        self.note("case2.apart.distinct")
        scarce = deficient(pl.counts)
        for perm in permutations(scarce):
            if len({labs[i] ^ perm[i] for i in range(3)}) == 3:
                break
        else:  # pragma: no cover
            raise ConstructionError("no distinct sums for three disjoint edges")
        for i, e in enumerate(edges):
            free = sorted(e - {anchors[i]})
            assign_all(pl, free, [perm[i]] + balanced(self.p - 2))

    def _index(self, e) -> int:
        return self.h.edges.index(e)


def construct_uniform_hypertree(
    h: Hypergraph, cls: UniformHypertree | None = None, trace: list[str] | None = None
) -> VertexLabeling:
    """Cordial labeling of a p-uniform hypertree with p >= 3.

    ``trace``, if given, collects the names of the branches taken (useful to
    check which configurations a test exercises).
    """
    found = as_uniform_hypertree(h)
    if found is None:
        raise NotUniformHypertree("hypergraph is not a uniform hypertree")
    cls = cls if cls is not None else found
    if cls.p < 3:
        raise PTooSmall(f"p = {cls.p}; need p >= 3")
    if not is_pendant_order(h, cls.pendant_order):
        raise NotUniformHypertree("edge order is not a pendant order")
    b = _Builder(h, cls.p, trace)
    b.label(tuple(cls.pendant_order))
    c = b.pl.to_labeling()
    if not verify(h, c).cordial:  # pragma: no cover
        raise ConstructionError("uniform hypertree labeling failed verification")
    return c
