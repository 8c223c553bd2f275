"""Extending a cordial labeling across one new edge.

Given a hypergraph whose last edge ``e_m`` has ``k >= 2`` vertices outside the
other edges, a cordial labeling of the rest extends to the whole hypergraph
whenever the residues of ``n`` and ``m`` mod 4 avoid three bad combinations
(see :func:`conditions_hold`).
"""

from __future__ import annotations

from typing import Sequence

from ..hypergraph import Hypergraph
from ..labeling import UNLABELED, PartialLabeling, VertexLabeling, deficient, is_friendly
from ._common import assign_all, balanced, edge_counts, fill_friendly, partial_sum


class NotApplicable(ValueError):
    """The extension step cannot be used on this input."""


def conditions_hold(n: int, m: int, k: int) -> bool:
    """Residue conditions on ``|V| = n``, ``|E| = m`` and ``k = |e_m^-|``."""
    if k < 2:
        return False
    if n % 4 == 0 and m % 4 != 1:
        return False
    if n % 4 == 2 and m % 4 == 0:
        return False
    if n % 4 == 3 and k == 2 and m % 4 == 0:
        return False
    return True


def extend_core(
    pl: PartialLabeling,
    free: Sequence[int],
    edge: Sequence[int],
    other_edge_counts: Sequence[int],
    n: int,
    m: int,
) -> bool:
    """Label the ``free`` vertices of ``edge`` in place.

    ``pl`` must already hold a friendly labeling of the other ``n - len(free)``
    vertices whose ``m - 1`` edges have friendly sums ``other_edge_counts``.
    Returns ``False`` (leaving ``pl`` untouched) when the residue conditions fail.
    """
    k = len(free)
    if not conditions_hold(n, m, k):
        return False
    free = list(free)
    if (m - 1) % 4 == 0:
        fill_friendly(pl, free)
        return True

    start = partial_sum(pl, edge)
    targets = deficient(other_edge_counts)
    low = deficient(pl.counts)
    a = (4 - (n - k) % 4) % 4

    if k == 2 and a == 3:
        # two of the three scarce labels; one of their three pair sums hits a scarce edge label
        for i, g in enumerate(low):
            for h in low[i + 1 :]:
                if start ^ g ^ h in targets:
                    assign_all(pl, free, [g, h])
                    return True
        return False  # pragma: no cover - excluded by the residue conditions

    head = low if a else []
    b = k - a
    r = b % 4
    body = balanced(b - r)
    s = start
    for g in head:
        s ^= g
    choices = [q for q in range(4) if s ^ q in targets and not (r == 2 and q == 0)]
    if not choices:  # pragma: no cover - excluded by the residue conditions
        return False
    q = choices[0]
    if r == 1:
        tail = [q]
    elif r == 2:
        tail = [0, q]
    else:
        tail = [g for g in range(4) if g != q]
    assign_all(pl, free, head + body + tail)
    return True


def extend_by_extension_lemma(
    h: Hypergraph, order: Sequence[int], c_minus: Sequence[int]
) -> VertexLabeling:
    """Extend a cordial labeling of ``h`` minus its last edge to all of ``h``.

    ``order`` lists the edge indices; the last one is the edge being added.
    ``c_minus`` is either a full-length sequence (entries on the new vertices are
    ignored and may be :data:`~v4cordial.labeling.UNLABELED`) or lists labels of
    the remaining vertices in increasing id order.

    Raises :class:`NotApplicable` if ``order`` is not a permutation of the
    edges, the new edge has fewer than two new vertices, the residue conditions
    fail, or ``c_minus`` is not cordial on the smaller hypergraph.
    """
    if sorted(order) != list(range(h.m)) or h.m == 0:
        raise NotApplicable("order must list every edge exactly once")
    last = h.edges[order[-1]]
    rest = [h.edges[i] for i in order[:-1]]
    seen = set().union(*rest) if rest else set()
    new = sorted(last - seen)
    keep = [v for v in range(h.n) if v not in set(new)]
    if len(c_minus) == h.n:
        base = [c_minus[v] for v in keep]
    elif len(c_minus) == len(keep):
        base = list(c_minus)
    else:
        raise NotApplicable(f"labeling of length {len(c_minus)} fits neither {h.n} nor {len(keep)} vertices")
    if any(g not in range(4) for g in base):
        raise NotApplicable("the smaller hypergraph must be fully labeled")
    if not conditions_hold(h.n, h.m, len(new)):
        raise NotApplicable(f"n={h.n}, m={h.m}, |e_m^-|={len(new)} violates the residue conditions")

    pl = PartialLabeling(h.n)
    for v, g in zip(keep, base):
        pl.assign(v, g)
    counts = edge_counts(pl.labels, rest)
    if not (is_friendly(pl.counts) and is_friendly(counts)):
        raise NotApplicable("the labeling of the smaller hypergraph is not cordial")
    if not extend_core(pl, new, sorted(last), counts, h.n, h.m):  # pragma: no cover
        raise NotApplicable("extension failed")
    assert UNLABELED not in pl.labels
    return pl.to_labeling()
