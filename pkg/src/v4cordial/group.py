"""Arithmetic on the Klein four-group V4 = Z2 x Z2.

Elements are packed as integers 0..3, ``(x, y) -> 2*x + y``, so the
canonical order is ``(0,0) < (0,1) < (1,0) < (1,1)`` and group addition is
bitwise XOR. Every routine in the package accepts plain ints in ``range(4)``;
:class:`GroupElement` is an ``IntEnum`` over the same values for readable
output.
"""

from __future__ import annotations

import re
from enum import IntEnum
from functools import reduce
from itertools import permutations
from typing import Iterable, Sequence


class GroupElement(IntEnum):
    ZERO = 0  # (0,0)
    A = 1  # (0,1)
    B = 2  # (1,0)
    C = 3  # (1,1)

    @property
    def first(self) -> int:
        return self.value >> 1

    @property
    def second(self) -> int:
        return self.value & 1

    def __str__(self) -> str:
        return format_element(self.value)


ELEMENTS: tuple[int, ...] = (0, 1, 2, 3)
NONZERO: tuple[int, ...] = (1, 2, 3)

_ELEMENT_RE = re.compile(r"^\s*\(\s*([01])\s*,\s*([01])\s*\)\s*$")


def element(first: int, second: int) -> GroupElement:
    """Build the element ``(first, second)``."""
    if first not in (0, 1) or second not in (0, 1):
        raise ValueError(f"bits must be 0 or 1, got ({first}, {second})")
    return GroupElement(2 * first + second)


def add(a: int, b: int) -> GroupElement:
    return GroupElement(a ^ b)


def total(labels: Iterable[int]) -> GroupElement:
    """Sum of a multiset of elements; the empty sum is ``(0,0)``."""
    return GroupElement(reduce(lambda s, x: s ^ x, labels, 0))


def sum_from_counts(counts: Sequence[int]) -> GroupElement:
    """Sum of a multiset given as per-element counts.

    Only the parities of the counts matter, since every element is its own
    inverse.
    """
    s = 0
    for g in NONZERO:
        if counts[g] & 1:
            s ^= g
    return GroupElement(s)


def format_element(g: int) -> str:
    return f"({g >> 1},{g & 1})"


def parse_element(text: str) -> GroupElement:
    """Parse the textual form ``"(x,y)"``."""
    match = _ELEMENT_RE.match(text)
    if match is None:
        raise ValueError(f"not a V4 element: {text!r}")
    return element(int(match.group(1)), int(match.group(2)))


class GroupAutomorphism:
    """An automorphism of V4, i.e. a permutation of the three non-zero elements.

    ``GroupAutomorphism((2, 1, 3))`` sends ``(0,1) -> (1,0)``,
    ``(1,0) -> (0,1)`` and fixes ``(1,1)``.
    """

    __slots__ = ("table",)

    def __init__(self, images: Sequence[int]):
        if sorted(images) != [1, 2, 3]:
            raise ValueError(f"images of the non-zero elements must permute (1, 2, 3), got {images!r}")
        self.table: tuple[int, ...] = (0, *images)

    def __call__(self, g: int) -> int:
        return self.table[g]

    def apply(self, labels: Iterable[int]) -> list[int]:
        t = self.table
        return [t[g] for g in labels]

    def inverse(self) -> GroupAutomorphism:
        inv = [0, 0, 0, 0]
        for g in ELEMENTS:
            inv[self.table[g]] = g
        return GroupAutomorphism(inv[1:])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupAutomorphism) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"GroupAutomorphism({self.table[1:]})"


AUTOMORPHISMS: tuple[GroupAutomorphism, ...] = tuple(
    GroupAutomorphism(p) for p in permutations(NONZERO)
)
IDENTITY = AUTOMORPHISMS[0]
