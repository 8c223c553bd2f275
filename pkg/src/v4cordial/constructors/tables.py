"""Label tables used by the star, matching and hyperpath constructors.

The data lives in ``data/tables.json``. Concrete labels are stored in the
textual ``(x,y)`` form; the hyperpath tables use the symbolic alphabet
``0, a, b, c`` with ``a = (0,1)``, ``b = (1,0)``, ``c = (1,1)``, and primed
letters for the partial-sum pattern.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from ..group import parse_element

SYMBOLS = {"0": 0, "a": 1, "b": 2, "c": 3}


@lru_cache(maxsize=1)
def raw_tables() -> dict:
    text = resources.files("v4cordial").joinpath("data/tables.json").read_text()
    return json.loads(text)


def _labels(block: list[str]) -> tuple[int, ...]:
    return tuple(int(parse_element(s)) for s in block)


@lru_cache(maxsize=1)
def equal_blocks() -> dict[int, tuple[tuple[int, ...], ...]]:
    """Blocks for four edges with ``k`` free vertices each, keyed by ``k``."""
    cols = raw_tables()["equal_blocks"]["columns"]
    return {int(k): tuple(_labels(b) for b in blocks) for k, blocks in cols.items()}


@lru_cache(maxsize=1)
def mixed_blocks() -> tuple[tuple[tuple[int, ...], tuple[tuple[int, ...], ...]], ...]:
    """``(f-tuple, blocks)`` pairs for four edges with 8 or 12 free vertices in total."""
    return tuple(
        (tuple(row["f"]), tuple(_labels(b) for b in row["labels"]))
        for row in raw_tables()["mixed_blocks"]["rows"]
    )


@dataclass(frozen=True)
class SmallCase:
    profile: tuple[int, int, int, int]
    m: int
    n: int
    blocks: dict[int, tuple[tuple[int, ...], ...]]
    center: int | None = None


def _small_cases(key: str) -> dict[tuple[int, ...], SmallCase]:
    out = {}
    for row in raw_tables()[key]["rows"]:
        prof = tuple(row["profile"])
        blocks = {int(k): tuple(_labels(b) for b in bl) for k, bl in row["blocks"].items()}
        center = int(parse_element(row["center"])) if "center" in row else None
        out[prof] = SmallCase(prof, row["m"], row["n"], blocks, center)
    return out


@lru_cache(maxsize=1)
def star_small_cases() -> dict[tuple[int, ...], SmallCase]:
    return _small_cases("star_small_cases")


@lru_cache(maxsize=1)
def matching_small_cases() -> dict[tuple[int, ...], SmallCase]:
    return _small_cases("matching_small_cases")


@lru_cache(maxsize=1)
def star_residual_rules() -> dict[tuple[int, ...], str]:
    return {tuple(r["profile"]): r["rule"] for r in raw_tables()["star_residual"]["rows"]}


@lru_cache(maxsize=1)
def matching_residual_rules() -> dict[tuple[int, ...], str]:
    return {tuple(r["profile"]): r["rule"] for r in raw_tables()["matching_residual"]["rows"]}


@dataclass(frozen=True)
class PathRow:
    """One row of the hyperpath completion tables, resolved to concrete elements.

    ``pattern`` is the partial-sum tuple ``(s1, s2, s_{m-1}, s_m)``, ``six`` the
    sorted multiset of labels still to place, ``inserts`` the labels placed in
    ``e1, e2, e_{m-1}, e_m`` and ``sums`` the resulting edge sums.
    """

    kind: str
    pattern: tuple[int, int, int, int]
    six: tuple[int, ...]
    inserts: tuple[tuple[int, ...], ...]
    sums: tuple[int, int, int, int]


def _resolve_primes(primes: dict[str, str]) -> dict[str, int]:
    out = {"0": 0}
    for k, v in primes.items():
        out[k] = SYMBOLS[v]
    if "a'" in out and "b'" in out:
        out["c'"] = out["a'"] ^ out["b'"]
    return out


@lru_cache(maxsize=1)
def path_rows() -> tuple[PathRow, ...]:
    rows = []
    for kind in ("path_ends_two_sums", "path_ends_many_sums"):
        for row in raw_tables()[kind]["rows"]:
            primes = _resolve_primes(row["primes"])
            pattern = tuple(primes[s] for s in row["pattern"])
            parts = [row[k] for k in ("e1", "e2", "em1", "em")]
            rows.append(
                PathRow(
                    kind=kind,
                    pattern=pattern,
                    six=tuple(sorted(SYMBOLS[s] for s in row["six"])),
                    inserts=tuple(tuple(SYMBOLS[s] for s in p["labels"]) for p in parts),
                    sums=tuple(SYMBOLS[p["sum"]] for p in parts),
                )
            )
    return tuple(rows)


AUDIT_TABLES = (
    "equal_blocks",
    "mixed_blocks",
    "star_small_cases",
    "matching_small_cases",
    "path_ends_two_sums",
    "path_ends_many_sums",
)


def dump_tables() -> dict:
    """The embedded label tables, rows in their published order, for audit."""
    data = raw_tables()
    return {k: data[k] for k in AUDIT_TABLES}
