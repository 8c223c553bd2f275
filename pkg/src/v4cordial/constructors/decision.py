"""Three-valued outcome of the construction dispatcher."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..labeling import VertexLabeling, labeling_to_json


class Verdict(str, Enum):
    CORDIAL = "cordial"
    NOT_CORDIAL = "not_cordial"
    UNKNOWN = "unknown"


class Reason(str, Enum):
    MATCHING_CONGRUENCE = "MatchingCongruence"
    MIDDLE_EDGE_PATH = "MiddleEdgePath"
    ORACLE_EXHAUSTED = "OracleExhausted"

    @property
    def certificate(self) -> str:
        return _CERTIFICATES[self]


_CERTIFICATES = {
    Reason.MATCHING_CONGRUENCE: (
        "1-regular matching with n and m even and n != m (mod 4): the vertex label sum "
        "equals the edge label sum, which a friendly count vector forces to be (0,0) on "
        "one side and a sum of two distinct elements on the other"
    ),
    Reason.MIDDLE_EDGE_PATH: (
        "3-edge path with a 2-vertex middle edge, e1 and e3 covering V and n = 0 (mod 4): "
        "the sums on e1 and e3 add up to the total label sum (0,0), so they coincide"
    ),
    Reason.ORACLE_EXHAUSTED: "exhaustive search found no cordial labeling",
}


@dataclass(frozen=True)
class Decision:
    verdict: Verdict
    labeling: VertexLabeling | None = None
    reason: Reason | None = None
    method: str = ""

    @classmethod
    def cordial(cls, labeling: VertexLabeling, method: str) -> Decision:
        return cls(Verdict.CORDIAL, labeling=tuple(labeling), method=method)

    @classmethod
    def not_cordial(cls, reason: Reason, method: str) -> Decision:
        return cls(Verdict.NOT_CORDIAL, reason=reason, method=method)

    @classmethod
    def unknown(cls, method: str) -> Decision:
        return cls(Verdict.UNKNOWN, method=method)

    @property
    def is_cordial(self) -> bool:
        return self.verdict is Verdict.CORDIAL

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict.value, "method": self.method}
        if self.labeling is not None:
            out.update(labeling_to_json(self.labeling))
        if self.reason is not None:
            out["reason"] = self.reason.value
            out["certificate"] = self.reason.certificate
        return out
