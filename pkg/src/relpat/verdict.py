"""Decision records shared by the deciders."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

EQUIVALENT = "equivalent"
INCLUSION_HOLDS = "inclusion_holds"
REFUTED = "refuted"
INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class Verdict:
    decision: str
    method: str
    witness: Optional[str] = None
    bounded: bool = False
    note: str = ""
    direction: Optional[str] = None
    sample_size: int = field(default=0, compare=False)

    def to_json(self) -> dict:
        out = {"decision": self.decision, "method": self.method}
        if self.witness is not None:
            out["witness"] = self.witness
            out["direction"] = self.direction
        out["bounded"] = self.bounded
        if self.note:
            out["note"] = self.note
        return out
