"""Small result records shared by the instance-level checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class Check:
    name: str
    status: str
    witness: Optional[Any] = None
    note: str = ""
    checked: int = 0
    children: list["Check"] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def __bool__(self) -> bool:
        return self.passed

    def as_dict(self) -> dict:
        out: dict[str, Any] = {"name": self.name, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        if self.checked:
            out["checked"] = self.checked
        if self.children:
            out["children"] = [c.as_dict() for c in self.children]
        return out


def skipped(name: str, why: str) -> Check:
    return Check(name, SKIPPED, note=f"hypothesis fails: {why}")


def combine(name: str, children: list[Check], note: str = "") -> Check:
    """Fail if any child failed; skipped only if every child was skipped."""
    if any(c.status == FAIL for c in children):
        status = FAIL
    elif children and all(c.status == SKIPPED for c in children):
        status = SKIPPED
    else:
        status = PASS
    return Check(name, status, note=note, checked=sum(c.checked for c in children), children=children)
