"""Verification report container shared by the checking drivers."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    name: str
    passed: bool
    columns: list[str]
    rows: list[dict[str, Any]]
    failures: list[str] = field(default_factory=list)
    summary: str = ""
    extra: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        out = {
            "name": self.name,
            "passed": self.passed,
            "summary": self.summary,
            "columns": list(self.columns),
            "rows": [dict(r) for r in self.rows],
            "failures": list(self.failures),
        }
        if self.extra:
            out["extra"] = self.extra
        return out
