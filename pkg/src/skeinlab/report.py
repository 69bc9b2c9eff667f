"""Verification reports: typed cases, totals, JSON serialization and schema."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Case:
    name: str
    status: str  # "pass" | "fail"
    witness: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "status": self.status, "witness": self.witness}


@dataclass
class Report:
    suite: str
    parameters: dict[str, Any]
    cases: list[Case] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def totals(self) -> dict[str, int]:
        passed = sum(1 for c in self.cases if c.status == "pass")
        return {"pass": passed, "fail": len(self.cases) - passed, "total": len(self.cases)}

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.cases)

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "parameters": self.parameters,
            "cases": [c.to_dict() for c in self.cases],
            "totals": self.totals,
            "wall_time": self.wall_time,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        for key, value in self.parameters.items():
            lines.append(f"  {key} = {value}")
        for c in self.cases:
            mark = "PASS" if c.status == "pass" else "FAIL"
            lines.append(f"[{mark}] {c.name}")
            if c.witness and c.status == "fail":
                lines.append(f"       witness: {c.witness}")
        t = self.totals
        lines.append(
            f"{t['pass']}/{t['total']} passed in {self.wall_time:.2f}s"
        )
        return "\n".join(lines)


#: JSON schema for serialized reports (draft 2020-12 subset).
REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["suite", "parameters", "cases", "totals", "wall_time"],
    "additionalProperties": False,
    "properties": {
        "suite": {"type": "string"},
        "parameters": {"type": "object"},
        "cases": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "status"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "status": {"enum": ["pass", "fail"]},
                    "witness": {"type": ["string", "null"]},
                },
            },
        },
        "totals": {
            "type": "object",
            "required": ["pass", "fail", "total"],
            "additionalProperties": False,
            "properties": {
                "pass": {"type": "integer", "minimum": 0},
                "fail": {"type": "integer", "minimum": 0},
                "total": {"type": "integer", "minimum": 0},
            },
        },
        "wall_time": {"type": "number", "minimum": 0},
    },
}


def validate_report_dict(data: dict[str, Any]) -> None:
    """Minimal structural validation without external dependencies."""
    for key in REPORT_SCHEMA["required"]:
        if key not in data:
            raise ValueError(f"report missing key {key!r}")
    if set(data) - set(REPORT_SCHEMA["properties"]):
        raise ValueError("report has unexpected keys")
    totals = data["totals"]
    if totals["pass"] + totals["fail"] != totals["total"] or totals["total"] != len(data["cases"]):
        raise ValueError("report totals inconsistent with cases")
    for case in data["cases"]:
        if case["status"] not in ("pass", "fail"):
            raise ValueError("case status must be pass or fail")
