"""JSON reports emitted by the command line tool.

Reports carry only exact values (ints, strings, booleans, canonical
cyclotomic coefficient lists). Serialization is deterministic: sorted keys,
fixed indentation, trailing newline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields
from typing import Any

SCHEMA = "apcqc.report/1"


@dataclass
class Report:
    command: dict[str, Any]
    function: dict[str, Any] | None = None
    apc: dict[str, Any] | None = None
    code: dict[str, Any] | None = None
    oracle: dict[str, Any] | None = None
    theorems: dict[str, Any] | None = None
    mds: dict[str, Any] | None = None
    search: dict[str, Any] | None = None
    warnings: list[str] | None = None
    timing: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"schema": SCHEMA}
        for fld in fields(self):
            value = getattr(self, fld.name)
            if value is not None:
                out[fld.name] = value
        return out

    @classmethod
    def from_dict(cls, obj: dict[str, Any]) -> Report:
        if obj.get("schema") != SCHEMA:
            raise ValueError(f"unknown report schema {obj.get('schema')!r}")
        names = {fld.name for fld in fields(cls)}
        unknown = set(obj) - names - {"schema"}
        if unknown:
            raise ValueError(f"unknown report fields: {sorted(unknown)}")
        return cls(**{k: v for k, v in obj.items() if k in names})


def emit(report: Report) -> str:
    return json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n"


def parse(text: str) -> Report:
    return Report.from_dict(json.loads(text))
