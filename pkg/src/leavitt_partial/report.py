"""Check records and reports shared by the verification routines."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass
class Record:
    name: str
    passed: bool
    detail: str = ""
    data: dict[str, Any] = field(default_factory=dict)
    elapsed: float | None = None


@dataclass
class Report:
    title: str
    records: list[Record] = field(default_factory=list)
    summary: dict[str, Any] = field(default_factory=dict)

    def add(self, name: str, passed: bool, detail: str = "", **data) -> Record:
        rec = Record(name, bool(passed), detail, data)
        self.records.append(rec)
        return rec

    def extend(self, other: "Report", prefix: str = "") -> None:
        for rec in other.records:
            self.records.append(Record(prefix + rec.name, rec.passed, rec.detail, rec.data, rec.elapsed))

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def violations(self) -> list[Record]:
        return [r for r in self.records if not r.passed]

    def __len__(self) -> int:
        return len(self.records)

    def to_dict(self, timing: bool = False) -> dict:
        recs = []
        for r in self.records:
            d = asdict(r)
            if not timing:
                d.pop("elapsed")
            recs.append(d)
        return {"title": self.title, "passed": self.passed, "summary": dict(self.summary), "records": recs}
