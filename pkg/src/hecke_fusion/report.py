"""Check records and reports with pinned, deterministic serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    """One named verification outcome; truthy iff it passed."""
    name: str
    instance: str
    ok: bool
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.ok

    def as_dict(self) -> dict:
        d = {"name": self.name, "instance": self.instance,
             "status": "pass" if self.ok else "fail"}
        if not self.ok:
            d["witness"] = self.witness or ""
        return d


def check(name: str, instance: str, ok: bool, witness: str | None = None) -> Check:
    return Check(name, instance, bool(ok), None if ok else witness)


@dataclass
class Report:
    command: str
    config: dict
    records: list[Check] = field(default_factory=list)
    data: dict = field(default_factory=dict)
    timing: dict = field(default_factory=dict)

    def add(self, c: Check) -> Check:
        self.records.append(c)
        return c

    def extend(self, checks) -> None:
        self.records.extend(checks)

    @property
    def failed(self) -> list[Check]:
        return [c for c in self.records if not c.ok]

    def summary(self) -> dict:
        fails = len(self.failed)
        return {"total": len(self.records), "passed": len(self.records) - fails, "failed": fails}

    def as_dict(self, with_timing: bool = False) -> dict:
        d = {"command": self.command, "config": self.config}
        if self.data:
            d["data"] = self.data
        if self.records:
            d["checks"] = [c.as_dict() for c in self.records]
            d["summary"] = self.summary()
        if with_timing:
            d["timing"] = self.timing
        return d

    def to_json(self, with_timing: bool = False) -> str:
        return json.dumps(self.as_dict(with_timing), indent=2, sort_keys=False, ensure_ascii=True) + "\n"

    def to_text(self) -> str:
        lines = [f"# {self.command} {json.dumps(self.config, sort_keys=True)}"]
        if self.data:
            lines.append(json.dumps(self.data, indent=1))
        for c in self.records:
            status = "PASS" if c.ok else "FAIL"
            line = f"{status}  {c.name}  [{c.instance}]"
            if not c.ok and c.witness:
                line += f"  witness: {c.witness}"
            lines.append(line)
        if self.records:
            s = self.summary()
            lines.append(f"{s['passed']}/{s['total']} checks passed")
        for k, v in self.timing.items():
            lines.append(f"time {k}: {v:.2f}s")
        return "\n".join(lines) + "\n"
