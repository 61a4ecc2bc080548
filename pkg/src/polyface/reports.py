"""Check reports and their JSON / CSV serialization."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

CSV_COLUMNS = ("d", "s", "i", "m", "k", "lhs", "rhs", "slack")


@dataclass
class CheckReport:
    """Result of a property check or bound verification.

    ``passed`` is derived: a report passes exactly when it has no witnesses.
    A ``skipped`` report is one whose hypothesis did not apply; it passes
    vacuously and says why in ``notes``.
    """

    check: str
    witnesses: list = field(default_factory=list)
    notes: str = ""
    params: dict = field(default_factory=dict)
    seed: int | None = None
    skipped: bool = False
    data: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        out = {
            "check": self.check,
            "params": jsonable(self.params),
            "passed": self.passed,
            "witnesses": jsonable(self.witnesses),
        }
        if self.seed is not None:
            out["seed"] = self.seed
        if self.notes:
            out["notes"] = self.notes
        if self.skipped:
            out["skipped"] = True
        if self.data:
            out["data"] = jsonable(self.data)
        return out

    def summary(self) -> str:
        status = "SKIP" if self.skipped else ("PASS" if self.passed else "FAIL")
        extra = f" ({self.notes})" if self.notes else ""
        line = f"{status} {self.check}{extra}"
        if self.witnesses:
            shown = ", ".join(str(w) for w in self.witnesses[:5])
            more = f" ... {len(self.witnesses) - 5} more" if len(self.witnesses) > 5 else ""
            line += f"\n  witnesses: {shown}{more}"
        return line


def row(d, k, lhs, rhs, s=None, i=None, m=None) -> dict:
    """One table row; ``slack`` is ``lhs - rhs``."""
    return {"d": d, "s": s, "i": i, "m": m, "k": k, "lhs": lhs, "rhs": rhs, "slack": lhs - rhs}


def jsonable(obj):
    """Convert sets, tuples and objects with ``to_json`` into plain JSON data."""
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        items = [jsonable(x) for x in obj]
        return sorted(items, key=lambda x: json.dumps(x, sort_keys=True))
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    return str(obj)


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2) + "\n"


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({c: ("" if r.get(c) is None else int(r[c])) for c in CSV_COLUMNS})
    return buf.getvalue()
