"""Report documents: JSON (canonical), CSV and plain text renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

from . import __version__
from .classify import ClassificationRecord, classify_ideal
from .errors import InputError
from .ideals import Ideal, enumerate_ideals
from .rings import FiniteRing, ring_queries

FORMAT_VERSION = 1
VERDICT_FIELDS = ("is_prime", "is_maximal", "is_radical", "is_sdf", "is_weakly_sdf", "is_weakly_prime")
WITNESS_KINDS = ("prime", "sdf", "weakly_sdf", "weakly_prime")


def _elem(R: FiniteRing, index: int, raw: bool) -> Any:
    return int(index) if raw else R.render(index)


def ring_summary(R: FiniteRing) -> dict:
    q = ring_queries(R)
    return {
        "label": R.label,
        "name": R.name,
        "order": R.order,
        "characteristic": q["characteristic"],
        "reduced": q["is_reduced"],
        "vnr": q["is_von_neumann_regular"],
        "boolean": q["is_boolean"],
        "local": q["is_local"],
        "field": q["is_field"],
        "two": R.two_status,
    }


def record_to_dict(rec: ClassificationRecord, raw: bool = False) -> dict:
    I = rec.ideal
    R = I.ring
    out = {
        "name": I.short_name(),
        "generators": [_elem(R, g, raw) for g in I.generators],
        "indices": [int(m) for m in I.members],
        "members": I.rendered_members(raw),
        "size": I.size,
        "is_proper": rec.is_proper,
        "quotient_char": rec.quotient_char,
        "fast_verdicts": dict(rec.fast_verdicts),
        "witnesses": {k: [_elem(R, w, raw) for w in v] for k, v in rec.witnesses.items()},
        "disagreements": list(rec.disagreements),
    }
    for name in VERDICT_FIELDS:
        out[name] = getattr(rec, name)
    return out


@dataclass
class ReportDocument:
    mode: str
    format_version: int = FORMAT_VERSION
    tool_version: str = __version__
    ring: dict | None = None
    ideals: list = field(default_factory=list)
    properties: list = field(default_factory=list)
    corpus: dict | None = None

    KEYS = ("mode", "format_version", "tool_version", "ring", "ideals", "properties", "corpus")

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.KEYS}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"report is not valid JSON: {exc}") from exc
        if not isinstance(data, dict) or set(data) != set(cls.KEYS):
            raise InputError(f"report must be an object with keys {sorted(cls.KEYS)}")
        if data["format_version"] != FORMAT_VERSION:
            raise InputError(f"unsupported report format_version {data['format_version']!r}")
        return cls(**data)

    @property
    def failed(self) -> list[str]:
        return [p["property_id"] for p in self.properties if p["status"] == "fail"]

    @property
    def disagreements(self) -> list[str]:
        return [i["name"] for i in self.ideals if i["disagreements"]]

    # --- other encodings ------------------------------------------------------

    def to_csv(self) -> str:
        if self.mode == "verify":
            return self._properties_csv()
        criteria = sorted({k for i in self.ideals for k in i["fast_verdicts"]})
        header = ["name", "generators", "size", "is_proper", *VERDICT_FIELDS, "quotient_char"]
        header += [f"fast:{c}" for c in criteria] + [f"witness:{k}" for k in WITNESS_KINDS]
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for i in self.ideals:
            row = [i["name"], _compact(i["generators"]), i["size"], _cell(i["is_proper"])]
            row += [_cell(i[f]) for f in VERDICT_FIELDS] + [_cell(i["quotient_char"])]
            row += [_criterion_cell(i["fast_verdicts"], c) for c in criteria]
            row += [_compact(i["witnesses"][k]) if k in i["witnesses"] else "" for k in WITNESS_KINDS]
            w.writerow(row)
        return buf.getvalue()

    def _properties_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["property_id", "status", "checked_instances", "sampled", "counterexample"])
        for p in self.properties:
            cex = "" if p["counterexample"] is None else _compact(p["counterexample"])
            w.writerow([p["property_id"], p["status"], p["checked_instances"], _cell(p["sampled"]), cex])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        if self.ring is not None:
            r = self.ring
            flags = [k for k in ("reduced", "vnr", "boolean", "local", "field") if r[k]]
            lines.append(f"{r['name']}  [{r['label']}]  order {r['order']}, char {r['characteristic']}, "
                         f"2 is {r['two']}; {', '.join(flags) or 'no special flags'}")
        for i in self.ideals:
            if not i["is_proper"]:
                lines.append(f"  {i['name']:<24} whole ring")
                continue
            marks = " ".join(f.removeprefix("is_") if i[f] else "-" for f in VERDICT_FIELDS)
            lines.append(f"  {i['name']:<24} size {i['size']:<5} char(R/I)={i['quotient_char']:<4} {marks}")
            for k, v in sorted(i["witnesses"].items()):
                lines.append(f"      not {k}: a={_compact(v[0])} b={_compact(v[1])}")
            fv = sorted(i["fast_verdicts"].items())
            applied = ", ".join(f"{k}={v}" for k, v in fv if v is not None) or "none"
            skipped = ", ".join(k for k, v in fv if v is None) or "none"
            lines.append(f"      criteria: {applied}; inapplicable: {skipped}")
            if i["disagreements"]:
                lines.append(f"      DISAGREEMENT: {', '.join(i['disagreements'])}")
        for p in self.properties:
            tag = " (sampled)" if p["sampled"] else ""
            lines.append(f"{p['status']:<13} {p['property_id']:<40} {p['checked_instances']:>7}{tag}")
            if p["counterexample"]:
                lines.append(f"    counterexample: {_compact(p['counterexample'])}")
        if self.corpus is not None:
            passed = sum(p["status"] == "pass" for p in self.properties)
            lines.append(f"{self.corpus['ring_count']} rings, {len(self.properties)} properties, "
                         f"{passed} pass, {len(self.failed)} fail")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise InputError(f"unknown format {fmt!r}")


def _compact(value) -> str:
    return json.dumps(value, separators=(",", ":"), sort_keys=True)


def _criterion_cell(verdicts: dict, name: str) -> str:
    if name not in verdicts:
        return ""
    return "inapplicable" if verdicts[name] is None else _cell(verdicts[name])


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def classify_report(R: FiniteRing, ideals: list[Ideal] | None = None, raw: bool = False) -> ReportDocument:
    ideals = enumerate_ideals(R) if ideals is None else ideals
    records = [classify_ideal(R, I, strict=False) for I in ideals]
    return ReportDocument(
        mode="classify",
        ring=ring_summary(R),
        ideals=[record_to_dict(rec, raw) for rec in records],
    )


def verify_report(results, spec, ring_count: int) -> ReportDocument:
    return ReportDocument(
        mode="verify",
        properties=[r.to_dict() for r in results],
        corpus={"spec": spec.to_dict(), "ring_count": ring_count},
    )
