"""Serializable classification reports (JSON and plain text)."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

from .spaceform import SpaceFormInstance, Verdict, psc_exists

FIELDS = (
    "n", "group", "order", "verdict", "theorem", "witness", "orientable", "spin",
    "pin_plus", "pin_minus", "psc", "classes_considered", "trace",
)


@dataclass
class Report:
    n: int
    group: str
    order: int
    verdict: str
    theorem: str | None
    witness: list[str] | None
    orientable: bool
    spin: bool
    pin_plus: bool | None
    pin_minus: bool | None
    psc: str | None
    classes_considered: int
    trace: list[dict[str, str]] = field(default_factory=list)

    @classmethod
    def from_verdict(cls, inst: SpaceFormInstance, verdict: Verdict, group_name: str | None = None) -> "Report":
        ch = verdict.characteristic
        psc = verdict.psc
        if psc is None and inst.n >= 5:
            psc = psc_exists(inst)
        if ch is not None:
            orientable, spin = ch.orientable, ch.spin
            pin_plus, pin_minus = ch.pin_plus, ch.pin_minus
        else:
            orientable = inst.odd or inst.group.order == 1
            spin, pin_plus, pin_minus = False, None, None
        return cls(
            n=inst.n,
            group=group_name or inst.group.name,
            order=inst.group.order,
            verdict=verdict.outcome.value,
            theorem=verdict.theorem,
            witness=[w.label for w in verdict.witnesses] or None,
            orientable=orientable,
            spin=spin,
            pin_plus=pin_plus,
            pin_minus=pin_minus,
            psc=psc,
            classes_considered=verdict.classes_considered,
            trace=[{"step": t.step, "cite": t.cite, "result": t.result} for t in verdict.trace],
        )

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        return {k: d[k] for k in FIELDS}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Report":
        missing = set(FIELDS) - set(data)
        if missing:
            raise ValueError(f"report is missing fields: {sorted(missing)}")
        return cls(**{k: data[k] for k in FIELDS})

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [
            f"M^{self.n} with fundamental group {self.group} (order {self.order})",
            f"verdict: {self.verdict}" + (f" via {self.theorem}" if self.theorem else ""),
        ]
        pins = ""
        if self.pin_plus is not None:
            pins = f", pin+={_yn(self.pin_plus)}, pin-={_yn(self.pin_minus)}"
        lines.append(f"orientable={_yn(self.orientable)}, spin={_yn(self.spin)}{pins}")
        lines.append(f"psc: {self.psc if self.psc is not None else 'n/a'}")
        if self.classes_considered:
            lines.append(f"extension classes considered: {self.classes_considered}")
        if self.witness:
            lines.append("witnesses: " + ", ".join(self.witness))
        lines.append("trace:")
        width = max((len(t["step"]) for t in self.trace), default=0)
        for i, t in enumerate(self.trace, start=1):
            lines.append(f"  {i:2d}. {t['step']:<{width}}  [{t['cite']}]  {t['result']}")
        return "\n".join(lines) + "\n"


def _yn(flag: bool | None) -> str:
    return "yes" if flag else "no"
