"""Structured outcome of a verification run, serializable to JSON."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .core import format_rational

__all__ = ["PASS", "FAIL", "SKIPPED", "VERDICTS", "Report", "REPORT_SCHEMA"]

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"
VERDICTS = (PASS, FAIL, SKIPPED)

_FRACTION_RE = re.compile(r"^-?\d+/\d+$")

#: JSON schema of :meth:`Report.to_dict` output.
REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["experiment", "params", "measured", "verdict", "seed"],
    "additionalProperties": False,
    "properties": {
        "experiment": {"type": "string"},
        "params": {"type": "object"},
        "measured": {
            "type": "object",
            "additionalProperties": {
                "anyOf": [
                    {"type": "integer"},
                    {"type": "boolean"},
                    {"type": "string"},
                    {"type": "null"},
                    {"type": "array"},
                    {"type": "object"},
                ]
            },
        },
        "verdict": {"enum": [PASS, FAIL, SKIPPED, None]},
        "seed": {"type": ["integer", "null"]},
        "counterexample": {"type": ["string", "null"]},
        "failures": {"type": "array", "items": {"type": "string"}},
        "notes": {"type": "array", "items": {"type": "string"}},
    },
}


def _to_json_value(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, int):
        return int(value)
    if isinstance(value, dict):
        return {str(k): _to_json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_to_json_value(v) for v in value]
    if hasattr(value, "item"):  # numpy scalar
        return _to_json_value(value.item())
    return value


def _from_json_value(value: Any) -> Any:
    if isinstance(value, str) and _FRACTION_RE.match(value):
        return Fraction(value)
    if isinstance(value, dict):
        return {k: _from_json_value(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_from_json_value(v) for v in value]
    return value


@dataclass
class Report:
    """Outcome of one experiment.

    ``verdict`` is ``None`` for purely exploratory runs.  A ``FAIL`` carries a
    ``counterexample`` (a hypergraph in ``.hgr`` text form) or at least one
    entry in ``failures``.
    """

    experiment: str
    params: dict[str, Any] = field(default_factory=dict)
    measured: dict[str, Any] = field(default_factory=dict)
    verdict: str | None = None
    seed: int | None = None
    counterexample: str | None = None
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.verdict not in VERDICTS and self.verdict is not None:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def fail(self, message: str, counterexample: str | None = None) -> None:
        self.verdict = FAIL
        self.failures.append(message)
        if counterexample is not None and self.counterexample is None:
            self.counterexample = counterexample

    def to_dict(self) -> dict[str, Any]:
        out = {
            "experiment": self.experiment,
            "params": _to_json_value(self.params),
            "measured": _to_json_value(self.measured),
            "verdict": self.verdict,
            "seed": self.seed,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.failures:
            out["failures"] = list(self.failures)
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def to_json(self, **kwargs: Any) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Report":
        return cls(
            experiment=data["experiment"],
            params=_from_json_value(data.get("params", {})),
            measured=_from_json_value(data.get("measured", {})),
            verdict=data.get("verdict"),
            seed=data.get("seed"),
            counterexample=data.get("counterexample"),
            failures=list(data.get("failures", [])),
            notes=list(data.get("notes", [])),
        )

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))
