"""Certificates: a claim kind, its inputs, the witness and a check transcript.

A check compares two exact values.  The transcript is regenerated from
inputs + witness on verification, so it doubles as a tamper seal: any edit
to a check, the witness or the inputs shows up as a mismatch or a failed
comparison.  The first check restates inputs and witness, so editing either is
caught even when the edited values would still pass every other check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .cones import Sign
from .exactnum import QuadIrr, format_rational

KINDS = ("separator", "bs-freepart", "condensation", "good-function", "f-separator")

_RELS = {
    "<": lambda a, b: a < b,
    ">": lambda a, b: a > b,
    "=": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
}


def to_plain(value) -> Any:
    """JSON form of an exact value."""
    if isinstance(value, Sign):
        return str(value)
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, QuadIrr):
        return str(value)
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, dict):
        return {k: to_plain(v) for k, v in value.items()}
    raise TypeError(f"cannot serialize {value!r}")


@dataclass
class Check:
    claim: str
    lhs: Any
    rel: str
    rhs: Any

    def holds(self) -> bool:
        if self.lhs is None or self.rhs is None:
            return self.rel == "=" and self.lhs is self.rhs
        try:
            return bool(_RELS[self.rel](self.lhs, self.rhs))
        except TypeError:
            return False

    def to_json(self) -> dict:
        return {"claim": self.claim, "lhs": to_plain(self.lhs), "rel": self.rel, "rhs": to_plain(self.rhs)}


@dataclass
class Certificate:
    kind: str
    inputs: dict
    witness: dict
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.holds() if isinstance(c, Check) else True for c in self.checks)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "inputs": self.inputs,
            "witness": self.witness,
            "checks": [c.to_json() if isinstance(c, Check) else c for c in self.checks],
        }

    def dumps(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json(), indent=indent)

    @classmethod
    def from_json(cls, doc) -> "Certificate":
        if not isinstance(doc, dict):
            raise ValueError("certificate must be a JSON object")
        missing = [k for k in ("kind", "inputs", "witness", "checks") if k not in doc]
        if missing:
            raise ValueError(f"certificate is missing {', '.join(missing)}")
        if doc["kind"] not in KINDS:
            raise ValueError(f"unknown certificate kind {doc['kind']!r}")
        if not isinstance(doc["checks"], list):
            raise ValueError("checks must be a list")
        return cls(doc["kind"], doc["inputs"], doc["witness"], list(doc["checks"]))


def seal(inputs: dict, witness: dict) -> Check:
    doc = {"inputs": inputs, "witness": witness}
    return Check("inputs and witness as certified", doc, "=", doc)


def sealed(kind: str, inputs: dict, witness: dict, checks) -> Certificate:
    return Certificate(kind, inputs, witness, [seal(inputs, witness)] + list(checks))
