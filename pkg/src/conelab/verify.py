"""Stand-alone certificate verification.

Nothing from generation is reused: the transcript is rebuilt from the
certificate's own inputs and witness, every comparison is re-evaluated
exactly, and the result must match the stored transcript entry for entry.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .balls import ball_from_spec
from .certificate import Certificate, seal
from .cones import EnumCone, cone_from_json
from .exactnum import QuadIrr, as_rational
from .groups import BSElement, PLMap, element_from_json
from .topology import resolution_checks
from .witness import (
    condensation_checks,
    f_separator_checks,
    freepart_checks,
    good_function_checks,
    interval_from_json,
    separator_checks,
)


@dataclass
class Verdict:
    ok: bool
    reason: str

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "reason": self.reason}


def _separator(inputs, witness):
    n = int(inputs["n"])
    g = BSElement.from_json(witness["g"])
    if g.n != n:
        raise ValueError("witness lives in a different BS(1,n)")
    return separator_checks(
        n, QuadIrr.from_json(inputs["alpha"]), QuadIrr.from_json(inputs["beta"]), g, str(witness["word"])
    )


def _freepart(inputs, witness):
    n = int(inputs["n"])
    h = BSElement.from_json(inputs["h"])
    d = BSElement.from_json(witness["discriminator"])
    if h.n != n or d.n != n:
        raise ValueError("elements live in a different BS(1,n)")
    return freepart_checks(n, QuadIrr.from_json(inputs["alpha"]), h, QuadIrr.from_json(witness["image"]), d)


def _condensation(inputs, witness):
    cone = cone_from_json(inputs["cone"])
    h = element_from_json(witness["conjugator"])
    claimed = cone_from_json(witness["conjugate_cone"])
    d = witness.get("discriminator")
    d = element_from_json(d) if d is not None else None
    mode = inputs.get("mode")
    if mode == "positives":
        positives = [element_from_json(g) for g in inputs["positives"]]
        if not positives:
            raise ValueError("no positive elements listed")
        return condensation_checks(cone, positives, h, d, claimed)
    if mode == "ball":
        if d is None:
            raise ValueError("ball-mode certificates need a discriminator")
        ball = ball_from_spec(inputs["ball"])
        if ball.spec() != inputs["ball"]:
            raise ValueError("ball spec is not in canonical form")
        word = witness["conjugator_word"]
        t = witness.get("t")
        return resolution_checks(cone, ball, h, word, d, claimed, None if t is None else int(t))
    raise ValueError(f"unknown condensation mode {mode!r}")


def _good_function(inputs, witness):
    S = [as_rational(s) for s in inputs["S"]]
    x, y = as_rational(inputs["x"]), as_rational(inputs["y"])
    I, J = interval_from_json(witness["I"]), interval_from_json(witness["J"])
    g = PLMap.from_json(witness["g"])
    return good_function_checks(S, x, y, I, J, int(witness["depth"]), g)


def _f_separator(inputs, witness):
    cone = cone_from_json(inputs["cone"])
    if not isinstance(cone, EnumCone):
        raise ValueError("f-separator certificates need an enumeration cone")
    h = PLMap.from_json(inputs["h"])
    if h.is_identity():
        raise ValueError("h is the identity")
    S = witness.get("S")
    literal = S == "literal"
    I, J = interval_from_json(witness["I"]), interval_from_json(witness["J"])
    return f_separator_checks(
        cone, h, int(witness["N"]), as_rational(witness["x"]), as_rational(witness["y"]),
        I, J, PLMap.from_json(witness["g"]), literal,
    )


_REBUILD = {
    "separator": _separator,
    "bs-freepart": _freepart,
    "condensation": _condensation,
    "good-function": _good_function,
    "f-separator": _f_separator,
}


def verify_certificate(cert) -> Verdict:
    """Re-check a certificate (object, dict or JSON text) from scratch."""
    try:
        if isinstance(cert, str):
            cert = json.loads(cert)
        if isinstance(cert, Certificate):
            cert = cert.to_json()
        cert = Certificate.from_json(cert)
        checks = [seal(cert.inputs, cert.witness)] + _REBUILD[cert.kind](cert.inputs, cert.witness)
    except (KeyError, ValueError, TypeError, ZeroDivisionError, AttributeError) as exc:
        return Verdict(False, f"malformed certificate: {exc}")
    for c in checks:
        if not c.holds():
            doc = c.to_json()
            return Verdict(False, f"check failed: {c.claim}: {doc['lhs']} {c.rel} {doc['rhs']}")
    expected = [c.to_json() for c in checks]
    if len(expected) != len(cert.checks):
        return Verdict(False, f"transcript has {len(cert.checks)} checks, expected {len(expected)}")
    for i, (want, got) in enumerate(zip(expected, cert.checks)):
        if want != got:
            return Verdict(False, f"transcript mismatch at check {i} ({want['claim']})")
    return Verdict(True, f"{len(expected)} checks passed")


__all__ = ["Verdict", "verify_certificate"]
