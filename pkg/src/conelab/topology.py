"""Finite-resolution views of the space of orderings.

A ball fixes a basic neighbourhood of a cone (the signs it assigns to the
ball).  ``condensed_at_resolution`` finds a conjugate cone with the same
signs on the ball that is still a different cone.
"""

from __future__ import annotations

from fractions import Fraction

from .balls import Ball, ConeRestriction, cayley_ball, hinf_letters, restrict_cone
from .certificate import Certificate, Check, sealed
from .cones import ConeOracle, SignSeqCone, SmirnovCone
from .groups import BSElement, Group, HInfElement, hinf_generator
from .witness import separate_smirnov

__all__ = ["Ball", "ConeRestriction", "cayley_ball", "restrict_cone", "condensed_at_resolution", "critical_rationals", "e0_report"]


def critical_rationals(ball: Ball) -> list[Fraction]:
    """Fixed points of the non-translations in a BS ball, sorted."""
    pts = {g.shift / (1 - g.scale) for g in ball.elements if g.r != 0}
    return sorted(pts)


def smirnov_shift_exponent(cone: SmirnovCone, ball: Ball) -> int:
    """Least t such that no critical rational lies in (alpha, alpha + n**-t)."""
    crit = [q for q in critical_rationals(ball) if q > cone.alpha]
    t = 0
    while True:
        moved = cone.alpha + Fraction(1, cone.n ** t)
        if not crit or crit[0] > moved:
            return t
        t += 1


def translation_word(t: int) -> str:
    """b^-t a b^t, which acts as x -> x + n**-t."""
    return "B" * t + "a" + "b" * t


def resolution_checks(cone: ConeOracle, ball: Ball, h, word, d, claimed_conj, t=None) -> list[Check]:
    conj = cone.conjugate(h)
    checks = [
        Check("conjugator word evaluates to h", cone.group.from_word(word), "=", h),
        Check("conjugate cone hPh^-1", conj, "=", claimed_conj),
    ]
    if isinstance(cone, SmirnovCone):
        shift = BSElement(cone.n, 0, Fraction(1, cone.n ** t))
        checks.append(Check("h translates by n^-t", h, "=", shift))
    for g in ball.elements:
        if g.is_identity():
            continue
        checks.append(Check(f"sign of {ball.word_str(g)} unchanged", conj.sign(g), "=", cone.sign(g)))
    checks.append(Check("hPh^-1 differs from P on the discriminator", cone.sign(d), "!=", conj.sign(d)))
    checks.append(
        Check("discriminator sign in hPh^-1 (direct)", cone.sign(h.inverse() * d * h), "=", conj.sign(d))
    )
    return checks


def condensed_at_resolution(cone: ConeOracle, ball: Ball) -> Certificate:
    if cone.group != ball.group:
        raise ValueError(f"cone on {cone.group} but ball in {ball.group}")
    if isinstance(cone, SmirnovCone):
        t = smirnov_shift_exponent(cone, ball)
        h = BSElement(cone.n, 0, Fraction(1, cone.n ** t))
        conj = cone.conjugate(h)
        d = separate_smirnov(cone.alpha, conj.alpha, cone.n)
        word = translation_word(t)
        witness = {"t": t, "conjugator": h.to_json(), "conjugator_word": word}
    elif isinstance(cone, SignSeqCone):
        m = ball.max_index
        h = hinf_generator(m + 2)
        d = hinf_generator(m + 1)
        conj = cone.conjugate(h)
        t = None
        word = [m + 2]
        witness = {"conjugator": h.to_json(), "conjugator_word": word}
    else:
        raise TypeError(f"no conjugation available for {type(cone).__name__}")
    witness["conjugate_cone"] = conj.to_json()
    witness["discriminator"] = d.to_json()
    return sealed(
        "condensation",
        {"mode": "ball", "cone": cone.to_json(), "ball": ball.spec()},
        witness,
        resolution_checks(cone, ball, h, word, d, conj, t),
    )


def e0_report(cone: SignSeqCone, w: HInfElement, radius: int) -> dict:
    """Flip locality of w P w^-1, and its equivariance on the ball of the
    given radius over x_1, ..., x_{top(w)+1}."""
    conj = cone.conjugate(w)
    changed = cone.differing_positions(conj)
    top = w.top
    ball = cayley_ball(Group("hinf"), hinf_letters(top + 1), radius)
    winv = w.inverse()
    bad = []
    for g in ball.elements:
        if g.is_identity():
            continue
        if conj.sign(g) != cone.sign(winv * g * w):
            bad.append(ball.word_str(g))
    return {
        "cone": cone.to_json(),
        "by": w.to_json(),
        "conjugate": conj.to_json(),
        "changed": changed,
        "changes_below_top": all(i < top for i in changed),
        "ball": ball.spec(),
        "ball_size": len(ball),
        "equivariance_failures": bad,
        "ok": all(i < top for i in changed) and not bad,
    }
