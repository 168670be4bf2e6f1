"""Positive-cone oracles for BS(1,n), Thompson's F and H_inf.

Each oracle answers ``sign(g)`` for every nonidentity ``g`` with POS or NEG.
Orders follow the convention g < h iff g^-1 h is positive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Any

from .enumeration import CANONICAL, Enumeration, cw_rational
from .exactnum import QuadIrr, as_rational, format_rational, quad_affine, quad_cmp
from .groups import BSElement, Group, HInfElement, PLMap, pl_eval, pl_support


class Sign(IntEnum):
    NEG = -1
    POS = 1

    def __str__(self):
        return "pos" if self is Sign.POS else "neg"

    def flip(self) -> "Sign":
        return Sign(-self.value)

    @classmethod
    def parse(cls, text: str) -> "Sign":
        text = text.strip().lower()
        if text in ("pos", "+", "1"):
            return cls.POS
        if text in ("neg", "-", "-1"):
            return cls.NEG
        raise ValueError(f"not a sign: {text!r}")


def _nonidentity(g):
    if g.is_identity():
        raise ValueError("the identity has no sign")


class ConeOracle:
    """Base class; subclasses provide ``sign`` and ``group``."""

    group: Group

    def sign(self, g) -> Sign:
        raise NotImplementedError

    def is_positive(self, g) -> bool:
        return self.sign(g) is Sign.POS

    def less(self, g, h) -> bool:
        """g <_P h."""
        return self.sign(g.inverse() * h) is Sign.POS

    def conjugate(self, h) -> "ConeOracle":
        """The cone h P h^-1."""
        return ConjugatedCone(self, h)

    def to_json(self) -> dict:
        raise NotImplementedError


# -- BS(1,n) ------------------------------------------------------------------


class SmirnovCone(ConeOracle):
    """g is positive iff g(alpha) > alpha, for an irrational alpha."""

    def __init__(self, n: int, alpha: QuadIrr):
        if n < 2:
            raise ValueError("BS(1,n) needs n >= 2")
        if not isinstance(alpha, QuadIrr):
            raise TypeError("Smirnov cones need an irrational parameter")
        self.n = n
        self.alpha = alpha
        self.group = Group("bs", n)

    def __eq__(self, other):
        return isinstance(other, SmirnovCone) and (self.n, self.alpha) == (other.n, other.alpha)

    def __hash__(self):
        return hash(("smirnov", self.n, self.alpha))

    def __repr__(self):
        return f"SmirnovCone(n={self.n}, alpha={self.alpha})"

    def sign(self, g: BSElement) -> Sign:
        return smirnov_sign(self, g)

    def conjugate(self, h: BSElement) -> "SmirnovCone":
        return smirnov_conjugate(self, h)

    def to_json(self) -> dict:
        return {"cone": "smirnov", "n": self.n, "alpha": self.alpha.to_json()}


def smirnov_sign(cone: SmirnovCone, g: BSElement) -> Sign:
    _nonidentity(g)
    if g.n != cone.n:
        raise ValueError(f"element of BS(1,{g.n}) against a cone on BS(1,{cone.n})")
    if g.r == 0:
        return Sign.POS if g.shift > 0 else Sign.NEG
    # g(alpha) - alpha = (n^r - 1)(alpha - q) with q the fixed point
    q = g.shift / (1 - g.scale)
    above = quad_cmp(cone.alpha, q) > 0
    return Sign.POS if above == (g.r > 0) else Sign.NEG


def smirnov_conjugate(cone: SmirnovCone, h: BSElement) -> SmirnovCone:
    if h.n != cone.n:
        raise ValueError("base mismatch")
    return SmirnovCone(cone.n, quad_affine(h.scale, h.shift, cone.alpha))


# -- Thompson's F -------------------------------------------------------------


class EnumCone(ConeOracle):
    """g is positive iff g moves the first enumerated rational it moves upward."""

    def __init__(self, prefix=()):
        self.enumeration = Enumeration(prefix) if prefix else CANONICAL
        self.group = Group("f")

    @property
    def prefix(self):
        return self.enumeration.prefix

    def __eq__(self, other):
        return isinstance(other, EnumCone) and self.prefix == other.prefix

    def __hash__(self):
        return hash(("enum", self.prefix))

    def __repr__(self):
        return f"EnumCone(prefix={[str(q) for q in self.prefix]})"

    def first_moved(self, g: PLMap):
        """(N, r_N): the first enumerated rational moved by g."""
        _nonidentity(g)
        return self.enumeration.first_in(pl_support(g))

    def sign(self, g: PLMap) -> Sign:
        return enum_cone_sign(self, g)

    def to_json(self) -> dict:
        return {"cone": "enum", "prefix": [format_rational(q) for q in self.prefix]}


def enum_rational(i: int):
    return cw_rational(i)


def enum_cone_sign(cone: EnumCone, g: PLMap) -> Sign:
    _, r = cone.first_moved(g)
    return Sign.POS if pl_eval(g, r) > r else Sign.NEG


def enum_cone_sign_scan(cone: EnumCone, g: PLMap, limit: int = 1 << 20) -> Sign:
    """Literal scan r_0, r_1, ...; slow, kept as a cross-check."""
    _nonidentity(g)
    e = cone.enumeration
    for i in range(limit):
        r = e[i]
        v = pl_eval(g, r)
        if v != r:
            return Sign.POS if v > r else Sign.NEG
    raise RuntimeError(f"no moved rational among the first {limit}")


# -- H_inf --------------------------------------------------------------------


class SignSeqCone(ConeOracle):
    """Cone of H_inf from an eventually constant bit sequence eps_1, eps_2, ...

    x_i is positive iff eps_i = 1; a general element takes the sign of its
    top generator, since each H_j is convex.
    """

    def __init__(self, prefix=(), tail: int = 1):
        bits = [int(b) for b in prefix]
        if any(b not in (0, 1) for b in bits) or tail not in (0, 1):
            raise ValueError("bits must be 0 or 1")
        while bits and bits[-1] == tail:
            bits.pop()
        self.prefix = tuple(bits)
        self.tail = tail
        self.group = Group("hinf")

    def bit(self, i: int) -> int:
        """eps_i, 1-based."""
        if i < 1:
            raise ValueError("positions start at 1")
        return self.prefix[i - 1] if i <= len(self.prefix) else self.tail

    def bits(self, upto: int) -> list[int]:
        return [self.bit(i) for i in range(1, upto + 1)]

    def __eq__(self, other):
        return isinstance(other, SignSeqCone) and (self.prefix, self.tail) == (other.prefix, other.tail)

    def __hash__(self):
        return hash(("signseq", self.prefix, self.tail))

    def __repr__(self):
        return f"SignSeqCone(prefix={list(self.prefix)}, tail={self.tail})"

    def sign(self, w: HInfElement) -> Sign:
        return signseq_sign(self, w)

    def conjugate(self, w: HInfElement) -> "SignSeqCone":
        return signseq_conjugate(self, w)

    def differing_positions(self, other: "SignSeqCone") -> list[int]:
        if self.tail != other.tail:
            raise ValueError("sequences with different tails differ infinitely often")
        m = max(len(self.prefix), len(other.prefix))
        return [i for i in range(1, m + 1) if self.bit(i) != other.bit(i)]

    def to_json(self) -> dict:
        return {"cone": "signseq", "prefix": list(self.prefix), "tail": self.tail}


def signseq_sign(cone: SignSeqCone, w: HInfElement) -> Sign:
    _nonidentity(w)
    j = w.top
    up = w.exponents[j - 1] > 0
    return Sign.POS if up == (cone.bit(j) == 1) else Sign.NEG


def signseq_conjugate(cone: SignSeqCone, w: HInfElement) -> SignSeqCone:
    """w P w^-1: every letter x_j^{+-1} with j >= 2 flips eps_{j-1}.

    The letters of the normal form's x_j block flip eps_{j-1} once each, so
    only the parity of a_j matters.
    """
    m = max(len(cone.prefix), w.top)
    bits = cone.bits(m)
    for j in range(2, w.top + 1):
        if w.exponents[j - 1] & 1:
            bits[j - 2] ^= 1
    return SignSeqCone(bits, cone.tail)


def extend_prefix_cone(prefix, tail: int) -> SignSeqCone:
    """Extend a cone on H_j (given by its generator signs) to H_inf."""
    return SignSeqCone(prefix, tail)


# -- generic ------------------------------------------------------------------


class ConjugatedCone(ConeOracle):
    """h P h^-1 by definition: sign(g) = sign_P(h^-1 g h)."""

    def __init__(self, base: ConeOracle, h):
        self.base = base
        self.h = h
        self.h_inv = h.inverse()
        self.group = base.group

    def sign(self, g) -> Sign:
        return self.base.sign(self.h_inv * g * self.h)

    def to_json(self) -> dict:
        return {"cone": "conjugate", "base": self.base.to_json(), "by": self.h.to_json()}


class FlippedCone(ConeOracle):
    """A deliberately broken oracle: ``base`` with the signs of ``flipped`` reversed."""

    def __init__(self, base: ConeOracle, flipped):
        self.base = base
        self.flipped = set(flipped)
        self.group = base.group

    def sign(self, g) -> Sign:
        s = self.base.sign(g)
        return s.flip() if g in self.flipped else s


def cone_from_json(doc) -> ConeOracle:
    kind = doc.get("cone")
    if kind == "smirnov":
        return SmirnovCone(int(doc["n"]), QuadIrr.from_json(doc["alpha"]))
    if kind == "enum":
        return EnumCone([as_rational(q) for q in doc.get("prefix", [])])
    if kind == "signseq":
        return SignSeqCone(doc.get("prefix", []), int(doc.get("tail", 1)))
    raise ValueError(f"unknown cone kind {kind!r}")


@dataclass
class Report:
    """Outcome of a cone-axiom check on a ball."""

    checked_elements: int = 0
    checked_products: int = 0
    violations: list[dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checked_elements": self.checked_elements,
            "checked_products": self.checked_products,
            "violations": self.violations,
        }


def cone_axiom_check(oracle: ConeOracle, ball) -> Report:
    """Trichotomy on every nonidentity ball element and P*P ⊆ P on the ball."""
    report = Report()
    signs = {}
    for g in ball.elements:
        if g.is_identity():
            continue
        signs[g] = oracle.sign(g)
    report.checked_elements = len(signs)
    for g, s in signs.items():
        gi = g.inverse()
        si = signs.get(gi)
        if si is None:
            si = oracle.sign(gi)
        if s == si:
            report.violations.append(
                {"axiom": "trichotomy", "element": ball.word_str(g), "sign": str(s), "inverse_sign": str(si)}
            )
    positives = [g for g, s in signs.items() if s is Sign.POS]
    for g in positives:
        for h in positives:
            k = g * h
            sk = signs.get(k)
            if sk is None:
                if k.is_identity() and k in ball.index:
                    report.checked_products += 1
                    report.violations.append(
                        {"axiom": "semigroup", "left": ball.word_str(g), "right": ball.word_str(h), "product": "id"}
                    )
                continue
            report.checked_products += 1
            if sk is not Sign.POS:
                report.violations.append(
                    {"axiom": "semigroup", "left": ball.word_str(g), "right": ball.word_str(h),
                     "product": ball.word_str(k)}
                )
    return report
