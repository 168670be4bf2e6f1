"""Exact numbers: rationals, n-adic rationals and real quadratic irrationals.

Everything here is exact.  Comparisons between quadratic irrationals and
rationals are decided by isolating the radical and squaring, so no floating
point value is ever produced.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import total_ordering
from math import gcd, isqrt

Rational = Fraction


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, NAdic):
        return x.value
    raise TypeError(f"cannot interpret {x!r} as a rational")


_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    m = _RAT_RE.match(text)
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(m.group(1)), den)


def format_rational(x: Fraction) -> str:
    """Serialize as "num/den" (always with a denominator)."""
    x = as_rational(x)
    return f"{x.numerator}/{x.denominator}"


# -- n-adic rationals ---------------------------------------------------------


@dataclass(frozen=True)
class NAdic:
    """The number s / n**t, kept in lowest terms (t == 0 or n does not divide s)."""

    n: int
    s: int
    t: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n-adic base must be >= 2")
        if self.t < 0:
            raise ValueError("n-adic exponent must be >= 0")
        if self.t and (self.s % self.n == 0):
            raise ValueError("NAdic not in lowest terms; use nadic_normalize")

    @property
    def value(self) -> Fraction:
        return Fraction(self.s, self.n ** self.t)

    @classmethod
    def from_rational(cls, n: int, x) -> "NAdic":
        x = as_rational(x)
        den = x.denominator
        t = 0
        while den % n == 0 and den > 1:
            den //= n
            t += 1
        if den != 1:
            # denominators like 2 for n = 4: scale up to a power of n
            d, t2 = x.denominator, 0
            while (n ** t2) % d:
                t2 += 1
                if t2 > 4 * d.bit_length() + 64:
                    raise ValueError(f"{x} is not an n-adic rational for n={n}")
            return nadic_normalize(n, x.numerator * (n ** t2 // d), t2)
        return nadic_normalize(n, x.numerator, t)

    def to_json(self) -> dict:
        return {"n": self.n, "s": self.s, "t": self.t}

    @classmethod
    def from_json(cls, doc) -> "NAdic":
        return nadic_normalize(int(doc["n"]), int(doc["s"]), int(doc["t"]))

    def __str__(self):
        return format_rational(self.value)


def nadic_normalize(n: int, s: int, t: int) -> NAdic:
    if n < 2 or t < 0:
        raise ValueError("need n >= 2 and t >= 0")
    if s == 0:
        return NAdic(n, 0, 0)
    while t > 0 and s % n == 0:
        s //= n
        t -= 1
    return NAdic(n, s, t)


def Dyadic(s: int, t: int) -> NAdic:
    return nadic_normalize(2, s, t)


# -- quadratic irrationals ----------------------------------------------------


def _squarefree_split(d: int) -> tuple[int, int]:
    """Return (k, e) with d == k*k*e and e squarefree."""
    k, e = 1, d
    f = 2
    while f * f <= e:
        while e % (f * f) == 0:
            e //= f * f
            k *= f
        f += 1
    return k, e


def surd_sign(a: int, b: int, d: int) -> int:
    """Sign of a + b*sqrt(d) for d > 0 not a perfect square."""
    if b == 0:
        return (a > 0) - (a < 0)
    sb = 1 if b > 0 else -1
    if a == 0 or (a > 0) == (b > 0):
        return sb
    # opposite signs: the larger magnitude wins; a*a == b*b*d is impossible
    return (1 if a > 0 else -1) if a * a > b * b * d else sb


@total_ordering
class QuadIrr:
    """(p + q*sqrt(d)) / r with q != 0, d squarefree >= 2, r > 0, gcd(p, q, r) == 1."""

    __slots__ = ("p", "q", "d", "r")

    def __init__(self, p: int, q: int, d: int, r: int = 1):
        if q == 0:
            raise ValueError("q must be nonzero (value would be rational)")
        if r == 0:
            raise ValueError("r must be nonzero")
        if d < 2:
            raise ValueError("d must be >= 2")
        k, e = _squarefree_split(d)
        if e == 1:
            raise ValueError(f"d={d} is a perfect square")
        q *= k
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(p, q), r)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)
        object.__setattr__(self, "d", e)
        object.__setattr__(self, "r", r // g)

    def __setattr__(self, name, value):
        raise AttributeError("QuadIrr is immutable")

    def _key(self):
        return (self.p, self.q, self.d, self.r)

    def __eq__(self, other):
        if isinstance(other, QuadIrr):
            return self._key() == other._key()
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash(("QuadIrr",) + self._key())

    def __lt__(self, other):
        if isinstance(other, QuadIrr):
            return quad_cmp_quad(self, other) is Ordering.LESS
        if isinstance(other, (int, Fraction)):
            return quad_cmp(self, Fraction(other)) is Ordering.LESS
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, QuadIrr):
            return quad_cmp_quad(self, other) is Ordering.GREATER
        if isinstance(other, (int, Fraction)):
            return quad_cmp(self, Fraction(other)) is Ordering.GREATER
        return NotImplemented

    def __neg__(self):
        return QuadIrr(-self.p, -self.q, self.d, self.r)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return quad_affine(Fraction(1), Fraction(other), self)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return quad_affine(Fraction(1), -Fraction(other), self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return quad_affine(Fraction(other), Fraction(0), self)
        return NotImplemented

    __rmul__ = __mul__

    def __floor__(self) -> int:
        s = self.q * self.q * self.d
        k = isqrt(s)
        # q*sqrt(d) lies strictly between two integers
        num_floor = self.p + (k if self.q > 0 else -k - 1)
        return num_floor // self.r

    def __float__(self):
        # display only; never used in a decision
        return (self.p + self.q * self.d ** 0.5) / self.r

    def __repr__(self):
        return f"QuadIrr({self.p}, {self.q}, {self.d}, {self.r})"

    def __str__(self):
        if self.q == 1:
            rad = f"sqrt({self.d})"
        elif self.q == -1:
            rad = f"-sqrt({self.d})"
        else:
            rad = f"{self.q}*sqrt({self.d})"
        if self.p:
            body = f"{self.p}{'+' if self.q > 0 else ''}{rad}"
        else:
            body = rad
        if self.r == 1:
            return body
        return f"({body})/{self.r}"

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "d": self.d, "r": self.r}

    @classmethod
    def from_json(cls, doc) -> "QuadIrr":
        if isinstance(doc, str):
            return parse_quadirr(doc)
        return cls(int(doc["p"]), int(doc["q"]), int(doc["d"]), int(doc["r"]))


def quad_cmp(x: QuadIrr, y) -> Ordering:
    """Order of the irrational x against the rational y; never EQUAL."""
    y = as_rational(y)
    # x - y = (p*den - num*r + q*den*sqrt(d)) / (r*den), and r*den > 0
    a = x.p * y.denominator - y.numerator * x.r
    b = x.q * y.denominator
    return Ordering(surd_sign(a, b, x.d))


def quad_cmp_quad(x: QuadIrr, y: QuadIrr) -> Ordering:
    if x.d == y.d:
        # common radical: compare (p1*r2 - p2*r1) + (q1*r2 - q2*r1) sqrt(d) with 0
        a = x.p * y.r - y.p * x.r
        b = x.q * y.r - y.q * x.r
        if b == 0:
            return Ordering((a > 0) - (a < 0))
        return Ordering(surd_sign(a, b, x.d))
    # sign of A + B sqrt(d1) - C sqrt(d2)
    A = x.p * y.r - y.p * x.r
    B = x.q * y.r
    C = y.q * x.r
    left = surd_sign(A, B, x.d)
    right = 1 if C > 0 else -1
    if left != right:
        return Ordering(1 if left > right else -1)
    # same sign: compare squares, A^2 + B^2 d1 + 2AB sqrt(d1) vs C^2 d2
    sq = surd_sign(A * A + B * B * x.d - C * C * y.d, 2 * A * B, x.d)
    return Ordering(sq if left > 0 else -sq)


def quad_affine(scale, shift, x: QuadIrr) -> QuadIrr:
    """scale*x + shift, canonicalized."""
    scale, shift = as_rational(scale), as_rational(shift)
    if scale == 0:
        raise ValueError("scale must be nonzero")
    a, b = scale.numerator, scale.denominator
    e, f = shift.numerator, shift.denominator
    return QuadIrr(a * f * x.p + e * b * x.r, a * f * x.q, x.d, b * f * x.r)


_SQRT = r"(?:(?P<q>[+-]?\d*)\s*\*?\s*)?sqrt\(\s*(?P<d>\d+)\s*\)"
_QUAD_RE = re.compile(
    r"^\s*(?P<open>\()?\s*(?:(?P<p>[+-]?\d+)\s*(?=[+-]))?\s*" + _SQRT +
    r"\s*(?(open)\))\s*(?:/\s*(?P<r>\d+))?\s*$"
)


def parse_quadirr(text: str) -> QuadIrr:
    """Parse "sqrt(d)", "p+q*sqrt(d)", "(p+q*sqrt(d))/r" and similar."""
    m = _QUAD_RE.match(text.replace(" ", ""))
    if not m:
        raise ValueError(f"not a quadratic irrational: {text!r}")
    qtxt = m.group("q") or ""
    if qtxt in ("", "+"):
        q = 1
    elif qtxt == "-":
        q = -1
    else:
        q = int(qtxt)
    p = int(m.group("p") or 0)
    r = int(m.group("r") or 1)
    if r == 0:
        raise ValueError("zero denominator")
    return QuadIrr(p, q, int(m.group("d")), r)


def parse_real(text: str):
    """A quadratic irrational or a rational, whichever the text denotes."""
    if "sqrt" in text:
        return parse_quadirr(text)
    return parse_rational(text)
