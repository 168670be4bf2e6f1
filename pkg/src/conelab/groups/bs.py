"""BS(1,n) = <a, b | b a b^-1 = a^n> acting on the line by affine maps.

a acts as x -> x + 1 and b as x -> n x, so every element is x -> n**r x + c
with c an n-adic rational.  Words compose left letter outermost.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

from ..exactnum import NAdic, QuadIrr, as_rational, quad_affine


class BSElement:
    __slots__ = ("n", "r", "_c", "_hash")

    def __init__(self, n: int, r: int, c):
        if n < 2:
            raise ValueError("BS(1,n) needs n >= 2")
        c = c.value if isinstance(c, NAdic) else as_rational(c)
        # c must lie in Z[1/n]
        den = c.denominator
        while den > 1:
            g = math.gcd(den, n)
            if g == 1:
                raise ValueError(f"shift {c} is not an n-adic rational for n={n}")
            den //= g
        self.n = n
        self.r = r
        self._c = c
        self._hash = None

    @property
    def c(self) -> NAdic:
        return NAdic.from_rational(self.n, self._c)

    @property
    def shift(self) -> Fraction:
        return self._c

    @property
    def scale(self) -> Fraction:
        return Fraction(self.n) ** self.r

    def is_identity(self) -> bool:
        return self.r == 0 and self._c == 0

    def __call__(self, x):
        """rho(g)(x) for rational or quadratic-irrational x."""
        if isinstance(x, QuadIrr):
            return quad_affine(self.scale, self._c, x)
        return self.scale * as_rational(x) + self._c

    def __mul__(self, other: "BSElement") -> "BSElement":
        return bs_mul(self, other)

    def inverse(self) -> "BSElement":
        return bs_inv(self)

    def __eq__(self, other):
        if not isinstance(other, BSElement):
            return NotImplemented
        return self.n == other.n and self.r == other.r and self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.r, self._c))
        return self._hash

    def __repr__(self):
        return f"BSElement(n={self.n}, r={self.r}, c={self._c})"

    def __str__(self):
        lead = "x" if self.r == 0 else f"{self.n}^{self.r}x"
        if self._c == 0:
            return lead
        sign = "-" if self._c < 0 else "+"
        return f"{lead} {sign} {abs(self._c)}"

    def to_json(self) -> dict:
        return {"group": "bs", "n": self.n, "r": self.r, "c": self.c.to_json()}

    @classmethod
    def from_json(cls, doc) -> "BSElement":
        if doc.get("group", "bs") != "bs":
            raise ValueError("not a BS element")
        n = int(doc["n"])
        c = doc["c"]
        if isinstance(c, dict):
            if int(c["n"]) != n:
                raise ValueError("shift is written in a different base")
            c = NAdic.from_json(c).value
        else:
            c = as_rational(c)
        return cls(n, int(doc["r"]), c)


def bs_identity(n: int) -> BSElement:
    return BSElement(n, 0, 0)


def bs_mul(g: BSElement, h: BSElement) -> BSElement:
    """g o h: x -> n**(rg+rh) x + n**rg ch + cg."""
    if g.n != h.n:
        raise ValueError(f"base mismatch: {g.n} != {h.n}")
    return BSElement(g.n, g.r + h.r, g.scale * h._c + g._c)


def bs_inv(g: BSElement) -> BSElement:
    return BSElement(g.n, -g.r, -g._c / g.scale)


_LETTERS = {"a": (0, 1), "A": (0, -1), "b": (1, 0), "B": (-1, 0)}


def bs_generator(letter: str, n: int) -> BSElement:
    try:
        r, c = _LETTERS[letter]
    except KeyError:
        raise ValueError(f"unknown BS generator {letter!r}") from None
    return BSElement(n, r, c)


def bs_from_word(word, n: int) -> BSElement:
    """Evaluate a word over a, A = a^-1, b, B = b^-1."""
    g = bs_identity(n)
    for letter in reversed(word):
        g = bs_mul(bs_generator(letter, n), g)
    return g


def bs_fixed_point(g: BSElement) -> Optional[Fraction]:
    if g.is_identity():
        raise ValueError("the identity fixes every point")
    if g.r == 0:
        return None
    return g._c / (1 - g.scale)


def bs_word_for(g: BSElement) -> str:
    """Some word representing g (not necessarily shortest).

    With c = s / n**t, g = b^r conjugated translation: x -> n^r x + s/n^t is
    b^-t a^s b^t b^r.
    """
    nadic = g.c
    t, s = nadic.t, nadic.s
    tr = ("B" * t) + ("a" * s if s >= 0 else "A" * -s) + ("b" * t)
    sc = "b" * g.r if g.r >= 0 else "B" * -g.r
    return tr + sc

