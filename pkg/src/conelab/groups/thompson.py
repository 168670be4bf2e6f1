"""Thompson's group F as piecewise-linear homeomorphisms of [0, 1].

Elements are stored in canonical form: breakpoints ``(xs[i]/2**T, ys[i]/2**T)``
with collinear breakpoints coalesced and T minimal.  Two maps are equal iff
their canonical tuples are equal.

Generators: ``a`` has breakpoints (0,0), (1/2,1/4), (3/4,1/2), (1,1) and ``b``
is the copy of ``a`` on [1/2, 1].  Words compose left letter outermost.
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from typing import NamedTuple

from .. import kernels
from ..exactnum import as_rational, format_rational, parse_rational


def _dyadic_split(v: Fraction) -> tuple[int, int]:
    den = v.denominator
    if den & (den - 1):
        raise ValueError(f"{v} is not dyadic")
    return v.numerator, den.bit_length() - 1


class PLMap:
    __slots__ = ("T", "xs", "ys", "_hash")

    def __init__(self, T: int, xs, ys, *, check: bool = True):
        xs, ys = tuple(xs), tuple(ys)
        if check:
            _validate(T, xs, ys)
            T, xs, ys = kernels.pl_canonical(T, xs, ys)
        self.T = T
        self.xs = xs
        self.ys = ys
        self._hash = None

    @classmethod
    def from_breakpoints(cls, points) -> "PLMap":
        pts = [(as_rational(x), as_rational(y)) for x, y in points]
        T = 0
        for x, y in pts:
            T = max(T, _dyadic_split(x)[1], _dyadic_split(y)[1])
        scale = 1 << T
        xs = [int(x * scale) for x, _ in pts]
        ys = [int(y * scale) for _, y in pts]
        return cls(T, xs, ys)

    @property
    def breakpoints(self) -> list[tuple[Fraction, Fraction]]:
        d = 1 << self.T
        return [(Fraction(x, d), Fraction(y, d)) for x, y in zip(self.xs, self.ys)]

    def is_identity(self) -> bool:
        return len(self.xs) == 2

    def __call__(self, t):
        return pl_eval(self, t)

    def __mul__(self, other: "PLMap") -> "PLMap":
        return pl_compose(self, other)

    def inverse(self) -> "PLMap":
        return pl_inverse(self)

    def __eq__(self, other):
        if not isinstance(other, PLMap):
            return NotImplemented
        return self.T == other.T and self.xs == other.xs and self.ys == other.ys

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.T, self.xs, self.ys))
        return self._hash

    def __repr__(self):
        pts = ", ".join(f"({x}, {y})" for x, y in self.breakpoints)
        return f"PLMap[{pts}]"

    def to_json(self) -> dict:
        return {
            "group": "f",
            "breakpoints": [[format_rational(x), format_rational(y)] for x, y in self.breakpoints],
        }

    @classmethod
    def from_json(cls, doc) -> "PLMap":
        if doc.get("group", "f") != "f":
            raise ValueError("not an F element")
        return cls.from_breakpoints(
            [(parse_rational(x), parse_rational(y)) for x, y in doc["breakpoints"]]
        )


def _validate(T, xs, ys):
    if T < 0:
        raise ValueError("negative exponent")
    if len(xs) != len(ys) or len(xs) < 2:
        raise ValueError("need at least the breakpoints (0,0) and (1,1)")
    top = 1 << T
    if xs[0] != 0 or ys[0] != 0 or xs[-1] != top or ys[-1] != top:
        raise ValueError("map must fix 0 and 1")
    for i in range(len(xs) - 1):
        dx, dy = xs[i + 1] - xs[i], ys[i + 1] - ys[i]
        if dx <= 0 or dy <= 0:
            raise ValueError("breakpoints must be strictly increasing")
        big, small = (dx, dy) if dx >= dy else (dy, dx)
        if big % small or (big // small) & (big // small - 1):
            raise ValueError(f"slope {dy}/{dx} is not a power of 2")


IDENTITY = PLMap(0, (0, 1), (0, 1))


def pl_identity() -> PLMap:
    return IDENTITY


def pl_compose(g: PLMap, h: PLMap) -> PLMap:
    """g o h."""
    T, xs, ys = kernels.pl_compose(g.T, g.xs, g.ys, h.T, h.xs, h.ys)
    return PLMap(T, xs, ys, check=False)


def pl_inverse(g: PLMap) -> PLMap:
    return PLMap(g.T, g.ys, g.xs, check=False)


def pl_eval(g: PLMap, t) -> Fraction:
    t = as_rational(t)
    if t < 0 or t > 1:
        raise ValueError(f"{t} is outside [0, 1]")
    X = t * (1 << g.T)
    i = bisect_right(g.xs, X) - 1
    if i >= len(g.xs) - 1:
        i = len(g.xs) - 2
    x0, y0 = g.xs[i], g.ys[i]
    slope = Fraction(g.ys[i + 1] - y0, g.xs[i + 1] - x0)
    return (y0 + (X - x0) * slope) / (1 << g.T)


def pl_slopes(g: PLMap) -> list[Fraction]:
    return [
        Fraction(g.ys[i + 1] - g.ys[i], g.xs[i + 1] - g.xs[i])
        for i in range(len(g.xs) - 1)
    ]


def pl_support(g: PLMap) -> list[tuple[Fraction, Fraction]]:
    """Maximal open intervals on which g(t) != t, left to right."""
    d = 1 << g.T
    comps = []
    start = None
    for i in range(len(g.xs) - 1):
        x0, x1 = g.xs[i], g.xs[i + 1]
        f0, f1 = g.ys[i] - x0, g.ys[i + 1] - x1  # displacement at the ends
        if f0 == 0:
            if start is not None:
                comps.append((start, Fraction(x0, d)))
                start = None
            if f1 != 0:
                start = Fraction(x0, d)
        elif f1 != 0 and (f0 > 0) != (f1 > 0):
            z = Fraction(x0 * (f1 - f0) - f0 * (x1 - x0), (f1 - f0) * d)
            comps.append((start, z))
            start = z
    if start is not None:
        comps.append((start, Fraction(1)))
    return comps


class DyadicInterval(NamedTuple):
    lo: Fraction
    hi: Fraction

    @classmethod
    def of(cls, lo, hi) -> "DyadicInterval":
        lo, hi = as_rational(lo), as_rational(hi)
        if not 0 <= lo < hi <= 1:
            raise ValueError(f"bad interval [{lo}, {hi}]")
        _dyadic_split(lo)
        _dyadic_split(hi)
        return cls(lo, hi)


def bump(lo, hi, direction: str = "up") -> PLMap:
    """Bump supported on [lo, hi]: slopes 2, 1, 1/2 on the quarters (up)."""
    lo, hi = DyadicInterval.of(lo, hi)
    L = hi - lo
    pts = [(Fraction(0), Fraction(0))]
    if lo > 0:
        pts.append((lo, lo))
    pts += [
        (lo + L / 4, lo + L / 2),
        (lo + L / 2, lo + 3 * L / 4),
    ]
    if hi < 1:
        pts.append((hi, hi))
    pts.append((Fraction(1), Fraction(1)))
    up = PLMap.from_breakpoints(pts)
    if direction == "up":
        return up
    if direction == "down":
        return pl_inverse(up)
    raise ValueError(f"direction must be 'up' or 'down', not {direction!r}")


GEN_A = PLMap.from_breakpoints(
    [(0, 0), (Fraction(1, 2), Fraction(1, 4)), (Fraction(3, 4), Fraction(1, 2)), (1, 1)]
)
GEN_B = PLMap.from_breakpoints(
    [
        (0, 0),
        (Fraction(1, 2), Fraction(1, 2)),
        (Fraction(3, 4), Fraction(5, 8)),
        (Fraction(7, 8), Fraction(3, 4)),
        (1, 1),
    ]
)
_GENS = {"a": GEN_A, "A": pl_inverse(GEN_A), "b": GEN_B, "B": pl_inverse(GEN_B)}



def invert_word(word: str) -> str:
    return word[::-1].swapcase()


def commutator(x: str, y: str) -> str:
    return x + y + invert_word(x) + invert_word(y)


RELATORS = (commutator("aB", "Aba"), commutator("aB", "AAbaa"))


def pl_generator(letter: str) -> PLMap:
    try:
        return _GENS[letter]
    except KeyError:
        raise ValueError(f"unknown F generator {letter!r}") from None


def pl_from_word(word) -> PLMap:
    g = IDENTITY
    for letter in reversed(word):
        g = pl_compose(pl_generator(letter), g)
    return g
