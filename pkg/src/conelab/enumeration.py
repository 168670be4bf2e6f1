"""Enumerations of Q ∩ (0, 1).

The canonical enumeration is the Calkin-Wilf sequence of positive rationals
with every value >= 1 dropped: 1/2, 1/3, 2/3, 1/4, 3/5, 2/5, 3/4, ...

Level k >= 1 of the Calkin-Wilf tree holds 2**k rationals; the left children
(even positions) are exactly the ones below 1, so the filtered sequence is
level-by-level and both directions of the bijection cost O(depth).
"""

from __future__ import annotations

from fractions import Fraction
from math import floor

from .exactnum import as_rational


def cw_rational(i: int) -> Fraction:
    """The i-th rational of the canonical enumeration."""
    if i < 0:
        raise ValueError("index must be >= 0")
    k = (i + 1).bit_length()
    pos = 2 * (i - ((1 << (k - 1)) - 1))
    a, b = 1, 1
    for shift in range(k - 1, -1, -1):
        if (pos >> shift) & 1:
            a, b = a + b, b
        else:
            a, b = a, a + b
    return Fraction(a, b)


def cw_depth(q) -> int:
    """Depth of q in the Calkin-Wilf (equivalently Stern-Brocot) tree."""
    q = as_rational(q)
    a, b = q.numerator, q.denominator
    depth = 0
    while a != b:
        if a < b:
            steps = (b - 1) // a
            b -= steps * a
        else:
            steps = (a - 1) // b
            a -= steps * b
        depth += steps
    return depth


def cw_index(q) -> int:
    """Inverse of cw_rational."""
    q = as_rational(q)
    if not 0 < q < 1:
        raise ValueError(f"{q} is not in (0, 1)")
    a, b = q.numerator, q.denominator
    runs = []  # (bit, length) from the leaf upward
    while a != b:
        if a < b:
            steps = (b - 1) // a
            b -= steps * a
            runs.append((0, steps))
        else:
            steps = (a - 1) // b
            a -= steps * b
            runs.append((1, steps))
    pos, k = 0, 0
    for bit, steps in reversed(runs):
        pos = (pos << steps) | (((1 << steps) - 1) if bit else 0)
        k += steps
    return (1 << (k - 1)) - 1 + pos // 2


def simplest_between(lo, hi) -> Fraction:
    """The rational of least tree depth in the open interval (lo, hi), lo >= 0."""
    lo, hi = as_rational(lo), as_rational(hi)
    if not 0 <= lo < hi:
        raise ValueError("need 0 <= lo < hi")
    n = floor(lo)
    if n + 1 < hi:
        return Fraction(n + 1)
    # (lo, hi) lies in [n, n + 1]; recurse on reciprocals of the fractional parts
    if lo == n:
        inner = floor(1 / (hi - n)) + 1
        return n + Fraction(1, inner)
    return n + 1 / simplest_between(1 / (hi - n), 1 / (lo - n))


class Enumeration:
    """A bijection N -> Q ∩ (0, 1): an explicit prefix, then the canonical
    enumeration with the prefix values skipped."""

    def __init__(self, prefix=()):
        pref = [as_rational(q) for q in prefix]
        if len(set(pref)) != len(pref):
            raise ValueError("prefix must be injective")
        for q in pref:
            if not 0 < q < 1:
                raise ValueError(f"prefix value {q} is not in (0, 1)")
        self.prefix = tuple(pref)
        self._skip = sorted(cw_index(q) for q in pref)
        self._pos = {q: i for i, q in enumerate(self.prefix)}

    def __eq__(self, other):
        return isinstance(other, Enumeration) and self.prefix == other.prefix

    def __hash__(self):
        return hash(self.prefix)

    def __getitem__(self, i: int) -> Fraction:
        if i < len(self.prefix):
            return self.prefix[i]
        j = i - len(self.prefix)
        for s in self._skip:
            if s <= j:
                j += 1
            else:
                break
        return cw_rational(j)

    def index(self, q) -> int:
        q = as_rational(q)
        if q in self._pos:
            return self._pos[q]
        c = cw_index(q)
        below = sum(1 for s in self._skip if s < c)
        return len(self.prefix) + c - below

    def first_in(self, intervals):
        """(index, rational) of the earliest enumerated point of a union of open
        intervals, or None when the union is empty."""
        intervals = list(intervals)
        if not intervals:
            return None
        for i, q in enumerate(self.prefix):
            if any(lo < q < hi for lo, hi in intervals):
                return i, q
        # the earliest canonical point of (lo, hi) is its simplest rational;
        # prefix values are never inside the intervals at this point
        best = None
        for lo, hi in intervals:
            q = simplest_between(lo, hi)
            c = cw_index(q)
            if best is None or c < best[0]:
                best = (c, q)
        return self.index(best[1]), best[1]


CANONICAL = Enumeration()


def enum_rational(i: int) -> Fraction:
    return cw_rational(i)
