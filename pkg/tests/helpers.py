"""Independent oracles and generators shared by the test modules.

Nothing here calls into conelab's own algorithms for the thing being tested.
"""

from __future__ import annotations

import copy
import random
from fractions import Fraction
from math import floor, isqrt

from hypothesis import strategies as st

from conelab.exactnum import QuadIrr

NONSQUARES = [2, 3, 5, 6, 7, 10, 11, 13, 15, 17, 19, 21, 23]


# -- numbers ------------------------------------------------------------------


def sqrt_bounds(d: int, k: int):
    """Rational lo < sqrt(d) < hi with hi - lo = 2**-k."""
    s = 1 << k
    f = isqrt(d * s * s)
    return Fraction(f, s), Fraction(f + 1, s)


def quad_bounds(x: QuadIrr, k: int):
    lo, hi = sqrt_bounds(x.d, k)
    a, b = Fraction(x.p, x.r), Fraction(x.q, x.r)
    ends = sorted((a + b * lo, a + b * hi))
    return ends[0], ends[1]


def quad_vs_rational(x: QuadIrr, y: Fraction) -> int:
    """Sign of x - y by refining enclosures; terminates since x is irrational."""
    k = 4
    while True:
        lo, hi = quad_bounds(x, k)
        if lo > y:
            return 1
        if hi < y:
            return -1
        k *= 2


def quad_approx(x: QuadIrr, k: int = 80) -> Fraction:
    lo, hi = quad_bounds(x, k)
    return (lo + hi) / 2


rationals = st.builds(
    Fraction, st.integers(-60, 60), st.integers(1, 40)
)
unit_rationals = st.builds(
    lambda a, b: Fraction(a % b, b) if a % b else Fraction(1, b + 1),
    st.integers(1, 200), st.integers(2, 60),
)
quadirrs = st.builds(
    QuadIrr,
    st.integers(-20, 20),
    st.integers(-6, 6).filter(bool),
    st.sampled_from(NONSQUARES),
    st.integers(1, 12),
)


def random_quad(rng: random.Random) -> QuadIrr:
    q = rng.choice([v for v in range(-5, 6) if v])
    return QuadIrr(rng.randint(-12, 12), q, rng.choice(NONSQUARES[:8]), rng.randint(1, 9))


# -- words --------------------------------------------------------------------

bs_words = st.text(alphabet="aAbB", max_size=10)
f_words = st.text(alphabet="aAbB", max_size=8)


def random_word(rng: random.Random, length: int, alphabet="aAbB") -> str:
    return "".join(rng.choice(alphabet) for _ in range(length))


def random_hinf_word(rng: random.Random, length: int, m: int = 4) -> list[int]:
    return [rng.choice((1, -1)) * rng.randint(1, m) for _ in range(length)]


hinf_words = st.lists(
    st.integers(1, 5).flatmap(lambda i: st.sampled_from((i, -i))), max_size=8
)


# -- BS(1,n) as raw affine pairs -------------------------------------------------


def affine_of_word(word: str, n: int):
    """(scale, shift) of the composed affine map, left letter outermost."""
    maps = {"a": (1, 1), "A": (1, -1), "b": (n, 0), "B": (Fraction(1, n), 0)}
    scale, shift = Fraction(1), Fraction(0)
    for ch in word:
        m, c = maps[ch]
        # current o (x -> m x + c)
        scale, shift = scale * m, scale * c + shift
    return scale, shift


# -- PL maps from breakpoints -------------------------------------------------


def interp(points, t: Fraction) -> Fraction:
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        if x0 <= t <= x1:
            return y0 + (y1 - y0) * (t - x0) / (x1 - x0)
    raise ValueError(t)


def parse_points(doc):
    return [(Fraction(x), Fraction(y)) for x, y in doc["breakpoints"]]


GEN_POINTS = {
    "a": [(0, 0), (Fraction(1, 2), Fraction(1, 4)), (Fraction(3, 4), Fraction(1, 2)), (1, 1)],
    "b": [(0, 0), (Fraction(1, 2), Fraction(1, 2)), (Fraction(3, 4), Fraction(5, 8)),
          (Fraction(7, 8), Fraction(3, 4)), (1, 1)],
}


def eval_word_pointwise(word: str, t: Fraction) -> Fraction:
    """Apply the word's generators to t right to left using raw interpolation."""
    for ch in reversed(word):
        pts = [(Fraction(x), Fraction(y)) for x, y in GEN_POINTS[ch.lower()]]
        if ch.isupper():
            pts = [(y, x) for x, y in pts]
        t = interp(pts, t)
    return t


def dyadic_grid(k: int):
    return [Fraction(i, 1 << k) for i in range((1 << k) + 1)]


# -- H_inf free rewriting ---------------------------------------------------------


def hinf_rewrite(word) -> list[int]:
    """Exponent vector via the relations alone.

    Adjacent letters x_i^s x_j^t with i > j are swapped; the swap inverts
    x_j when i = j + 1 and is a plain commutation otherwise.  Free
    cancellation runs after each pass.
    """
    w = [int(v) for v in word]
    changed = True
    while changed:
        changed = False
        out = []
        for v in w:
            if out and out[-1] == -v:
                out.pop()
                changed = True
            else:
                out.append(v)
        w = out
        for k in range(len(w) - 1):
            i, j = abs(w[k]), abs(w[k + 1])
            if i > j:
                u, v = w[k], w[k + 1]
                w[k], w[k + 1] = (-v if i == j + 1 else v), u
                changed = True
                break
    m = max((abs(v) for v in w), default=0)
    exps = [0] * m
    for v in w:
        exps[abs(v) - 1] += 1 if v > 0 else -1
    while exps and exps[-1] == 0:
        exps.pop()
    return exps


# -- Calkin-Wilf by iteration ---------------------------------------------------------


def cw_sequence_below_one(count: int) -> list[Fraction]:
    """Newman's successor x -> 1 / (2 floor(x) - x + 1), keeping values < 1."""
    out = []
    x = Fraction(1)
    while len(out) < count:
        x = 1 / (2 * floor(x) - x + 1)
        if x < 1:
            out.append(x)
    return out


# -- certificate mutation ---------------------------------------------------------


def leaf_paths(doc, path=()):
    if isinstance(doc, dict):
        for k, v in doc.items():
            yield from leaf_paths(v, path + (k,))
    elif isinstance(doc, list):
        for i, v in enumerate(doc):
            yield from leaf_paths(v, path + (i,))
    else:
        yield path, doc


def set_path(doc, path, value):
    doc = copy.deepcopy(doc)
    node = doc
    for p in path[:-1]:
        node = node[p]
    node[path[-1]] = value
    return doc


def bump_rational(text: str) -> str:
    num, den = text.split("/")
    return f"{int(num) + 1}/{den}"


def mutations(doc):
    """(label, mutated doc) for every integer, sign string and rational leaf."""
    for path, v in leaf_paths(doc):
        if isinstance(v, bool):
            yield f"bool {path}", set_path(doc, path, not v)
        elif isinstance(v, int):
            yield f"int {path}", set_path(doc, path, v + 1)
        elif v in ("pos", "neg"):
            yield f"sign {path}", set_path(doc, path, "neg" if v == "pos" else "pos")
        elif isinstance(v, str) and "/" in v and v.replace("/", "").lstrip("-").isdigit():
            yield f"rational {path}", set_path(doc, path, bump_rational(v))
