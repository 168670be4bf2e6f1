from fractions import Fraction
from math import floor

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conelab.exactnum import (
    NAdic,
    Ordering,
    QuadIrr,
    format_rational,
    nadic_normalize,
    parse_quadirr,
    parse_rational,
    parse_real,
    quad_affine,
    quad_cmp,
    surd_sign,
)

from helpers import quad_approx, quad_bounds, quad_vs_rational, quadirrs, rationals

SQRT2 = QuadIrr(0, 1, 2)
SQRT3 = QuadIrr(0, 1, 3)
PHI = QuadIrr(1, 1, 5, 2)


@pytest.mark.parametrize(
    "x, y, want",
    [
        (SQRT2, Fraction(1), Ordering.GREATER),
        (SQRT2, Fraction(3, 2), Ordering.LESS),
        (PHI, Fraction(8, 5), Ordering.GREATER),
    ],
)
def test_quad_cmp_examples(x, y, want):
    assert quad_cmp(x, y) is want


@pytest.mark.parametrize(
    "scale, shift, x, want",
    [
        (1, 1, SQRT2, QuadIrr(1, 1, 2)),
        (2, Fraction(-3, 2), SQRT2, QuadIrr(-3, 4, 2, 2)),
        (Fraction(1, 2), 0, PHI, QuadIrr(1, 1, 5, 4)),
    ],
)
def test_quad_affine_examples(scale, shift, x, want):
    assert quad_affine(scale, shift, x) == want


@pytest.mark.parametrize("n, s, t, want", [(2, 4, 2, (1, 0)), (2, 6, 2, (3, 1)), (3, 0, 5, (0, 0))])
def test_nadic_normalize_examples(n, s, t, want):
    v = nadic_normalize(n, s, t)
    assert (v.s, v.t) == want
    assert v.value == Fraction(s, n ** t)


def test_quad_affine_rejects_zero_scale():
    with pytest.raises(ValueError):
        quad_affine(0, 1, SQRT2)


@pytest.mark.parametrize("args", [(1, 0, 2, 1), (1, 1, 4, 1), (1, 1, 2, 0), (0, 1, 1, 1)])
def test_quadirr_rejects_degenerate(args):
    with pytest.raises(ValueError):
        QuadIrr(*args)


def test_canonical_form():
    x = QuadIrr(2, 4, 8, -6)  # (2 + 8 sqrt 2) / -6
    assert (x.p, x.q, x.d, x.r) == (-1, -4, 2, 3)
    assert QuadIrr(0, 1, 12) == QuadIrr(0, 2, 3)


@given(quadirrs, rationals)
def test_quad_cmp_matches_enclosures(x, y):
    assert int(quad_cmp(x, y)) == quad_vs_rational(x, y)


@given(quadirrs, quadirrs)
def test_quad_quad_order_matches_enclosures(x, y):
    assume(x != y)
    k = 16
    while True:
        xl, xh = quad_bounds(x, k)
        yl, yh = quad_bounds(y, k)
        if xh < yl or yh < xl:
            break
        k *= 2
    assert (x < y) == (xh < yl)
    assert (x > y) == (yh < xl)


@given(quadirrs, quadirrs, quadirrs)
def test_order_transitive(x, y, z):
    if x < y and y < z:
        assert x < z


@given(quadirrs)
def test_floor_matches_enclosure(x):
    lo, hi = quad_bounds(x, 64)
    assert floor(lo) == floor(x) == floor(hi)


@given(st.integers(-50, 50), st.integers(-50, 50).filter(bool), st.sampled_from([2, 3, 5, 7]))
def test_surd_sign(a, b, d):
    approx = a + b * quad_approx(QuadIrr(0, 1, d))
    assert surd_sign(a, b, d) == (1 if approx > 0 else -1)


@given(quadirrs, rationals.filter(bool), rationals)
def test_quad_affine_value(x, s, c):
    y = quad_affine(s, c, x)
    k = 60
    lo, hi = quad_bounds(x, k)
    ends = sorted((s * lo + c, s * hi + c))
    assert ends[0] <= quad_approx(y, k + 20) <= ends[1]


@given(quadirrs)
def test_json_and_text_round_trip(x):
    assert QuadIrr.from_json(x.to_json()) == x
    assert parse_quadirr(str(x)) == x


@pytest.mark.parametrize(
    "text, want",
    [
        ("sqrt(2)", SQRT2),
        ("(1+sqrt(5))/2", PHI),
        ("(1+1*sqrt(5))/2", PHI),
        ("-sqrt(3)", -SQRT3),
        ("(-3+4*sqrt(2))/2", QuadIrr(-3, 4, 2, 2)),
        ("1 + sqrt(2)", QuadIrr(1, 1, 2)),
    ],
)
def test_parse_quadirr(text, want):
    assert parse_quadirr(text) == want


@pytest.mark.parametrize("text", ["sqrt(4)", "sqrt(x)", "1/2", "(1+sqrt(5)/2"])
def test_parse_quadirr_rejects(text):
    with pytest.raises(ValueError):
        parse_quadirr(text)


def test_parse_real_dispatch():
    assert parse_real("3/4") == Fraction(3, 4)
    assert parse_real("sqrt(2)") == SQRT2


@given(rationals)
def test_rational_text_round_trip(q):
    assert parse_rational(format_rational(q)) == q


@given(st.integers(2, 7), st.integers(-500, 500), st.integers(0, 6))
def test_nadic_round_trip(n, s, t):
    v = nadic_normalize(n, s, t)
    assert v.value == Fraction(s, n ** t)
    assert v.t == 0 or v.s % n != 0
    assert NAdic.from_rational(n, v.value) == v
    assert NAdic.from_json(v.to_json()) == v


def test_nadic_rejects_non_nadic():
    with pytest.raises(ValueError):
        NAdic.from_rational(2, Fraction(1, 3))
    with pytest.raises(ValueError):
        NAdic(2, 4, 1)


def test_nadic_composite_base():
    # 1/2 = 2/4 is 4-adic
    assert NAdic.from_rational(4, Fraction(1, 2)).value == Fraction(1, 2)
