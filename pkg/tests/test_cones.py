from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conelab.balls import ball_from_spec, cayley_ball, hinf_letters, restrict_cone
from conelab.cones import (
    ConjugatedCone,
    EnumCone,
    FlippedCone,
    Sign,
    SignSeqCone,
    SmirnovCone,
    cone_axiom_check,
    cone_from_json,
    enum_cone_sign,
    enum_cone_sign_scan,
    enum_rational,
    extend_prefix_cone,
    signseq_conjugate,
    signseq_sign,
    smirnov_conjugate,
    smirnov_sign,
)
from conelab.enumeration import Enumeration, cw_index, cw_rational, simplest_between
from conelab.exactnum import QuadIrr
from conelab.groups import BSElement, Group, bs_from_word, bump, hinf_from_word, pl_from_word

from helpers import (
    affine_of_word,
    bs_words,
    cw_sequence_below_one,
    f_words,
    hinf_words,
    quad_approx,
    quadirrs,
    unit_rationals,
)

F = Fraction
SQRT2 = QuadIrr(0, 1, 2)
PHI = QuadIrr(1, 1, 5, 2)
bits = st.lists(st.integers(0, 1), max_size=7)


# -- enumeration --------------------------------------------------------------


def test_enumeration_examples():
    assert [enum_rational(i) for i in range(3)] == [F(1, 2), F(1, 3), F(2, 3)]


def test_enumeration_matches_successor_oracle():
    seq = cw_sequence_below_one(3000)
    assert [cw_rational(i) for i in range(3000)] == seq
    assert len(set(seq)) == len(seq)


@given(unit_rationals)
def test_cw_index_inverts(q):
    assert cw_rational(cw_index(q)) == q


@given(st.integers(0, 10 ** 6))
def test_cw_rational_inverts(i):
    assert cw_index(cw_rational(i)) == i


@given(unit_rationals, unit_rationals)
def test_simplest_between_is_earliest(a, b):
    assume(a != b)
    lo, hi = min(a, b), max(a, b)
    q = simplest_between(lo, hi)
    assert lo < q < hi
    # brute force over the first 2**12 rationals of the canonical order
    first = next((cw_rational(i) for i in range(4095) if lo < cw_rational(i) < hi), None)
    if first is not None:
        assert q == first


@given(st.lists(unit_rationals, max_size=5, unique=True), st.integers(0, 300))
def test_prefixed_enumeration_is_bijective(prefix, i):
    e = Enumeration(prefix)
    seq = [e[j] for j in range(i + len(prefix) + 5)]
    assert len(set(seq)) == len(seq)
    assert seq[: len(prefix)] == list(prefix)
    assert e.index(seq[i]) == i


def test_prefix_validation():
    with pytest.raises(ValueError):
        Enumeration([F(1, 2), F(1, 2)])
    with pytest.raises(ValueError):
        Enumeration([F(3, 2)])


# -- Smirnov cones ------------------------------------------------------------


def test_smirnov_examples():
    P = SmirnovCone(2, SQRT2)
    assert smirnov_sign(P, bs_from_word("a", 2)) is Sign.POS
    assert smirnov_sign(P, bs_from_word("b", 2)) is Sign.POS
    assert smirnov_sign(P, BSElement(2, 1, F(-3, 2))) is Sign.NEG
    assert smirnov_conjugate(P, bs_from_word("a", 2)) == SmirnovCone(2, QuadIrr(1, 1, 2))
    assert smirnov_conjugate(P, bs_from_word("", 2)) == P
    assert smirnov_conjugate(P, bs_from_word("b", 2)) == SmirnovCone(2, QuadIrr(0, 2, 2))


def test_smirnov_rejects():
    with pytest.raises(TypeError):
        SmirnovCone(2, F(3, 2))
    with pytest.raises(ValueError):
        SmirnovCone(2, SQRT2).sign(bs_from_word("", 2))
    with pytest.raises(ValueError):
        SmirnovCone(2, SQRT2).sign(bs_from_word("a", 3))


@given(st.sampled_from([2, 3, 5]), quadirrs, bs_words)
def test_smirnov_sign_matches_numeric(n, alpha, word):
    scale, shift = affine_of_word(word, n)
    assume((scale, shift) != (1, 0))
    x = quad_approx(alpha)
    want = Sign.POS if scale * x + shift > x else Sign.NEG
    assert smirnov_sign(SmirnovCone(n, alpha), bs_from_word(word, n)) is want


@given(st.sampled_from([2, 3]), quadirrs, bs_words, bs_words)
def test_smirnov_conjugation_equivariant(n, alpha, hw, gw):
    P = SmirnovCone(n, alpha)
    h, g = bs_from_word(hw, n), bs_from_word(gw, n)
    assume(not g.is_identity())
    assert P.conjugate(h).sign(g) is P.sign(h.inverse() * g * h)
    assert ConjugatedCone(P, h).sign(g) is P.conjugate(h).sign(g)


# -- enumeration cone ---------------------------------------------------------


def test_enum_cone_examples():
    P = EnumCone()
    assert enum_cone_sign(P, pl_from_word("a")) is Sign.NEG
    assert enum_cone_sign(P, bump(F(7, 16), F(9, 16))) is Sign.POS
    g = bump(F(1, 16), F(3, 16))
    N, r = P.first_moved(g)
    assert F(1, 16) < r < F(3, 16)
    assert all(not F(1, 16) < cw_rational(i) < F(3, 16) for i in range(N))
    assert enum_cone_sign(P, g) is enum_cone_sign_scan(P, g) is Sign.POS


@given(f_words, st.lists(unit_rationals, max_size=3, unique=True))
def test_enum_cone_matches_scan(word, prefix):
    g = pl_from_word(word)
    assume(not g.is_identity())
    P = EnumCone(prefix)
    assert enum_cone_sign(P, g) is enum_cone_sign_scan(P, g)


@given(f_words)
def test_enum_cone_trichotomy(word):
    g = pl_from_word(word)
    assume(not g.is_identity())
    P = EnumCone()
    assert P.sign(g) is P.sign(g.inverse()).flip()


# -- sign-sequence cones ------------------------------------------------------


def test_signseq_examples():
    ones = SignSeqCone([], 1)
    assert signseq_sign(ones, hinf_from_word([3])) is Sign.POS
    e = SignSeqCone([1, 0], 1)
    assert signseq_sign(e, hinf_from_word([-1, 2])) is Sign.NEG
    assert signseq_sign(SignSeqCone([1], 0), hinf_from_word([1] * 5)) is Sign.POS


def test_signseq_conjugate_examples():
    e = SignSeqCone([1, 0, 1], 0)
    assert signseq_conjugate(e, hinf_from_word([2])).bits(4) == [0, 0, 1, 0]
    assert signseq_conjugate(e, hinf_from_word([3, 3])) == e
    assert signseq_conjugate(e, hinf_from_word([1])) == e


def test_extend_prefix_examples():
    assert extend_prefix_cone([1], 1).sign(hinf_from_word([1])) is Sign.POS
    c = extend_prefix_cone([1, 0], 1)
    assert c.sign(hinf_from_word([2])) is Sign.NEG
    assert c.sign(hinf_from_word([5])) is Sign.POS


def test_signseq_canonical():
    assert SignSeqCone([1, 0, 1, 1], 1) == SignSeqCone([1, 0], 1)
    assert SignSeqCone([1, 0, 1, 1], 1).prefix == (1, 0)
    with pytest.raises(ValueError):
        SignSeqCone([2], 1)


@given(bits, st.integers(0, 1), hinf_words, hinf_words)
def test_signseq_conjugation_equivariant(prefix, tail, hw, gw):
    P = SignSeqCone(prefix, tail)
    h, g = hinf_from_word(hw), hinf_from_word(gw)
    assume(not g.is_identity())
    assert P.conjugate(h).sign(g) is P.sign(h.inverse() * g * h)


@given(bits, st.integers(0, 1), hinf_words)
def test_signseq_flip_locality(prefix, tail, hw):
    P = SignSeqCone(prefix, tail)
    h = hinf_from_word(hw)
    Q = P.conjugate(h)
    assert all(i < h.top for i in P.differing_positions(Q))
    assert Q.conjugate(h.inverse()) == P


# -- cone axioms on balls ------------------------------------------------------


def test_smirnov_axioms_radius3():
    ball = cayley_ball(Group("bs", 2), None, 3)
    assert cone_axiom_check(SmirnovCone(2, SQRT2), ball).ok


def test_enum_axioms_radius4():
    ball = cayley_ball(Group("f"), None, 4)
    rep = cone_axiom_check(EnumCone(), ball)
    assert rep.ok and rep.checked_products > 0


def test_flipped_oracle_is_caught():
    ball = cayley_ball(Group("bs", 2), None, 3)
    P = SmirnovCone(2, SQRT2)
    bad = FlippedCone(P, [bs_from_word("ab", 2)])
    rep = cone_axiom_check(bad, ball)
    assert not rep.ok
    assert {v["axiom"] for v in rep.violations} >= {"trichotomy"}


def test_flipped_semigroup_only():
    # flipping g and g^-1 together keeps trichotomy but breaks closure
    ball = cayley_ball(Group("f"), None, 3)
    g = pl_from_word("ab")
    rep = cone_axiom_check(FlippedCone(EnumCone(), [g, g.inverse()]), ball)
    assert [v["axiom"] for v in rep.violations if v["axiom"] == "trichotomy"] == []
    assert any(v["axiom"] == "semigroup" for v in rep.violations)


@given(bits, st.integers(0, 1))
def test_signseq_axioms(prefix, tail):
    ball = cayley_ball(Group("hinf"), hinf_letters(3), 3)
    assert cone_axiom_check(SignSeqCone(prefix, tail), ball).ok


def test_restrict_examples():
    P = SmirnovCone(2, SQRT2)
    ball = cayley_ball(Group("bs", 2), None, 1)
    signs = {ball.word_str(g): s for g, s in restrict_cone(P, ball).items()}
    assert signs == {"a": Sign.POS, "b": Sign.POS, "A": Sign.NEG, "B": Sign.NEG}
    hb = cayley_ball(Group("hinf"), [1, 2], 1)
    hs = {hb.word_str(g): s for g, s in restrict_cone(SignSeqCone(), hb).items()}
    assert hs["x1"] is hs["x2"] is Sign.POS
    assert restrict_cone(P, cayley_ball(Group("bs", 2), None, 0)) == {}
    with pytest.raises(ValueError):
        restrict_cone(P, hb)


@pytest.mark.parametrize(
    "doc",
    [
        SmirnovCone(3, PHI).to_json(),
        EnumCone([F(1, 3)]).to_json(),
        SignSeqCone([0, 1], 0).to_json(),
    ],
)
def test_cone_json_round_trip(doc):
    assert cone_from_json(doc).to_json() == doc


# -- balls --------------------------------------------------------------------


def _naive_ball(group, letters, radius):
    """Every word up to the radius, evaluated; element -> shortest length."""
    best = {group.identity(): 0}
    layer = [()]
    for length in range(1, radius + 1):
        layer = [w + (x,) for w in layer for x in letters]
        for w in layer:
            g = group.from_word(list(w) if group.tag == "hinf" else "".join(w))
            best.setdefault(g, length)
    return best


@pytest.mark.parametrize(
    "group, letters, radius",
    [
        (Group("bs", 2), ["a", "b", "A", "B"], 3),
        (Group("bs", 3), ["a", "b", "A", "B"], 3),
        (Group("f"), ["a", "b", "A", "B"], 3),
        (Group("hinf"), [1, 2, 3, -1, -2, -3], 3),
    ],
)
def test_ball_matches_naive_enumeration(group, letters, radius):
    ball = cayley_ball(group, letters, radius)
    naive = _naive_ball(group, letters, radius)
    assert set(ball.elements) == set(naive)
    for g in ball.elements:
        w = ball.words[g]
        assert len(w) == naive[g]
        assert group.from_word(list(w) if group.tag == "hinf" else "".join(w)) == g


def test_ball_sizes():
    G = Group("bs", 2)
    assert len(cayley_ball(G, None, 1)) == 5
    assert len(cayley_ball(G, None, 2)) == 17
    assert cayley_ball(G, None, 0).elements == [G.identity()]
    assert len(cayley_ball(Group("hinf"), [1], 0)) == 1


def test_ball_spec_round_trip():
    ball = cayley_ball(Group("hinf"), [1, 2], 2)
    again = ball_from_spec(ball.spec())
    assert again.elements == ball.elements
    doc = ball.to_json()
    assert set(doc) == {"group", "generators", "radius", "elements"}
    assert doc["elements"][0] == {"element": {"group": "hinf", "exponents": []}, "word": []}


def test_ball_rejects():
    with pytest.raises(ValueError):
        cayley_ball(Group("hinf"), None, 1)
    with pytest.raises(ValueError):
        cayley_ball(Group("bs", 2), None, -1)
    with pytest.raises(ValueError):
        cayley_ball(Group("hinf"), [0], 1)


def test_restriction_is_a_basic_open_set():
    from conelab import ConeRestriction, SmirnovCone, cayley_ball, restrict_cone
    from conelab.exactnum import QuadIrr
    from conelab.groups import Group

    ball = cayley_ball(Group("bs", 2), None, 2)
    p = SmirnovCone(2, QuadIrr(0, 1, 2))
    q = SmirnovCone(2, QuadIrr(0, -1, 2))
    u = restrict_cone(p, ball)
    assert isinstance(u, ConeRestriction)
    assert u.contains(p)
    assert u.contains(q) == all(q.sign(g) is s for g, s in u.items())
    assert not u.contains(q)
    assert u == dict(u.items())
    doc = u.to_json()
    assert len(doc["signs"]) == len(u) == len(ball.elements) - 1
