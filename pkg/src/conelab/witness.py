"""Constructive witnesses, each packaged as a self-checking certificate.

Every ``*_checks`` function rebuilds the check transcript from inputs and
witness alone; generation and verification both call it.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor

from .balls import cayley_ball
from .certificate import Certificate, Check, sealed
from .cones import ConeOracle, EnumCone, Sign, SignSeqCone, SmirnovCone
from .exactnum import QuadIrr, as_rational, format_rational, quad_affine
from .groups import BSElement, PLMap, bs_fixed_point, bs_from_word, bump, pl_eval, pl_support
from .groups.bs import bs_word_for
from .groups.thompson import DyadicInterval

# largest N for which f-separator spells out S = {r_0, ..., r_{N-1}}
LITERAL_S_LIMIT = 4096


# -- BS(1,n): separators ------------------------------------------------------


def separate_smirnov(alpha: QuadIrr, beta: QuadIrr, n: int) -> BSElement:
    """g: x -> n x - m / n**t with fixed point m / (n**t (n - 1)) in (alpha, beta).

    The first t whose lattice (1 / (n**t (n-1))) Z meets (alpha, beta) wins;
    within it the m of least absolute value.
    """
    if alpha == beta:
        raise ValueError("alpha and beta coincide")
    if not alpha < beta:
        raise ValueError("need alpha < beta")
    t = 0
    while True:
        D = n ** t * (n - 1)
        lo = floor(quad_affine(D, 0, alpha)) + 1
        hi = floor(quad_affine(D, 0, beta))
        if lo <= hi:
            m = 0 if lo <= 0 <= hi else (lo if lo > 0 else hi)
            return BSElement(n, 1, Fraction(-m, n ** t))
        t += 1


def separator_checks(n: int, alpha: QuadIrr, beta: QuadIrr, g: BSElement, word: str) -> list[Check]:
    q = bs_fixed_point(g) if not g.is_identity() else None
    checks = [
        Check("word evaluates to g", bs_from_word(word, n), "=", g),
        Check("g is not the identity", g.is_identity(), "=", False),
        Check("scale exponent r of g", g.r, ">", 0),
        Check("fixed point of g above alpha", q, ">", alpha),
        Check("fixed point of g below beta", q, "<", beta),
    ]
    if not g.is_identity():
        checks += [
            Check("sign of g in P_alpha", SmirnovCone(n, alpha).sign(g), "=", Sign.NEG),
            Check("sign of g in P_beta", SmirnovCone(n, beta).sign(g), "=", Sign.POS),
        ]
    return checks


def separator_certificate(alpha: QuadIrr, beta: QuadIrr, n: int) -> Certificate:
    g = separate_smirnov(alpha, beta, n)
    word = bs_word_for(g)
    return sealed(
        "separator",
        {"n": n, "alpha": alpha.to_json(), "beta": beta.to_json()},
        {"g": g.to_json(), "word": word},
        separator_checks(n, alpha, beta, g, word),
    )


def freepart_checks(n: int, alpha: QuadIrr, h: BSElement, image: QuadIrr, d: BSElement) -> list[Check]:
    P = SmirnovCone(n, alpha)
    checks = [
        Check("h is not the identity", h.is_identity(), "=", False),
        Check("image of alpha under h", h(alpha), "=", image),
        Check("h moves alpha", image, "!=", alpha),
    ]
    conj = P.conjugate(h)
    direct = P.sign(h.inverse() * d * h)
    checks += [
        Check("sign of discriminator in P", P.sign(d), "!=", conj.sign(d)),
        Check("sign of discriminator in hPh^-1 (direct)", direct, "=", conj.sign(d)),
    ]
    return checks


def bs_freepart_witness(alpha: QuadIrr, n: int, h: BSElement) -> Certificate:
    if h.is_identity():
        raise ValueError("the identity stabilizes every cone")
    image = h(alpha)
    lo, hi = (alpha, image) if alpha < image else (image, alpha)
    d = separate_smirnov(lo, hi, n)
    return sealed(
        "bs-freepart",
        {"n": n, "alpha": alpha.to_json(), "h": h.to_json()},
        {"image": image.to_json(), "discriminator": d.to_json()},
        freepart_checks(n, alpha, h, image, d),
    )


# -- condensation from a list of positives -------------------------------------


def minimal_element(cone: ConeOracle, elements):
    """The <_P-least element, by pairwise sign queries on g^-1 h."""
    best = elements[0]
    for g in elements[1:]:
        if g != best and cone.less(g, best):
            best = g
    return best


def find_discriminator(cone: ConeOracle, other: ConeOracle, letters, max_radius: int = 4):
    """Shortest ball element whose sign differs between the two cones."""
    ball = cayley_ball(cone.group, letters, max_radius)
    for g in ball.elements:
        if not g.is_identity() and cone.sign(g) != other.sign(g):
            return g
    return None


def _discriminator_for(cone: ConeOracle, conj: ConeOracle, h, extra=()):
    if isinstance(cone, SmirnovCone):
        a, b = cone.alpha, conj.alpha
        lo, hi = (a, b) if a < b else (b, a)
        return separate_smirnov(lo, hi, cone.n)
    if isinstance(cone, SignSeqCone):
        if conj == cone:
            return None
        m = max([h.top] + [g.top for g in extra]) + 1
        return find_discriminator(cone, conj, list(range(1, m + 1)))
    raise TypeError(f"no conjugation available for {type(cone).__name__}")


def condensation_checks(cone: ConeOracle, positives, h, d, claimed_conj) -> list[Check]:
    conj = cone.conjugate(h)
    hinv = h.inverse()
    checks = [Check("conjugate cone hPh^-1", conj, "=", claimed_conj)]
    for i, g in enumerate(positives):
        checks.append(Check(f"g{i} positive in P", cone.sign(g), "=", Sign.POS))
    checks.append(Check("conjugator is one of the listed elements", h in positives, "=", True))
    for i, g in enumerate(positives):
        if g != h:
            checks.append(Check(f"h <_P g{i}", cone.sign(hinv * g), "=", Sign.POS))
    for i, g in enumerate(positives):
        checks.append(Check(f"g{i} positive in hPh^-1", conj.sign(g), "=", Sign.POS))
        checks.append(Check(f"h^-1 g{i} h positive in P", cone.sign(hinv * g * h), "=", Sign.POS))
    checks += _distinct_checks(cone, conj, h, d)
    return checks


def _distinct_checks(cone, conj, h, d) -> list[Check]:
    if d is None:
        # only sign-sequence cones can land here: h lies in the stabilizer
        return [Check("hPh^-1 equals P (P is not in the free part)", conj, "=", cone)]
    return [
        Check("discriminator sign in P vs hPh^-1", cone.sign(d), "!=", conj.sign(d)),
        Check("discriminator sign in hPh^-1 (direct)", cone.sign(h.inverse() * d * h), "=", conj.sign(d)),
    ]


def condensation_witness(cone: ConeOracle, positives) -> Certificate:
    positives = list(positives)
    if not positives:
        raise ValueError("need at least one positive element")
    if not isinstance(cone, (SmirnovCone, SignSeqCone)):
        raise TypeError("condensation witnesses need a cone family with computable conjugation")
    for g in positives:
        if g.is_identity() or cone.sign(g) is not Sign.POS:
            raise ValueError(f"{g} is not positive")
    h = minimal_element(cone, positives)
    conj = cone.conjugate(h)
    d = _discriminator_for(cone, conj, h, positives)
    return sealed(
        "condensation",
        {"mode": "positives", "cone": cone.to_json(), "positives": [g.to_json() for g in positives]},
        {
            "conjugator": h.to_json(),
            "conjugate_cone": conj.to_json(),
            "discriminator": d.to_json() if d is not None else None,
        },
        condensation_checks(cone, positives, h, d, conj),
    )


# -- Thompson's F -------------------------------------------------------------


def grid_interval(x: Fraction, k: int) -> DyadicInterval:
    """Smallest closed interval on the 2**-k grid with x in its interior."""
    s = 1 << k
    X = x * s
    if X.denominator == 1:
        return DyadicInterval(Fraction(X.numerator - 1, s), Fraction(X.numerator + 1, s))
    f = floor(X)
    return DyadicInterval(Fraction(f, s), Fraction(f + 1, s))


def _meets(interval, points) -> bool:
    lo, hi = interval
    return any(lo <= p <= hi for p in points)


def choose_intervals(S, x: Fraction, y: Fraction):
    """Bisect around x and y until the grid intervals separate; (I, J, depth)."""
    k = 1
    while True:
        I, J = grid_interval(x, k), grid_interval(y, k)
        disjoint = I[1] < J[0] or J[1] < I[0]
        if disjoint and not _meets(I, S) and not _meets(J, S):
            return I, J, k
        k += 1


def good_function_map(I, J) -> PLMap:
    return bump(I[0], I[1], "up") * bump(J[0], J[1], "down")


def good_function_checks(S, x, y, I, J, depth: int, g: PLMap) -> list[Check]:
    checks = [
        Check("I is the grid interval around x", grid_interval(x, depth), "=", I),
        Check("J is the grid interval around y", grid_interval(y, depth), "=", J),
        Check("g = bump+(I) o bump-(J)", g, "=", good_function_map(I, J)),
        Check("I lies left of J or right of J", I[1] < J[0] or J[1] < I[0], "=", True),
        Check("x above left end of I", x, ">", I[0]),
        Check("x below right end of I", x, "<", I[1]),
        Check("y above left end of J", y, ">", J[0]),
        Check("y below right end of J", y, "<", J[1]),
    ]
    for i, s in enumerate(S):
        checks.append(Check(f"s{i} outside I and J", _meets(I, [s]) or _meets(J, [s]), "=", False))
        checks.append(Check(f"g fixes s{i}", pl_eval(g, s), "=", s))
    checks.append(Check("g raises x", pl_eval(g, x), ">", x))
    checks.append(Check("g lowers y", pl_eval(g, y), "<", y))
    inside = all(
        (I[0] <= lo and hi <= I[1]) or (J[0] <= lo and hi <= J[1]) for lo, hi in pl_support(g)
    )
    checks.append(Check("support of g inside I and J", inside, "=", True))
    return checks


def _interval_json(I):
    return [format_rational(I[0]), format_rational(I[1])]


def good_function(S, x, y) -> Certificate:
    S = [as_rational(s) for s in S]
    x, y = as_rational(x), as_rational(y)
    if x == y:
        raise ValueError("x and y must differ")
    if not (0 < x < 1 and 0 < y < 1):
        raise ValueError("x and y must lie in (0, 1): F fixes both endpoints")
    if x in S or y in S:
        raise ValueError("x and y must avoid S")
    if any(s < 0 or s > 1 for s in S):
        raise ValueError("S must lie in [0, 1]")
    I, J, depth = choose_intervals(S, x, y)
    g = good_function_map(I, J)
    return sealed(
        "good-function",
        {"S": [format_rational(s) for s in S], "x": format_rational(x), "y": format_rational(y)},
        {"I": _interval_json(I), "J": _interval_json(J), "depth": depth, "g": g.to_json()},
        good_function_checks(S, x, y, I, J, depth, g),
    )


def _exclusion_set(cone: EnumCone, h: PLMap, N: int, x: Fraction):
    """S = {r_0, ..., r_{N-1}}, or for huge N the ends of the support component
    of h around x: no r_i with i < N lies inside that component."""
    if N <= LITERAL_S_LIMIT:
        return [cone.enumeration[i] for i in range(N)], True
    for lo, hi in pl_support(h):
        if lo < x < hi:
            return [p for p in (lo, hi) if 0 < p < 1], False
    raise AssertionError("x is moved, so it lies in a support component")


def f_separator_checks(cone: EnumCone, h: PLMap, N: int, x, y, I, J, g: PLMap, literal: bool) -> list[Check]:
    N0, _ = cone.first_moved(h)
    hinv = h.inverse()
    checks = [
        Check("g = bump+(I) o bump-(J)", g, "=", good_function_map(I, J)),
        Check("first enumeration index moved by h", N0, "=", N),
        Check("r_N", cone.enumeration[N], "=", x),
        Check("y = h(r_N)", pl_eval(h, x), "=", y),
        Check("g raises r_N", pl_eval(g, x), ">", x),
        Check("g lowers h(r_N)", pl_eval(g, y), "<", y),
    ]
    if literal:
        for i in range(N):
            r = cone.enumeration[i]
            checks.append(Check(f"g fixes r_{i}", pl_eval(g, r), "=", r))
    else:
        # h fixes r_0..r_{N-1}, so none of them is inside this component
        comp = [c for c in pl_support(h) if c[0] < x < c[1]]
        lo, hi = comp[0] if comp else (x, x)
        checks += [
            Check("I inside the support component of h at r_N", lo <= I[0] and I[1] <= hi, "=", True),
            Check("J inside the support component of h at r_N", lo <= J[0] and J[1] <= hi, "=", True),
        ]
    checks += [
        Check("sign of g in P_e", cone.sign(g), "=", Sign.POS),
        Check("sign of h^-1 g h in P_e", cone.sign(hinv * g * h), "=", Sign.NEG),
    ]
    return checks


def conjugacy_separator_F(cone: EnumCone, h: PLMap) -> Certificate:
    if h.is_identity():
        raise ValueError("the identity stabilizes every cone")
    N, x = cone.first_moved(h)
    y = pl_eval(h, x)
    S, literal = _exclusion_set(cone, h, N, x)
    I, J, depth = choose_intervals(S, x, y)
    g = good_function_map(I, J)
    return sealed(
        "f-separator",
        {"cone": cone.to_json(), "h": h.to_json()},
        {
            "N": N,
            "x": format_rational(x),
            "y": format_rational(y),
            "S": "literal" if literal else [format_rational(s) for s in S],
            "I": _interval_json(I),
            "J": _interval_json(J),
            "g": g.to_json(),
        },
        f_separator_checks(cone, h, N, x, y, I, J, g, literal),
    )


def interval_from_json(doc):
    lo, hi = doc
    return DyadicInterval.of(lo, hi)


__all__ = [
    "separate_smirnov", "separator_certificate", "bs_freepart_witness", "condensation_witness",
    "good_function", "conjugacy_separator_F", "minimal_element", "find_discriminator",
    "grid_interval", "choose_intervals",
]
