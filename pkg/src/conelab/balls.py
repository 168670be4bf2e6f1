"""Cayley balls: finite, inverse-closed pieces of a group with shortest words."""

from __future__ import annotations

from .groups import Group


class Ball:
    """Elements within ``radius`` of the identity in the word metric.

    ``elements`` is in breadth-first order (by length, then generator order);
    ``words[g]`` is the first shortest word found for ``g``.
    """

    def __init__(self, group: Group, letters, radius: int, elements, words):
        self.group = group
        self.letters = list(letters)
        self.radius = radius
        self.elements = elements
        self.words = words
        self.index = {g: i for i, g in enumerate(elements)}

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self.index

    def __iter__(self):
        return iter(self.elements)

    def word_str(self, g) -> str:
        w = self.words.get(g)
        if w is None:
            return "?"
        return format_word(self.group, w)

    @property
    def max_index(self) -> int:
        """Largest H_inf generator index among the letters."""
        return max(abs(int(x)) for x in self.letters) if self.letters else 0

    def spec(self) -> dict:
        doc = self.group.to_json()
        doc["generators"] = _plain_letters(self.group, self.letters)
        doc["radius"] = self.radius
        return doc

    def to_json(self) -> dict:
        doc = self.spec()
        doc["elements"] = [
            {"element": g.to_json(), "word": _plain_word(self.group, self.words[g])}
            for g in self.elements
        ]
        return doc


def format_word(group: Group, word) -> str:
    if group.tag == "hinf":
        if not word:
            return "id"
        return " ".join(f"x{w}" if w > 0 else f"X{-w}" for w in word)
    return "".join(word) if word else "id"


def _plain_word(group, word):
    return list(word) if group.tag == "hinf" else "".join(word)


def _plain_letters(group, letters):
    return [int(x) for x in letters] if group.tag == "hinf" else list(letters)


def symmetric_letters(group: Group, generators) -> list:
    """Generators followed by any missing inverses, duplicates removed."""
    out = []
    for g in generators:
        if group.tag == "hinf":
            g = int(g)
            if g == 0:
                raise ValueError("H_inf generator indices start at 1")
        for letter in (g, group.inverse_letter(g)):
            if letter not in out:
                out.append(letter)
    return out


def hinf_letters(m: int) -> list[int]:
    """x_1, ..., x_m and their inverses."""
    return [i for i in range(1, m + 1)] + [-i for i in range(1, m + 1)]


def cayley_ball(group: Group, generators=None, radius: int = 1) -> Ball:
    if radius < 0:
        raise ValueError("radius must be >= 0")
    if generators is None:
        generators = group.default_letters()
    letters = symmetric_letters(group, generators)
    gens = [(x, group.generator(x)) for x in letters]
    for x, g in gens:
        if g.is_identity():
            raise ValueError(f"generator {x!r} is the identity")
    e = group.identity()
    elements = [e]
    words = {e: ()}
    frontier = [e]
    for _ in range(radius):
        nxt = []
        for g in frontier:
            w = words[g]
            for x, s in gens:
                k = g * s
                if k not in words:
                    words[k] = w + (x,)
                    elements.append(k)
                    nxt.append(k)
        frontier = nxt
    return Ball(group, letters, radius, elements, words)


def ball_from_spec(doc) -> Ball:
    group = Group.from_json(doc)
    return cayley_ball(group, doc.get("generators"), int(doc["radius"]))


class ConeRestriction:
    """The signs a cone gives a ball: a basic open set of cones."""

    def __init__(self, ball: Ball, signs: dict):
        self.ball = ball
        self.signs = signs

    def __len__(self):
        return len(self.signs)

    def __getitem__(self, g):
        return self.signs[g]

    def items(self):
        return self.signs.items()

    def __eq__(self, other):
        if isinstance(other, ConeRestriction):
            return self.ball.group == other.ball.group and self.signs == other.signs
        if isinstance(other, dict):
            return self.signs == other
        return NotImplemented

    def contains(self, oracle) -> bool:
        """Whether the cone lies in this neighbourhood (same sign on every element)."""
        return all(oracle.sign(g) is s for g, s in self.signs.items())

    def to_json(self) -> dict:
        return {
            "ball": self.ball.spec(),
            "signs": [{"word": self.ball.word_str(g), "sign": str(s)} for g, s in self.signs.items()],
        }


def restrict_cone(oracle, ball: Ball) -> ConeRestriction:
    """Sign of every nonidentity ball element, in ball order."""
    if oracle.group != ball.group:
        raise ValueError(f"cone on {oracle.group} restricted to a ball in {ball.group}")
    return ConeRestriction(ball, {g: oracle.sign(g) for g in ball.elements if not g.is_identity()})
