"""The three group engines and a small uniform front end used by balls and the CLI."""

from __future__ import annotations

from .bs import (
    BSElement,
    bs_fixed_point,
    bs_from_word,
    bs_generator,
    bs_identity,
    bs_inv,
    bs_mul,
)
from .hinf import HINF_IDENTITY, HInfElement, hinf_from_word, hinf_generator, hinf_inv, hinf_mul
from .thompson import (
    IDENTITY as PL_IDENTITY,
    RELATORS,
    PLMap,
    DyadicInterval,
    bump,
    pl_compose,
    pl_eval,
    pl_from_word,
    pl_generator,
    pl_inverse,
    pl_support,
)

__all__ = [
    "BSElement", "PLMap", "HInfElement", "Group", "group_of", "element_from_json",
    "bs_from_word", "bs_mul", "bs_inv", "bs_fixed_point", "bs_identity", "bs_generator",
    "pl_from_word", "pl_compose", "pl_inverse", "pl_eval", "pl_support", "bump", "DyadicInterval",
    "pl_generator", "PL_IDENTITY", "RELATORS",
    "hinf_mul", "hinf_inv", "hinf_from_word", "hinf_generator", "HINF_IDENTITY",
]


class Group:
    """Tag + parameters of one of the supported groups.

    Letters are "a", "A", "b", "B" for BS(1,n) and F, and signed ints for H_inf.
    """

    def __init__(self, tag: str, n: int | None = None):
        if tag not in ("bs", "f", "hinf"):
            raise ValueError(f"unknown group {tag!r}")
        if tag == "bs" and (n is None or n < 2):
            raise ValueError("BS(1,n) needs n >= 2")
        self.tag = tag
        self.n = n if tag == "bs" else None

    def __eq__(self, other):
        return isinstance(other, Group) and (self.tag, self.n) == (other.tag, other.n)

    def __hash__(self):
        return hash((self.tag, self.n))

    def __repr__(self):
        return f"Group({self.tag!r}, n={self.n})" if self.n else f"Group({self.tag!r})"

    def identity(self):
        if self.tag == "bs":
            return bs_identity(self.n)
        if self.tag == "f":
            return PL_IDENTITY
        return HINF_IDENTITY

    def generator(self, letter):
        if self.tag == "bs":
            return bs_generator(letter, self.n)
        if self.tag == "f":
            return pl_generator(letter)
        return hinf_generator(int(letter))

    def inverse_letter(self, letter):
        if self.tag == "hinf":
            return -int(letter)
        return letter.swapcase()

    def default_letters(self):
        if self.tag == "hinf":
            raise ValueError("H_inf is infinitely generated; pass explicit generators")
        return ["a", "b", "A", "B"]

    def from_word(self, word):
        if self.tag == "bs":
            return bs_from_word(word, self.n)
        if self.tag == "f":
            return pl_from_word(word)
        return hinf_from_word(word)

    def element_from_json(self, doc):
        return element_from_json(doc)

    def to_json(self) -> dict:
        doc = {"group": self.tag}
        if self.tag == "bs":
            doc["n"] = self.n
        return doc

    @classmethod
    def from_json(cls, doc) -> "Group":
        return cls(doc["group"], doc.get("n"))


def group_of(element) -> Group:
    if isinstance(element, BSElement):
        return Group("bs", element.n)
    if isinstance(element, PLMap):
        return Group("f")
    if isinstance(element, HInfElement):
        return Group("hinf")
    raise TypeError(f"not a group element: {element!r}")


def element_from_json(doc):
    tag = doc.get("group")
    if tag == "bs":
        return BSElement.from_json(doc)
    if tag == "f":
        return PLMap.from_json(doc)
    if tag == "hinf":
        return HInfElement.from_json(doc)
    raise ValueError(f"unknown group tag {tag!r}")
