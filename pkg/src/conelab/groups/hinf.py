"""H_inf = < x_1, x_2, ... | x_i x_{i-1} x_i^-1 = x_{i-1}^-1, x_i x_j = x_j x_i (|i-j| > 1) >.

Elements are kept in the normal form x_1^{a_1} x_2^{a_2} ... x_m^{a_m} with
a_m != 0.  Words are sequences of nonzero signed generator indices: ``3``
is x_3 and ``-3`` is x_3^-1.
"""

from __future__ import annotations

from .. import kernels


class HInfElement:
    __slots__ = ("exponents", "_hash")

    def __init__(self, exponents=()):
        exps = [int(e) for e in exponents]
        while exps and exps[-1] == 0:
            exps.pop()
        self.exponents = tuple(exps)
        self._hash = None

    @classmethod
    def _raw(cls, exps: tuple) -> "HInfElement":
        obj = cls.__new__(cls)
        obj.exponents = exps
        obj._hash = None
        return obj

    @property
    def top(self) -> int:
        """Largest index with a nonzero exponent (0 for the identity)."""
        return len(self.exponents)

    def is_identity(self) -> bool:
        return not self.exponents

    def __mul__(self, other: "HInfElement") -> "HInfElement":
        return hinf_mul(self, other)

    def inverse(self) -> "HInfElement":
        return hinf_inv(self)

    def __eq__(self, other):
        if not isinstance(other, HInfElement):
            return NotImplemented
        return self.exponents == other.exponents

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("hinf", self.exponents))
        return self._hash

    def __repr__(self):
        return f"HInfElement({list(self.exponents)})"

    def __str__(self):
        if not self.exponents:
            return "id"
        return " ".join(
            f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}"
            for i, a in enumerate(self.exponents)
            if a
        )

    def word(self) -> list[int]:
        out = []
        for i, a in enumerate(self.exponents):
            out += [(i + 1) if a > 0 else -(i + 1)] * abs(a)
        return out

    def to_json(self) -> dict:
        return {"group": "hinf", "exponents": list(self.exponents)}

    @classmethod
    def from_json(cls, doc) -> "HInfElement":
        if doc.get("group", "hinf") != "hinf":
            raise ValueError("not an H_inf element")
        return cls(doc["exponents"])


HINF_IDENTITY = HInfElement()


def hinf_generator(letter: int) -> HInfElement:
    if letter == 0:
        raise ValueError("generator indices start at 1")
    i = abs(letter)
    return HInfElement._raw((0,) * (i - 1) + (1 if letter > 0 else -1,))


def hinf_mul(u: HInfElement, v: HInfElement) -> HInfElement:
    return HInfElement._raw(kernels.hinf_mul(u.exponents, v.exponents))


def hinf_inv(u: HInfElement) -> HInfElement:
    return HInfElement._raw(kernels.hinf_inv(u.exponents))


def hinf_from_word(word) -> HInfElement:
    g = HINF_IDENTITY
    for letter in word:
        g = hinf_mul(g, hinf_generator(int(letter)))
    return g
