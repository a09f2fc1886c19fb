"""Monomial maps a*z^d, composition semigroups and words.

Words are tuples of 0-based generator indices; the composite of a word
(i_1, ..., i_n) applies generator i_1 first.  They print 1-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyWord, InvalidConfig
from .places import height_rational
from .primes import factor_fraction, ord_p

Word = tuple[int, ...]


@dataclass(frozen=True)
class MonomialMap:
    """z -> a * z^d with a nonzero rational and |d| >= 2."""

    a: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        if self.a == 0:
            raise InvalidConfig("coefficient must be nonzero")
        if abs(self.d) < 2:
            raise InvalidConfig("|degree| must be at least 2")

    def __call__(self, x: Fraction) -> Fraction:
        return self.a * Fraction(x) ** self.d

    def __repr__(self):
        return f"MonomialMap({self.a}*z^{self.d})"


@dataclass(frozen=True)
class Semigroup:
    generators: tuple[MonomialMap, ...]

    def __post_init__(self):
        if not self.generators:
            raise InvalidConfig("need at least one generator")

    @property
    def s(self) -> int:
        return len(self.generators)

    @staticmethod
    def from_pairs(pairs) -> "Semigroup":
        return Semigroup(tuple(MonomialMap(Fraction(a), int(d)) for a, d in pairs))

    @staticmethod
    def from_json(doc: str | dict) -> "Semigroup":
        """Parse {"generators": [{"a": "2", "d": 2}, ...]}."""
        if isinstance(doc, str):
            doc = json.loads(doc)
        try:
            gens = doc["generators"]
            return Semigroup.from_pairs((g["a"], g["d"]) for g in gens)
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidConfig(f"bad semigroup config: {exc}") from exc

    def to_json(self) -> dict:
        return {"generators": [{"a": str(g.a), "d": g.d} for g in self.generators]}

    def support_primes(self) -> tuple[int, ...]:
        """Primes dividing some coefficient's numerator or denominator."""
        ps: set[int] = set()
        for g in self.generators:
            ps.update(p for p, _ in factor_fraction(g.a).exponents)
        return tuple(sorted(ps))

    def coefficient_height_sum(self) -> float:
        return sum(height_rational(g.a) for g in self.generators)


def format_word(w: Word) -> str:
    return ",".join(str(i + 1) for i in w)


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(t) - 1 for t in text.split(","))


def compose_word(G: Semigroup, w: Word) -> tuple[Fraction, int]:
    """(A, D) with the composite of w equal to A * z^D; w must be nonempty."""
    if not w:
        raise EmptyWord("the identity is not a monomial map of |d| >= 2")
    A, D = Fraction(1), 1
    for i in w:
        g = G.generators[i]
        A = g.a * A ** g.d
        D *= g.d
    return A, D


def word_coefficient_exponents(G: Semigroup, w: Word) -> tuple[list[int], int]:
    """Exponent vector k with A_w = prod a_i^{k_i}, plus the degree D_w.

    Exact integer bookkeeping; avoids materializing A for long words.
    """
    k = [0] * G.s
    D = 1
    for i in w:
        d = G.generators[i].d
        k = [e * d for e in k]
        k[i] += 1
        D *= d
    return k, D


def good_reduction(f: MonomialMap, p: int) -> bool:
    """A monomial has good reduction at p exactly when its coefficient is a p-unit."""
    return ord_p(f.a, p) == 0


# the exact size window r(G, v) lives in orbits.window_radius_exact
