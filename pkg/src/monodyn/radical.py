"""Exact arithmetic on radical points zeta * c^(1/M).

A RadicalPoint is |c|^(1/M) * e^(2 pi i t) with c rational, M minimal and t a
rational angle in [0,1).  Internally the modulus is a factored positive real
(prime -> rational exponent), which makes equality, absolute values at every
place, heights and monomial dynamics exact.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroInput
from .exactreal import PosReal
from .places import Place
from .semigroup import MonomialMap


def _mod1(t: Fraction) -> Fraction:
    return t - (t.numerator // t.denominator)


@dataclass(frozen=True)
class RadicalPoint:
    modulus: PosReal
    angle: Fraction

    def __post_init__(self):
        object.__setattr__(self, "angle", _mod1(Fraction(self.angle)))

    # constructors ---------------------------------------------------------
    @staticmethod
    def from_rational(x: Fraction | int) -> "RadicalPoint":
        x = Fraction(x)
        if x == 0:
            raise ZeroInput("zero is not a radical point")
        return RadicalPoint(PosReal.of(x), Fraction(0) if x > 0 else Fraction(1, 2))

    @staticmethod
    def from_binomial_root(a: Fraction | int, N: int, j: int) -> "RadicalPoint":
        """The j-th root of X^N = a, ordered by increasing angle."""
        a = Fraction(a)
        if a == 0:
            raise ZeroInput("binomial must have nonzero constant term")
        if N < 1:
            raise ValueError("N must be positive")
        t = Fraction(j, N) if a > 0 else Fraction(2 * j + 1, 2 * N)
        return RadicalPoint(PosReal.of(a, Fraction(1, N)), t)

    @staticmethod
    def root_of_unity(t: Fraction) -> "RadicalPoint":
        return RadicalPoint(PosReal.one(), t)

    # canonical data --------------------------------------------------------
    @property
    def c(self) -> Fraction:
        """Canonical radicand: the point is |c|^(1/M) e^(2 pi i t), c > 0."""
        return self.modulus.radical_form()[0]

    @property
    def M(self) -> int:
        M = 1
        for e in self.modulus.exps.values():
            M = M * e.denominator // math.gcd(M, e.denominator)
        return M

    @property
    def q(self) -> int:
        """Order of the angle part e^(2 pi i t)."""
        return self.angle.denominator

    def key(self):
        return (self.modulus._key, self.angle)

    def __hash__(self):
        return hash(self.key())

    def __eq__(self, other):
        return isinstance(other, RadicalPoint) and self.key() == other.key()

    # value views ------------------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return self.modulus.is_rational() and self.angle in (0, Fraction(1, 2))

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not a rational point")
        v = self.modulus.as_fraction()
        return v if self.angle == 0 else -v

    def complex_value(self) -> complex:
        return float(self.modulus) * cmath.exp(2j * math.pi * float(self.angle))

    # arithmetic ---------------------------------------------------------------
    def apply(self, f: MonomialMap) -> "RadicalPoint":
        """Image a * x^d under a monomial map, in canonical form."""
        sgn = Fraction(0) if f.a > 0 else Fraction(1, 2)
        return RadicalPoint(PosReal.of(f.a) * self.modulus ** f.d,
                            _mod1(f.d * self.angle + sgn))

    def pow(self, n: int) -> "RadicalPoint":
        return RadicalPoint(self.modulus ** n, _mod1(n * self.angle))

    def mul(self, other: "RadicalPoint") -> "RadicalPoint":
        return RadicalPoint(self.modulus * other.modulus,
                            _mod1(self.angle + other.angle))

    def div(self, other: "RadicalPoint") -> "RadicalPoint":
        return RadicalPoint(self.modulus / other.modulus,
                            _mod1(self.angle - other.angle))

    def scale(self, x: Fraction) -> "RadicalPoint":
        return self.mul(RadicalPoint.from_rational(x))

    # places -------------------------------------------------------------------
    def ord_at(self, p: int) -> Fraction:
        """The common p-adic valuation of all conjugates."""
        return self.modulus.ord_at(p)

    def abs_log(self, v: Place) -> float:
        """log|x|_v (common to all conjugates)."""
        if v.is_archimedean:
            return self.modulus.log()
        return -float(self.ord_at(v.p)) * math.log(v.p)

    def abs_exact(self, v: Place) -> PosReal:
        """|x|_v as an exact positive real."""
        if v.is_archimedean:
            return self.modulus
        return PosReal({v.p: -self.ord_at(v.p)})

    def support_primes(self) -> tuple[int, ...]:
        return tuple(sorted(self.modulus.exps))

    # height ----------------------------------------------------------------
    def height(self) -> float:
        """h(x) = h(c)/M, assembled place by place with exact signs."""
        h = self.modulus.log() if self.modulus.compare_one() > 0 else 0.0
        for p, e in self.modulus.exps.items():
            if e < 0:
                h += -e * math.log(p)
        return float(h)

    def height_le(self, bound_num: PosReal) -> bool:
        """Exact test h(x) <= log(bound_num)."""
        acc = PosReal.one()
        if self.modulus.compare_one() > 0:
            acc = acc * self.modulus
        for p, e in self.modulus.exps.items():
            if e < 0:
                acc = acc * PosReal({p: -e})
        return acc <= bound_num

    # rational power relation ---------------------------------------------------
    def rational_binomial(self) -> tuple[int, Fraction]:
        """Minimal n with x^n rational; returns (n, x^n)."""
        M = self.M
        T = _mod1(self.angle * M)
        qT = T.denominator
        k_zero = qT
        k_half = None
        if qT % 2 == 0:
            u = T.numerator
            try:
                k_half = (qT // 2) * pow(u, -1, qT) % qT
                if k_half == 0:
                    k_half = qT
            except ValueError:
                k_half = None
        k = k_zero if k_half is None else min(k_zero, k_half)
        n = M * k
        val = (self.modulus ** n).as_fraction()
        if _mod1(self.angle * n) == Fraction(1, 2):
            val = -val
        return n, val

    # serialization --------------------------------------------------------------
    def to_json(self) -> dict:
        c, M = self.modulus.radical_form()
        return {"c": str(c), "M": M, "t": str(self.angle)}

    def __repr__(self):
        c, M = self.modulus.radical_form()
        if self.is_rational:
            return f"RadicalPoint({self.as_fraction()})"
        root = f"{c}" if M == 1 else f"{c}^(1/{M})"
        return f"RadicalPoint({root} * e(2πi*{self.angle}))"
