"""Exact positive reals of the form prod p^(e_p) with rational exponents.

These are the moduli that arise from radicals of rationals.  Comparison,
multiplication and rational powers are exact; floats are derived views.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

from .errors import ZeroInput
from .primes import factor_fraction


class PosReal:
    """Immutable factored positive real: prod p^{exps[p]}."""

    __slots__ = ("exps", "_key")

    def __init__(self, exps: dict[int, Fraction] | None = None):
        cleaned = {}
        for p, e in (exps or {}).items():
            e = Fraction(e)
            if e != 0:
                cleaned[p] = e
        object.__setattr__(self, "exps", cleaned)
        object.__setattr__(self, "_key", tuple(sorted(cleaned.items())))

    def __setattr__(self, *a):
        raise AttributeError("PosReal is immutable")

    @staticmethod
    def one() -> "PosReal":
        return PosReal({})

    @staticmethod
    def of(x: Fraction | int, power: Fraction | int = 1) -> "PosReal":
        """|x|^power for nonzero rational x."""
        x = Fraction(x)
        if x == 0:
            raise ZeroInput("PosReal of zero")
        power = Fraction(power)
        fac = factor_fraction(abs(x))
        return PosReal({p: e * power for p, e in fac.exponents})

    # multiplicative structure -------------------------------------------
    def __mul__(self, other: "PosReal") -> "PosReal":
        exps = dict(self.exps)
        for p, e in other.exps.items():
            exps[p] = exps.get(p, 0) + e
        return PosReal(exps)

    def __truediv__(self, other: "PosReal") -> "PosReal":
        exps = dict(self.exps)
        for p, e in other.exps.items():
            exps[p] = exps.get(p, 0) - e
        return PosReal(exps)

    def __pow__(self, power: Fraction | int) -> "PosReal":
        power = Fraction(power)
        return PosReal({p: e * power for p, e in self.exps.items()})

    # exact order ---------------------------------------------------------
    def compare_one(self) -> int:
        """Sign of log(self): -1, 0, +1, certified.

        By unique factorization a nonempty exponent vector never gives 1, so
        the sign of sum e_p log p is decided by (in order): a same-sign fast
        path, a float sum with a rigorous error bound, high-precision
        escalation, and an exact big-integer comparison as the last resort.
        """
        if not self.exps:
            return 0
        if all(e > 0 for e in self.exps.values()):
            return 1
        if all(e < 0 for e in self.exps.values()):
            return -1
        s = 0.0
        mag = 0.0
        for p, e in self.exps.items():
            t = float(e) * math.log(p)
            s += t
            mag += abs(t)
        if abs(s) > mag * 1e-12 + 5e-300:
            return 1 if s > 0 else -1
        import mpmath as mp
        for prec in (128, 512, 2048, 8192):
            with mp.workprec(prec):
                acc = mp.mpf(0)
                for p, e in self.exps.items():
                    acc += mp.mpf(e.numerator) / e.denominator * mp.log(p)
                eps = mp.mpf(2) ** (-prec + 16) * (mag + 1)
                if abs(acc) > eps:
                    return 1 if acc > 0 else -1
        denoms = [e.denominator for e in self.exps.values()]
        L = reduce(lambda a, b: a * b // math.gcd(a, b), denoms, 1)
        bits = sum(abs(e * L) * p.bit_length() for p, e in self.exps.items())
        if bits > 10 ** 8:
            raise ValueError("exact comparison beyond the size budget")
        num = 1
        den = 1
        for p, e in self.exps.items():
            k = int(e * L)
            if k > 0:
                num *= p ** k
            else:
                den *= p ** (-k)
        return (num > den) - (num < den)

    def __eq__(self, other):
        return isinstance(other, PosReal) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other):
        return (self / other).compare_one() < 0

    def __le__(self, other):
        return (self / other).compare_one() <= 0

    def __gt__(self, other):
        return (self / other).compare_one() > 0

    def __ge__(self, other):
        return (self / other).compare_one() >= 0

    # views ----------------------------------------------------------------
    def is_one(self) -> bool:
        return not self.exps

    def is_rational(self) -> bool:
        return all(e.denominator == 1 for e in self.exps.values())

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not rational")
        out = Fraction(1)
        for p, e in self.exps.items():
            out *= Fraction(p) ** int(e)
        return out

    def radical_form(self) -> tuple[Fraction, int]:
        """(c, M) with self = c^(1/M), M minimal positive, c > 0 rational."""
        M = 1
        for e in self.exps.values():
            M = M * e.denominator // math.gcd(M, e.denominator)
        c = Fraction(1)
        for p, e in self.exps.items():
            c *= Fraction(p) ** int(e * M)
        return c, M

    def ord_at(self, p: int) -> Fraction:
        """Exponent of p: self = p^{ord} * (p-unit part)."""
        return self.exps.get(p, Fraction(0))

    def log(self) -> float:
        return float(sum(e * math.log(p) for p, e in self.exps.items()))

    def __float__(self):
        return math.exp(self.log())

    def __repr__(self):
        if not self.exps:
            return "PosReal(1)"
        parts = [f"{p}^({e})" for p, e in sorted(self.exps.items())]
        return "PosReal(" + "*".join(parts) + ")"
