"""Dense univariate polynomials over Q.

Coefficients are stored low-to-high as exact Fractions with the trailing
zeros trimmed, so ``coeffs[-1]`` is the leading coefficient of a nonzero
polynomial and the zero polynomial is the empty tuple.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroInput
from .primes import factorint, ord_p


def _trim(cs: list[Fraction]) -> tuple[Fraction, ...]:
    end = len(cs)
    while end > 0 and cs[end - 1] == 0:
        end -= 1
    return tuple(cs[:end])


@dataclass(frozen=True)
class UniPoly:
    coeffs: tuple[Fraction, ...]

    @staticmethod
    def from_coeffs(cs) -> "UniPoly":
        return UniPoly(_trim([Fraction(c) for c in cs]))

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly(())

    @staticmethod
    def one() -> "UniPoly":
        return UniPoly((Fraction(1),))

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly((Fraction(0), Fraction(1)))

    @staticmethod
    def monomial(n: int, c=1) -> "UniPoly":
        c = Fraction(c)
        if c == 0:
            return UniPoly(())
        return UniPoly(tuple([Fraction(0)] * n + [c]))

    @staticmethod
    def binomial(n: int, a) -> "UniPoly":
        """X^n - a."""
        cs = [Fraction(0)] * (n + 1)
        cs[0] = -Fraction(a)
        cs[n] += 1
        return UniPoly(_trim(cs))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ZeroInput("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, x):
        out = Fraction(0) if isinstance(x, (int, Fraction)) else 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] += c
        return UniPoly(_trim(cs))

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if other == 0:
                return UniPoly(())
            return UniPoly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly(())
        cs = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    cs[i + j] += ca * cb
        return UniPoly(_trim(cs))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power")
        out = UniPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        d, lc = other.degree, other.lead
        if self.degree < d:
            return UniPoly(()), self
        r = list(self.coeffs)
        q = [Fraction(0)] * (self.degree - d + 1)
        for k in range(self.degree - d, -1, -1):
            c = r[k + d] / lc
            if c:
                q[k] = c
                for i, oc in enumerate(other.coeffs):
                    r[k + i] -= c * oc
        return UniPoly(_trim(q)), UniPoly(_trim(r[:d]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "UniPoly") -> bool:
        return (other % self).is_zero

    def derivative(self) -> "UniPoly":
        return UniPoly(_trim([i * c for i, c in enumerate(self.coeffs)][1:]))

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        lc = self.lead
        return UniPoly(tuple(c / lc for c in self.coeffs))

    def shift(self, a) -> "UniPoly":
        """p(X + a) by Horner-style synthetic division."""
        a = Fraction(a)
        cs = list(self.coeffs)
        n = len(cs)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                cs[j] += a * cs[j + 1]
        return UniPoly(_trim(cs))

    def compose_monomial(self, k: int) -> "UniPoly":
        """p(X^k)."""
        if k < 1:
            raise ValueError("k must be positive")
        cs = [Fraction(0)] * (self.degree * k + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            cs[i * k] = c
        return UniPoly(_trim(cs))

    def scale_arg(self, r) -> "UniPoly":
        """p(r * X)."""
        r = Fraction(r)
        return UniPoly(_trim([c * r ** i for i, c in enumerate(self.coeffs)]))

    def content_and_primitive(self) -> tuple[Fraction, "UniPoly"]:
        """c, p with self = c * p, p in Z[X] primitive with positive lead."""
        if self.is_zero:
            return Fraction(0), self
        num_gcd = 0
        den_lcm = 1
        for c in self.coeffs:
            num_gcd = math.gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        content = Fraction(num_gcd, den_lcm)
        if self.lead < 0:
            content = -content
        return content, UniPoly(tuple(c / content for c in self.coeffs))

    def int_coeffs(self) -> list[int]:
        """Coefficients as integers; raises if any is not integral."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError("non-integer coefficient")
            out.append(c.numerator)
        return out

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_strings(ss) -> "UniPoly":
        return UniPoly.from_coeffs([Fraction(s) for s in ss])

    def __repr__(self):
        if self.is_zero:
            return "UniPoly('0')"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            term = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if c == 1 and term:
                s = term
            elif c == -1 and term:
                s = f"-{term}"
            else:
                s = f"{c}{'*' + term if term else ''}"
            parts.append(s)
        return "UniPoly('" + " + ".join(parts).replace("+ -", "- ") + "')"


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: f = c * prod g_i^i with the g_i squarefree, coprime."""
    if f.degree < 1:
        return []
    out = []
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f // a
    c = fp // a
    i = 1
    while b.degree >= 1:
        d = c - b.derivative()
        g = poly_gcd(b, d)
        if g.degree >= 1:
            out.append((g.monic(), i))
        b = b // g
        c = d // g
        i += 1
    return out


_cyclo_cache: dict[int, UniPoly] = {}
_cyclo_lock = threading.Lock()


def cyclotomic_poly(n: int) -> UniPoly:
    """The n-th cyclotomic polynomial, of degree phi(n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    got = _cyclo_cache.get(n)
    if got is not None:
        return got
    if n == 1:
        out = UniPoly.from_coeffs([-1, 1])
    else:
        # X^n - 1 divided by the cyclotomics of the proper divisors
        out = UniPoly.binomial(n, 1)
        for d in range(1, n):
            if n % d == 0:
                out = out // cyclotomic_poly(d)
    with _cyclo_lock:
        _cyclo_cache.setdefault(n, out)
    return out


def cyclotomic_value(n: int, x: Fraction) -> Fraction:
    """Phi_n(x) for rational x via the Moebius product, no coefficients needed."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return x - 1
    num = Fraction(1)
    den = Fraction(1)
    for d, mu in _moebius_divisors(n):
        t = x ** (n // d) - 1
        if t == 0:
            # x is a root of unity; fall back to coefficients
            return cyclotomic_poly(n)(x)
        if mu == 1:
            num *= t
        elif mu == -1:
            den *= t
    return num / den


def _moebius_divisors(n: int) -> list[tuple[int, int]]:
    """(d, mu(d)) over squarefree divisors d of n."""
    primes = list(factorint(n))
    out = [(1, 1)]
    for p in primes:
        out += [(d * p, -mu) for d, mu in out]
    return out


def roots_of_unity_orders_dividing(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def newton_polygon_root_valuations(f: UniPoly, p: int) -> list[Fraction]:
    """ord_p of the nonzero roots of f in an algebraic closure of Q_p.

    Lower convex hull of (i, ord_p(c_i)); each hull segment of slope s and
    horizontal length L contributes L roots of valuation -s.  Zero roots are
    split off first and not reported.
    """
    if f.is_zero:
        raise ZeroInput("Newton polygon of the zero polynomial")
    cs = list(f.coeffs)
    shift = 0
    while cs and cs[0] == 0:
        cs.pop(0)
        shift += 1
    pts = [(i, Fraction(ord_p(c, p))) for i, c in enumerate(cs) if c != 0]
    if len(pts) < 2:
        return []
    hull = [pts[0]]
    for pt in pts[1:]:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # keep the hull lower-convex
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    out: list[Fraction] = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slope = (y2 - y1) / (x2 - x1)
        out.extend([-slope] * (x2 - x1))
    return sorted(out)
