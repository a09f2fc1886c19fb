"""Galois orbits of radical points and conjugacy classes of binomial roots.

Setting: a point zeta * rho with rho = c0^(1/M0) > 0 in canonical form
(c0 > 0 rational, M0 minimal) and zeta = e^(2 pi i t).  Every conjugate is
another root-of-unity multiple of rho, so orbits are computed inside the
Galois field F = Q(zeta_L, rho): its automorphisms are the pairs
(k in (Z/L)^x, m in Z/M0) acting by zeta_L -> zeta_L^k, rho -> zeta_M0^m rho.

All pairs occur, except that when M0 is even and sqrt(c0) lies in Q(zeta_L)
(conductor of Q(sqrt(c0)) divides L) the single constraint
(-1)^m = chi(k) applies, with chi the quadratic character of Q(sqrt(c0)).
This is complete: the canonical form forces X^M0 - c0 irreducible, and the
maximal abelian subfield of Q(rho) is Q(sqrt(c0)) for even M0 and Q for odd
M0, so no deeper entanglement with the cyclotomic part is possible.

Class norms: for a class of degree D inside X^N - a, with q' the order of
e^(2 pi i M0 t),

    |Nm(beta - alpha)| = |W|^(D / (M0 phi(q'))),
    W = c0^phi(q') * Phi_{q'}(beta^M0 / c0),

obtained by multiplying out the m-fibers (prod_m (x - zeta_M0^m y) = x^M0 -
y^M0) and collapsing the k-sum to primitive q'-th roots.  In the entangled
case W covers the class together with its twin (angles shifted by 1/M0) and
per-class splitting falls back to the expanded minimal polynomial.
Valuations of W come from lifting-the-exponent arithmetic on the Moebius
pieces x^j - 1, never from materializing W.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath as mp

from .errors import BetaIsConjugate, ZeroInput
from .exactreal import PosReal
from .primes import (euler_phi, factorint, kronecker, ord_p,
                     quadratic_conductor, squarefree_kernel)
from .radical import RadicalPoint

# ---------------------------------------------------------------------------
# unit group generators


@lru_cache(maxsize=None)
def unit_group_generators(n: int) -> tuple[int, ...]:
    """Generators of (Z/n)^x, assembled from prime-power parts by CRT."""
    if n <= 2:
        return ()
    gens = []
    fac = factorint(n)
    for p, e in fac.items():
        q = p ** e
        rest = n // q
        if p == 2:
            if e == 1:
                locals_ = []
            elif e == 2:
                locals_ = [3]
            else:
                locals_ = [q - 1, 5]
        else:
            locals_ = [_primitive_root_mod_pk(p, e)]
        for g in locals_:
            # lift to x = g mod q, x = 1 mod rest
            if rest == 1:
                gens.append(g % n)
            else:
                inv = pow(rest % q, -1, q)
                x = (1 + rest * ((g - 1) * inv % q)) % n
                gens.append(x)
    return tuple(g for g in gens if g % n != 1)


def _primitive_root_mod_pk(p: int, e: int) -> int:
    g = _primitive_root_mod_p(p)
    if e == 1:
        return g
    if pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _primitive_root_mod_p(p: int) -> int:
    fac = list(factorint(p - 1))
    g = 2
    while True:
        if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
            return g
        g += 1


# ---------------------------------------------------------------------------
# conjugacy classes of the roots of X^N - a


@dataclass(frozen=True)
class ConjugacyClass:
    """A Galois orbit inside the root set of X^N = a."""

    N: int
    a: Fraction
    modulus: PosReal              # shared by every root
    angles: tuple[Fraction, ...]  # sorted orbit angles, len = degree
    c0: Fraction                  # canonical radicand of the modulus
    M0: int                       # canonical radical index
    entangled: bool

    @property
    def degree(self) -> int:
        return len(self.angles)

    @property
    def representative(self) -> RadicalPoint:
        return RadicalPoint(self.modulus, self.angles[0])

    def points(self) -> list[RadicalPoint]:
        return [RadicalPoint(self.modulus, t) for t in self.angles]

    def angle_order(self) -> int:
        """Order q' of e^(2 pi i M0 t); class invariant."""
        t = self.angles[0]
        return (self.M0 * t - int(self.M0 * t)).denominator

    def progressions(self) -> int:
        """Number of step-1/M0 arithmetic progressions forming the angles."""
        residues = {(t * self.M0) - int(t * self.M0) for t in self.angles}
        return len(residues)

    def min_angle_distance_to(self, t0: Fraction) -> float:
        """min over the orbit of the circular distance of angles to t0."""
        best = min(abs(float(t - t0) - round(float(t - t0))) for t in self.angles)
        return best


def _mod1(t: Fraction) -> Fraction:
    return t - (t.numerator // t.denominator)


def entanglement(c0: Fraction, M0: int, L: int) -> tuple[bool, int]:
    """(entangled, chi conductor-discriminant) for sqrt(c0) against zeta_L."""
    if M0 % 2:
        return False, 0
    d = squarefree_kernel(c0)
    if d == 1:
        # sqrt(c0) rational; the m-parity is then a free choice, no constraint
        return False, 0
    cond = quadratic_conductor(d)
    if L % cond:
        return False, 0
    disc = d if d % 4 == 1 else 4 * d
    return True, disc


_decompose_cache: dict[tuple[int, Fraction], list] = {}


def decompose_binomial_roots(N: int, a: Fraction) -> list[ConjugacyClass]:
    """Conjugacy classes of the N roots of X^N = a (N >= 1, a != 0)."""
    a = Fraction(a)
    if a == 0:
        raise ZeroInput("binomial needs a != 0")
    cached = _decompose_cache.get((N, a))
    if cached is not None:
        return cached
    modulus = PosReal.of(a, Fraction(1, N))
    c0, M0 = modulus.radical_form()
    L = 2 * N
    ent, disc = entanglement(c0, M0, L)
    # angles are (j + s0)/N with s0 = 0 (a > 0) or 1/2 (a < 0)
    shift2 = 0 if a > 0 else 1   # angles are (2j + shift2)/(2N)
    parent = list(range(N))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    step = N // M0  # index shift of the angle move t -> t + 1/M0

    def k_move(j: int, k: int) -> int:
        # angle (2j + shift2)/(2N) -> k * same, reduced to an index
        num = k * (2 * j + shift2)
        return ((num - shift2) // 2) % N

    gens = unit_group_generators(L)
    if not ent:
        moves = [lambda j, k=k: k_move(j, k) for k in gens]
        moves.append(lambda j: (j + step) % N)
    else:
        def make(k):
            par = 0 if kronecker(disc, k) == 1 else 1
            return lambda j: (k_move(j, k) + par * step) % N
        moves = [make(k) for k in gens]
        moves.append(lambda j: (j + 2 * step) % N)
    for j in range(N):
        for mv in moves:
            union(j, mv(j))
    groups: dict[int, list[int]] = {}
    for j in range(N):
        groups.setdefault(find(j), []).append(j)
    out = []
    for members in groups.values():
        angles = tuple(sorted(Fraction(2 * j + shift2, 2 * N) for j in members))
        out.append(ConjugacyClass(N, a, modulus, angles, c0, M0, ent))
    out.sort(key=lambda c: c.angles[0])
    if len(_decompose_cache) > 4096:
        _decompose_cache.clear()
    _decompose_cache[(N, a)] = out
    return out


def class_of_point(x: RadicalPoint) -> ConjugacyClass:
    """The Galois orbit of a radical point, via its minimal rational binomial."""
    n0, a0 = x.rational_binomial()
    for cls in decompose_binomial_roots(n0, a0):
        if x.angle in cls.angles:
            return cls
    raise AssertionError("point missing from its own binomial")


def galois_orbit_angles(x: RadicalPoint) -> tuple[Fraction, ...]:
    return class_of_point(x).angles


# ---------------------------------------------------------------------------
# class norms through W = c0^phi(q') Phi_{q'}(beta^M0 / c0)


def _phi_at_pm1(n: int, sign: int) -> Fraction:
    """Phi_n(1) or Phi_n(-1) in closed form."""
    if sign == 1:
        if n == 1:
            return Fraction(0)
        fac = factorint(n)
        return Fraction(next(iter(fac))) if len(fac) == 1 else Fraction(1)
    if n == 1:
        return Fraction(-2)
    if n == 2:
        return Fraction(0)
    if n % 2 == 0:
        half = n // 2
        fac = factorint(half)
        if len(fac) == 1:
            return Fraction(next(iter(fac)))
    return Fraction(1)


@dataclass(frozen=True)
class ClassNormData:
    """log and valuations of |Nm(beta - alpha)| for a conjugacy class.

    scale is deg/(M0 phi(q')); in the entangled case the data covers the
    class together with its 1/M0-shifted twin and twin_combined is True.
    """

    beta: Fraction
    c0: Fraction
    M0: int
    qprime: int
    x: Fraction            # beta^M0 / c0
    scale: Fraction
    twin_combined: bool

    def is_zero(self) -> bool:
        """Whether W = 0, i.e. beta sits in the covered orbit(s)."""
        if self.x == 1:
            return self.qprime == 1
        if self.x == -1:
            return self.qprime == 2
        return False

    def ord_w(self, p: int) -> Fraction:
        """ord_p(W), exact."""
        phi = euler_phi(self.qprime)
        total = Fraction(phi * ord_p(self.c0, p))
        if self.x in (1, -1):
            val = _phi_at_pm1(self.qprime, 1 if self.x == 1 else -1)
            if val == 0:
                raise BetaIsConjugate("beta lies in the orbit")
            return total + ord_p(val, p)
        for d, mu in _moebius_divisors(self.qprime):
            j = self.qprime // d
            total += mu * Fraction(_ord_power_minus_one(self.x, j, p))
        return total

    def ord_norm(self, p: int) -> Fraction:
        return self.scale * self.ord_w(p)

    def log_w(self) -> float:
        phi = euler_phi(self.qprime)
        total = phi * _log_abs_fraction(self.c0)
        if self.x in (1, -1):
            val = _phi_at_pm1(self.qprime, 1 if self.x == 1 else -1)
            if val == 0:
                raise BetaIsConjugate("beta lies in the orbit")
            return total + _log_abs_fraction(val)
        for d, mu in _moebius_divisors(self.qprime):
            j = self.qprime // d
            total += mu * _log_abs_power_minus_one(self.x, j)
        return total

    def log_norm(self) -> float:
        return float(self.scale) * self.log_w()


def _moebius_divisors(n: int):
    primes = list(factorint(n)) if n > 1 else []
    out = [(1, 1)]
    for p in primes:
        out += [(d * p, -mu) for d, mu in out]
    return out


def class_norm_data(cls: ConjugacyClass, beta: Fraction) -> ClassNormData:
    beta = Fraction(beta)
    if beta == 0:
        raise ZeroInput("beta must be nonzero")
    qprime = cls.angle_order()
    x = beta ** cls.M0 / cls.c0
    scale = Fraction(cls.degree, cls.M0 * euler_phi(qprime))
    if cls.entangled:
        scale = Fraction(2 * cls.degree, cls.M0 * euler_phi(qprime))
        # covers class + twin; both have the same degree by the sigma-action
    data = ClassNormData(beta, cls.c0, cls.M0, qprime, x, scale, cls.entangled)
    return data


def twin_class(cls: ConjugacyClass) -> ConjugacyClass:
    """The 1/M0-angle-shifted partner orbit (entangled case)."""
    shifted = _mod1(cls.angles[0] + Fraction(1, cls.M0))
    for cand in decompose_binomial_roots(cls.N, cls.a):
        if shifted in cand.angles:
            return cand
    raise AssertionError("twin not found")


# --- valuation and log helpers on x^j - 1 -----------------------------------


def _ord_power_minus_one(x: Fraction, j: int, p: int) -> Fraction:
    """ord_p(x^j - 1) for rational x not a root of unity unless +-1 handled."""
    if x == 1:
        raise ZeroInput("x = 1 gives the zero value")
    if x == -1:
        if j % 2 == 0:
            raise ZeroInput("x = -1, even j gives the zero value")
        return Fraction(ord_p(Fraction(-2), p))
    v = ord_p(x, p)
    if v > 0:
        return Fraction(0)
    if v < 0:
        return Fraction(j * v)
    num, den = x.numerator, x.denominator
    if p == 2:
        e1 = _int_ord(num - den, 2)
        if j % 2 == 1:
            return Fraction(e1)
        e2 = _int_ord(num + den, 2)
        return Fraction(e1 + e2 + _int_ord(j, 2) - 1)
    r = _mult_order(x, p)
    if j % r:
        return Fraction(0)
    e0 = _ord_xr_minus_one(num, den, r, p)
    return Fraction(e0 + _int_ord(j // r, p))


def _int_ord(n: int, p: int) -> int:
    if n == 0:
        raise ZeroInput("ord of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@lru_cache(maxsize=None)
def _p_minus_one_factors(p: int) -> tuple[int, ...]:
    return tuple(factorint(p - 1))


def _mult_order(x: Fraction, p: int) -> int:
    xb = x.numerator * pow(x.denominator, -1, p) % p
    r = p - 1
    for q in _p_minus_one_factors(p):
        while r % q == 0 and pow(xb, r // q, p) == 1:
            r //= q
    return r


def _ord_xr_minus_one(num: int, den: int, r: int, p: int) -> int:
    """ord_p(num^r - den^r) for p-units, adaptive modular doubling."""
    k = 8
    while True:
        mod = p ** k
        if (pow(num, r, mod) - pow(den, r, mod)) % mod:
            break
        k *= 2
    diff = pow(num, r, p ** k) - pow(den, r, p ** k)
    v = 0
    while diff % p == 0:
        diff //= p
        v += 1
    return v


def _log_abs_fraction(x: Fraction) -> float:
    from .places import _log_int
    return _log_int(abs(x.numerator)) - _log_int(x.denominator)


def _log_abs_power_minus_one(x: Fraction, j: int) -> float:
    """log|x^j - 1| for rational x, stable for huge exponent sizes."""
    if x == 1:
        raise ZeroInput("log|0|")
    if x == -1:
        if j % 2 == 0:
            raise ZeroInput("log|0|")
        return math.log(2)
    L = j * _log_abs_fraction(abs(x))
    if L > 40:
        return L          # |x^j - 1| = |x|^j within exp(-40)
    if L < -40:
        return 0.0
    # moderate magnitude: x^j may still have a huge representation, so work
    # with high-precision logs rather than the value itself
    with mp.workprec(120):
        lx = mp.log(abs(x.numerator)) - mp.log(x.denominator)
        if x > 0 or j % 2 == 0:
            val = mp.expm1(j * lx)       # x^j - 1 with x^j = e^(j lx) > 0
            return float(mp.log(abs(val)))
        # x^j < 0: |x^j - 1| = |x|^j + 1
        return float(mp.log(mp.exp(j * lx) + 1))


def strip_supported(n: int, primes) -> int:
    """Divide out of |n| every factor in primes; returns the cofactor."""
    n = abs(n)
    for p in primes:
        while n % p == 0:
            n //= p
    return n
