"""Structure of nonzero preperiodic points for monomial semigroups.

Every collision f_w(x) = f_{w[:m]}(x) pins its nonzero solutions to a
binomial X^N = prod a_i^{k_i}; the roots decompose as (root of unity) *
(root of a reduced binomial X^M - a_1^{m_1}...a_s^{m_s} b) with b of height
at most the coefficient-height budget.  This module builds those binomials,
the reduced structure, degree bounds, minimal polynomials and the
deduplicated enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .errors import (DegenerateCollision, DegreeCapExceeded, EnumerationCap,
                     NoRationalBElement, RootIsolationFailure,
                     RootOfUnityInput, ZeroInput)
from .galois import ConjugacyClass, class_of_point
from .places import Place, height_exact_arg
from .polynomials import UniPoly, cyclotomic_poly, newton_polygon_root_valuations
from .primes import euler_phi, factor_fraction, max_power_exponent
from .radical import RadicalPoint
from .semigroup import Semigroup, Word, word_coefficient_exponents

DEGREE_CAP = 512


# ---------------------------------------------------------------------------
# collision binomials


@dataclass(frozen=True)
class CollisionBinomial:
    """X^N = a with a = prod a_i^{k_i}, normalized to N > 0."""

    N: int
    exponents: tuple[int, ...]
    a: Fraction

    def roots(self) -> list[RadicalPoint]:
        return [RadicalPoint.from_binomial_root(self.a, self.N, j)
                for j in range(self.N)]


def collision_binomial(G: Semigroup, w: Word, m: int) -> CollisionBinomial:
    """The binomial satisfied by nonzero points with f_w = f_{w[:m]}."""
    if not 0 <= m < len(w):
        raise ValueError("need 0 <= m < |w|")
    kw, Dw = word_coefficient_exponents(G, w)
    km, Dm = word_coefficient_exponents(G, w[:m]) if m else ([0] * G.s, 1)
    N = Dw - Dm
    if N == 0:
        # impossible for |d_i| >= 2 (|D| strictly grows); kept as a guard
        raise DegenerateCollision("equal word and prefix degrees")
    k = [a - b for a, b in zip(km, kw)]
    if N < 0:
        N, k = -N, [-e for e in k]
    a = Fraction(1)
    for g, e in zip(G.generators, k):
        a *= g.a ** e
    return CollisionBinomial(N, tuple(k), a)


# ---------------------------------------------------------------------------
# Capelli's irreducibility criterion for X^M - c


@dataclass(frozen=True)
class CapelliResult:
    kind: str                  # "irreducible" | "split_prime" | "quartic"
    p: int | None = None
    y: Fraction | None = None

    @property
    def reducible(self) -> bool:
        return self.kind != "irreducible"


def _rational_nth_root(c: Fraction, n: int) -> Fraction | None:
    """y with y^n = c, if one exists in Q."""
    if c == 0:
        return Fraction(0)
    if n % 2 == 0 and c < 0:
        return None
    fac = factor_fraction(abs(c))
    y = Fraction(1)
    for p, e in fac.exponents:
        if e % n:
            return None
        y *= Fraction(p) ** (e // n)
    if c < 0:
        y = -y
    return y


def capelli_reducible(M: int, c: Fraction) -> CapelliResult:
    """Reducibility of X^M - c over Q.

    Reducible exactly when c is a p-th power for some prime p | M, or when
    4 | M and c = -4 y^4.
    """
    c = Fraction(c)
    if M < 1:
        raise ValueError("M must be >= 1")
    if c == 0 or c == 1 or c == -1:
        raise RootOfUnityInput("c must not be 0 or a root of unity")
    for p in sorted(factor_fraction(Fraction(M)).as_dict()) if M > 1 else []:
        y = _rational_nth_root(c, p)
        if y is not None:
            return CapelliResult("split_prime", p=p, y=y)
    if M % 4 == 0:
        y = _rational_nth_root(-c / 4, 4)
        if y is not None:
            return CapelliResult("quartic", y=y)
    return CapelliResult("irreducible")


# ---------------------------------------------------------------------------
# reduced structure of the roots (root of unity times gamma)


@dataclass(frozen=True)
class StructuredPreper:
    """One root of a collision binomial in reduced form zeta_Q^e * gamma.

    gamma is the principal root of X^M - radicand with radicand =
    prod a_i^{m_i} * b, and h(b) is certified against the coefficient-height
    budget sum_i h(a_i).
    """

    point: RadicalPoint
    M: int
    m_exponents: tuple[int, ...]
    b: Fraction
    radicand: Fraction
    Q: int
    branch: int
    pure_root_of_unity: bool


def structure_decompose(cb: CollisionBinomial, G: Semigroup) -> list[StructuredPreper]:
    """Reduced presentations of every root of the collision binomial."""
    a, N = cb.a, cb.N
    s = G.s
    check = Fraction(1)
    for g, e in zip(G.generators, cb.exponents):
        check *= g.a ** e
    if check != a:
        raise NoRationalBElement("exponents do not reproduce the constant term")
    if a in (1, -1):
        out = []
        for j in range(N):
            pt = RadicalPoint.from_binomial_root(a, N, j)
            out.append(StructuredPreper(pt, 1, (0,) * s, Fraction(1), Fraction(1),
                                        pt.angle.denominator, 0, True))
        return out
    ell, x, xi = max_power_exponent(a)
    u = math.gcd(N, ell)
    M = N // u
    m_exps = []
    ell_exps = []
    for k in cb.exponents:
        li = k - round(Fraction(k, u)) * u if u > 1 else 0
        m_exps.append((k - li) // u)
        ell_exps.append(li)
    radicand = x ** (ell // u)
    b = radicand
    for g, mi in zip(G.generators, m_exps):
        b /= g.a ** mi
    # b is a rational root of X^u - xi^{-1} prod a_i^{l_i}; verify both sides
    rhs = Fraction(1) / xi
    for g, li in zip(G.generators, ell_exps):
        rhs *= g.a ** li
    if b ** u != rhs:
        raise NoRationalBElement(f"inconsistent reduced radicand for {cb}")
    budget = 1
    for g in G.generators:
        budget *= height_exact_arg(g.a)
    if height_exact_arg(b) > budget:
        raise NoRationalBElement("reduced element exceeds the height budget")
    gamma = RadicalPoint.from_binomial_root(radicand, M, 0)
    out = []
    for j in range(N):
        pt = RadicalPoint.from_binomial_root(a, N, j)
        zeta = pt.div(gamma)
        if not zeta.modulus.is_one():
            raise AssertionError("root/gamma is not a root of unity")
        out.append(StructuredPreper(pt, M, tuple(m_exps), b, radicand,
                                    zeta.angle.denominator, j % M, False))
    return out


@dataclass(frozen=True)
class DegreeBound:
    lower: Fraction
    M: int
    Q: int
    w_field: int
    phi_Q: int


def degree_lower_bound(sp: StructuredPreper) -> DegreeBound:
    """max(M/2, max(phi(Q), M/2) / min(phi(Q), M)), with 2 roots of unity in Q."""
    phi = euler_phi(sp.Q)
    lower = max(Fraction(sp.M, 2),
                Fraction(max(Fraction(phi), Fraction(sp.M, 2)),
                         min(phi, sp.M)))
    return DegreeBound(lower, sp.M, sp.Q, 2, phi)


# ---------------------------------------------------------------------------
# minimal polynomials of radical points


_minpoly_cache: dict = {}


def minimal_polynomial(x: RadicalPoint, degree_cap: int = DEGREE_CAP) -> UniPoly:
    """The monic minimal polynomial of x over Q, exact.

    Fast paths: rational scaling of a cyclotomic polynomial (rational
    modulus) and pure real radicals (binomials are irreducible in canonical
    form).  Otherwise the Galois orbit is expanded numerically at doubling
    precision and the integer-rounded result is certified by exact division
    into the point's rational binomial.
    """
    cached = _minpoly_cache.get(x.key())
    if cached is not None:
        if cached.degree > degree_cap:
            raise DegreeCapExceeded(
                f"degree {cached.degree} exceeds cap {degree_cap}")
        return cached
    poly = _minimal_polynomial_uncached(x, degree_cap)
    if len(_minpoly_cache) > 8192:
        _minpoly_cache.clear()
    _minpoly_cache[x.key()] = poly
    return poly


def _minimal_polynomial_uncached(x: RadicalPoint, degree_cap: int) -> UniPoly:
    cls = class_of_point(x)
    if cls.degree > degree_cap:
        raise DegreeCapExceeded(f"degree {cls.degree} exceeds cap {degree_cap}")
    c0, M0 = cls.c0, cls.M0
    if M0 == 1:
        # x = zeta_q^e * c0 with c0 rational
        q = x.angle.denominator
        value = cls.modulus.as_fraction()
        poly = cyclotomic_poly(q).scale_arg(Fraction(1, value))
        poly = poly.monic()
        assert poly.degree == cls.degree
        return poly
    if x.angle in (0, Fraction(1, 2)):
        val_sign = 1 if x.angle == 0 else -1
        const = (Fraction(val_sign) ** M0) * c0
        poly = UniPoly.binomial(M0, const)
        assert poly.degree == cls.degree
        return poly
    return _orbit_polynomial(cls)


def _orbit_polynomial(cls: ConjugacyClass) -> UniPoly:
    n0, a0 = cls.representative.rational_binomial()
    den, num = a0.denominator, a0.numerator
    # the monic orbit product has coefficients in (1/lc) Z with lc | den
    log2_mod = max(0.0, cls.modulus.log()) / math.log(2)
    prec = int(cls.degree * (1.5 + log2_mod)) + 96
    while prec <= 1 << 22:
        with mp.workprec(prec):
            mod = mp.e ** mp.mpf(_modulus_log_mp(cls.modulus))
            coeffs = [mp.mpc(1)]
            for t in cls.angles:
                root = mod * mp.expjpi(2 * mp.mpf(t.numerator) / t.denominator)
                coeffs = _mul_linear(coeffs, root)
            for lc in _candidate_leads(den, cls):
                rounded = []
                ok = True
                for c in coeffs[:-1]:
                    re = mp.nint(c.real * lc)
                    if abs(c.real * lc - re) > 0.25 or abs(c.imag * lc) > 0.25:
                        ok = False
                        break
                    rounded.append(int(re))
                if not ok:
                    continue
                cand = UniPoly.from_coeffs(
                    [Fraction(r, lc) for r in rounded] + [Fraction(1)])
                binom = UniPoly.binomial(n0, a0)
                if (binom % cand).is_zero:
                    return cand
        prec *= 2
    raise RootIsolationFailure("orbit polynomial reconstruction failed")


def _candidate_leads(den: int, cls: ConjugacyClass):
    # any multiple of the true leading coefficient works for the rounding,
    # and lc | den(a0); try the usually-exact modulus-derived value first
    out = []
    exact = cls.modulus ** cls.degree
    if exact.is_rational():
        out.append(exact.as_fraction().denominator)
    if den not in out:
        out.append(den)
    return out


def _mul_linear(coeffs, root):
    # multiply sum c_i X^i by (X - root)
    out = [mp.mpc(0)] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        out[i + 1] += c
        out[i] -= c * root
    return out


def _modulus_log_mp(modulus) -> mp.mpf:
    total = mp.mpf(0)
    for p, e in modulus.exps.items():
        total += mp.mpf(e.numerator) / e.denominator * mp.log(p)
    return total


def conjugates(x: RadicalPoint, v: Place, degree_cap: int = DEGREE_CAP):
    """Embedding data of the conjugates of x at v.

    Archimedean: the complex values (shared modulus, orbit angles).  Finite:
    the multiset of valuations from the Newton polygon of the minimal
    polynomial.
    """
    cls = class_of_point(x)
    if v.is_archimedean:
        mod = float(cls.modulus)
        return [mod * complex(math.cos(2 * math.pi * float(t)),
                              math.sin(2 * math.pi * float(t)))
                for t in cls.angles]
    poly = minimal_polynomial(x, degree_cap=degree_cap)
    return newton_polygon_root_valuations(poly, v.p)


# ---------------------------------------------------------------------------
# enumeration


@dataclass(frozen=True)
class EnumeratedPoint:
    point: RadicalPoint
    word: Word
    prefix: int
    structure: StructuredPreper


def word_pairs(G: Semigroup, n_max: int):
    """(w, m) pairs ordered by (|w|, lex, m)."""
    level: list[Word] = [()]
    for _ in range(n_max):
        nxt = []
        for w in level:
            for i in range(G.s):
                nxt.append(w + (i,))
        level = nxt
        for w in level:
            for m in range(len(w)):
                yield w, m


def enumerate_preperiodic(G: Semigroup, n_max: int,
                          node_cap: int = 10 ** 6) -> list[EnumeratedPoint]:
    """All nonzero preperiodic points from word pairs of length <= n_max.

    Deduplicated by canonical form; each point keeps its first witness in
    (|w|, lex, m) order.  Zero and infinity, always preperiodic, are not
    listed.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    seen: dict = {}
    out: list[EnumeratedPoint] = []
    budget = 0
    for w, m in word_pairs(G, n_max):
        cb = collision_binomial(G, w, m)
        budget += cb.N
        if budget > node_cap:
            raise EnumerationCap(f"root budget {node_cap} exceeded")
        for sp in structure_decompose(cb, G):
            key = sp.point.key()
            if key not in seen:
                seen[key] = True
                out.append(EnumeratedPoint(sp.point, w, m, sp))
    return out
