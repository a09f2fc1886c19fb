"""Explicit lower bounds for linear forms in logarithms and the
verification statistics built on them: distance bounds to preperiodic
points, disc counting, circle discrepancy, truncated-log test functions and
counts of p-adically close roots of unity.

The linear-form quantity 1 - prod alpha_i^(b_i) is always computed as an
exact rational before any logarithm; vanishing is an exact branch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (BadWindow, BetaIsConjugate, DegenerateDegree, LambdaZero,
                     ZeroAlpha, ZeroInput)
from .galois import ConjugacyClass, class_of_point
from .places import Place, height_rational
from .polynomials import newton_polygon_root_valuations
from .preper import minimal_polynomial
from .primes import euler_phi, ord_p
from .radical import RadicalPoint
from .semigroup import Semigroup


def linform_degree_constant(n: int, d: int) -> float:
    """12 d (16 e d)^(3n+2) max(1, log d)^2."""
    if n < 1 or d < 1:
        raise ZeroInput("need n, d >= 1")
    return 12 * d * (16 * math.e * d) ** (3 * n + 2) * max(1.0, math.log(d)) ** 2


def theta_floor(d: int) -> float:
    """2 / (d (log 3d)^3), the height floor entering the Theta product."""
    return 2 / (d * math.log(3 * d) ** 3)


def theta(alphas, d: int = 1) -> float:
    """prod max(h(alpha_i), floor) over the multiplicative inputs."""
    fl = theta_floor(d)
    out = 1.0
    for a in alphas:
        a = Fraction(a)
        if a == 0:
            raise ZeroAlpha("alphas must be nonzero")
        out *= max(height_rational(a), fl)
    return out


@dataclass(frozen=True)
class LinFormInstance:
    alphas: tuple[Fraction, ...]
    bs: tuple[int, ...]
    v: Place

    def __post_init__(self):
        if len(self.alphas) != len(self.bs):
            raise ZeroInput("length mismatch")
        if any(a == 0 for a in self.alphas):
            raise ZeroAlpha("alphas must be nonzero")
        if all(b == 0 for b in self.bs):
            raise ZeroInput("exponents must not all vanish")

    def lam(self) -> Fraction:
        """prod alpha_i^{b_i} - 1, exact."""
        out = Fraction(1)
        for a, b in zip(self.alphas, self.bs):
            out *= Fraction(a) ** b
        return out - 1

    def B(self) -> int:
        return max(3, max(abs(b) for b in self.bs))


def _log_abs_at(x: Fraction, v: Place) -> float:
    if x == 0:
        raise ZeroInput("log of zero")
    if v.is_archimedean:
        from .places import _log_int
        return _log_int(abs(x.numerator)) - _log_int(x.denominator)
    return -ord_p(x, v.p) * math.log(v.p)


def linform_bound(inst: LinFormInstance) -> float:
    """The proved lower bound for log|Lambda|_v (a negative number)."""
    lam = inst.lam()
    if lam == 0:
        raise LambdaZero("degenerate multiplicative relation")
    n = len(inst.alphas)
    Nv = inst.v.residue_norm()
    return (-linform_degree_constant(n, 1) * (Nv / math.log(Nv))
            * theta(inst.alphas, 1) * math.log(inst.B()))


def verify_linform(inst: LinFormInstance) -> bool:
    """log|Lambda|_v > bound; False would indicate an implementation bug."""
    lam = inst.lam()
    if lam == 0:
        raise LambdaZero("degenerate multiplicative relation")
    return _log_abs_at(lam, inst.v) > linform_bound(inst)


# ---------------------------------------------------------------------------
# truncated-log test function


def test_function_energy(delta: float, R: float) -> float:
    """Dirichlet energy of z -> log min(R, max(delta, |z|)): log R - log delta."""
    if not 0 < delta < R:
        raise BadWindow("need 0 < delta < R")
    return math.log(R) - math.log(delta)


def test_function_lipschitz(delta: float) -> float:
    if delta <= 0:
        raise BadWindow("delta must be positive")
    return 1 / delta


# ---------------------------------------------------------------------------
# circle discrepancy


def discrepancy_on_circle(angles) -> float:
    return float(discrepancy_exact(angles))


def discrepancy_exact(angles) -> Fraction:
    """sup over circular arcs of |empirical mass - arc length|, exact.

    For sorted distinct angles the supremum equals 1/n + max_j (j/n - t_j)
    - min_j (j/n - t_j); discrepancy_brute scans all endpoint arcs directly
    and serves as the independent oracle in the tests.
    """
    pts = sorted(Fraction(t) - (Fraction(t).numerator // Fraction(t).denominator)
                 for t in angles)
    n = len(pts)
    if n == 0:
        raise ZeroInput("need at least one angle")
    u = [Fraction(j, n) - pts[j] for j in range(n)]
    return Fraction(1, n) + max(u) - min(u)


def discrepancy_brute(angles) -> Fraction:
    """The same supremum by direct enumeration of closed and open arcs with
    endpoints at sample points."""
    pts = sorted(Fraction(t) - (Fraction(t).numerator // Fraction(t).denominator)
                 for t in angles)
    n = len(pts)
    if n == 0:
        raise ZeroInput("need at least one angle")
    best = Fraction(1) if n == 1 else Fraction(1, n)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            length = pts[j] - pts[i]
            if length < 0:
                length += 1
            count_closed = (j - i) % n + 1
            count_open = count_closed - 2
            best = max(best,
                       abs(Fraction(count_closed, n) - length),
                       abs(Fraction(count_open, n) - length))
    return best


# ---------------------------------------------------------------------------
# disc counting against the circle equilibrium measure


def circle_disc_measure(center_dist: float, disc_radius: float,
                        circle_radius: float) -> float:
    """Normalized arc-length mass of |z| = r inside D(w, R), by chord geometry."""
    d, R, r = center_dist, disc_radius, circle_radius
    if d + r <= R:
        return 1.0
    if abs(d - r) >= R:
        return 0.0
    cosv = (d * d + r * r - R * R) / (2 * d * r)
    cosv = min(1.0, max(-1.0, cosv))
    return math.acos(cosv) / math.pi


def disc_count_check(points, w: complex, eps: float, radius: float,
                     C: float, kappa: float = 1.0):
    """(lhs, rhs, ok) for the equidistribution disc-count inequality."""
    if not 0 < eps < 1 / math.e:
        raise BadWindow("need 0 < eps < 1/e")
    n = len(points)
    if n < 2:
        raise ZeroInput("need at least two points")
    lhs = sum(1 for z in points if abs(z - w) <= eps)
    mass = circle_disc_measure(abs(w), math.e * eps, radius)
    rhs = mass * n + C * (1 / (eps * n ** (1 / kappa - 1))
                          + math.sqrt(n * math.log(n)))
    return lhs, rhs, lhs <= rhs


# ---------------------------------------------------------------------------
# distance lower bound to preperiodic points


@dataclass(frozen=True)
class DistanceBoundCert:
    """Concrete constant for the preperiodic-distance bound, all factors shown.

    C2 = c1(s+2, 1) * (N(v)/log N(v)) * Theta_cap * 11 + 25, where 11 bounds
    log(MQ)/log(deg) through the degree chain (phi(Q) >= sqrt(Q/2),
    deg >= max(M/2, phi(Q)/min(phi(Q), M))) and 25 absorbs the additive
    h(beta) + log(MQ) terms and the root-of-unity branch.
    """

    C2: float
    c1: float
    nv_factor: float
    theta_cap: float
    chain_exponent: int
    additive: int


def distance_bound_constant(G: Semigroup, v: Place) -> DistanceBoundCert:
    s = G.s
    fl = theta_floor(1)
    theta_cap = max(1.0, fl)
    total = 0.0
    for g in G.generators:
        h = height_rational(g.a)
        theta_cap *= max(h, fl)
        total += h
    theta_cap *= max(total, fl)
    c1 = linform_degree_constant(s + 2, 1)
    Nv = v.residue_norm()
    nv = Nv / math.log(Nv)
    C2 = c1 * nv * theta_cap * 11 + 25
    return DistanceBoundCert(C2, c1, nv, theta_cap, 11, 25)


def _observed_min_log_distance(cls: ConjugacyClass, beta: Fraction, v: Place,
                               degree_cap: int) -> float:
    if v.is_archimedean:
        mod = float(cls.modulus)
        b = float(beta)
        best = None
        for t in cls.angles:
            ang = 2 * math.pi * float(t)
            dist2 = mod * mod + b * b - 2 * mod * b * math.cos(ang)
            best = dist2 if best is None else min(best, dist2)
        if best <= 0:
            raise BetaIsConjugate("zero distance")
        return 0.5 * math.log(best)
    poly = minimal_polynomial(cls.representative, degree_cap=degree_cap)
    shifted = poly.shift(beta)   # roots are sigma(alpha) - beta
    if shifted.coeffs[0] == 0:
        raise BetaIsConjugate("beta is a conjugate")
    vals = newton_polygon_root_valuations(shifted, v.p)
    return -float(max(vals)) * math.log(v.p)


def distance_lower_bound(G: Semigroup, beta: Fraction, alpha: RadicalPoint,
                         v: Place, degree_cap: int = 512,
                         MQ: int | None = None):
    """(bound, observed_min, ok) for min_sigma log|sigma(alpha) - beta|_v.

    bound = C2 (h(beta)+1) log(deg) for deg >= 2.  Degree-1 points use the
    pre-absorption chain value with log max(3, MQ); with MQ = 1 the bound is
    trivial and reported ok by convention.
    """
    beta = Fraction(beta)
    cls = class_of_point(alpha)
    cert = distance_bound_constant(G, v)
    h_beta = height_rational(beta)
    deg = cls.degree
    if MQ is None:
        # canonical radical index and the angle order of the twist
        q = alpha.angle.denominator
        MQ = cls.M0 * q
    observed = _observed_min_log_distance(cls, beta, v, degree_cap)
    if deg >= 2:
        bound = cert.C2 * (h_beta + 1) * math.log(deg)
        return bound, observed, observed > -bound
    if MQ == 1:
        raise DegenerateDegree("rational positive point; bound trivial")
    bound = (h_beta + math.log(MQ)
             + cert.c1 * cert.nv_factor * cert.theta_cap * (h_beta + 1)
             * math.log(max(3, MQ)))
    return bound, observed, observed > -bound


# ---------------------------------------------------------------------------
# p-adically close roots of unity


def unity_neighbor_count(p: int, eps: float) -> int:
    """Number of roots of unity xi in an algebraic closure of Q_p with
    |1 - xi|_p < eps: only p-power orders come closer than 1, with
    |1 - xi|_p = p^(-1/(p^(n-1)(p-1))) at exact order p^n."""
    if not 0 < eps < 1:
        raise BadWindow("need 0 < eps < 1")
    count = 1  # xi = 1
    n = 1
    while True:
        size = p ** (-1.0 / (p ** (n - 1) * (p - 1)))
        if size >= eps:
            break
        count += euler_phi(p ** n)
        n += 1
    return count
