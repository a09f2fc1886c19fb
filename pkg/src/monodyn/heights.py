"""Canonical heights for map sequences drawn from a monomial semigroup.

The iterative estimator pushes a point through the sequence symbolically
(factored exponents, never materialized integers) and divides the exact
height of the image by the degree product; the error is certified by the
height-drift bound of the semigroup.  Eventually periodic sequences get the
exact closed form as a finite sum over the support places, with every
max(0, .) decided by exact rational-power comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BadWindow, OverflowGuard, QuadratureSingular, ZeroInput
from .exactreal import PosReal
from .places import INF, Place, height_rational
from .radical import RadicalPoint
from .semigroup import Semigroup, Word, compose_word


@dataclass(frozen=True)
class SequenceSpec:
    """preperiod letters, then the period letters repeated forever."""

    preperiod: Word
    period: Word

    def __post_init__(self):
        if not self.period:
            raise ZeroInput("period must be nonempty")

    def letter(self, i: int) -> int:
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]


def height_drift(G: Semigroup) -> float:
    """c(G): certified bound max_i h(a_i)/|d_i| for |h(f_i(x))/|d_i| - h(x)|."""
    return max(height_rational(g.a) / abs(g.d) for g in G.generators)


@dataclass(frozen=True)
class HeightEstimate:
    value: float
    error_bound: float
    steps: int


def canonical_height_iterative(G: Semigroup, seq: SequenceSpec,
                               beta: Fraction | RadicalPoint,
                               tol: float = 1e-9,
                               max_steps: int = 400) -> HeightEstimate:
    """h(f_{i_1..i_n}(beta)) / |D_n| with n pushed until 2c(G)/|D_n| < tol."""
    if tol <= 0:
        raise ZeroInput("tol must be positive")
    x = beta if isinstance(beta, RadicalPoint) else RadicalPoint.from_rational(beta)
    c = height_drift(G)
    D = 1
    steps = 0
    while 2 * c / abs(D) >= tol and c > 0:
        g = G.generators[seq.letter(steps)]
        x = x.apply(g)
        D *= g.d
        steps += 1
        if steps > max_steps:
            raise OverflowGuard(
                f"no convergence within {max_steps} steps; partial value "
                f"{x.height() / abs(D)}")
    err = 2 * c / abs(D) if c > 0 else 0.0
    return HeightEstimate(x.height() / abs(D), err, steps)


def _period_data(G: Semigroup, g2: Word) -> tuple[Fraction, int]:
    """(b, l) of the period composite, squared when its degree is negative."""
    b, ell = compose_word(G, g2)
    if ell < 0:
        b, ell = b ** (1 + ell), ell * ell
    return b, ell


def canonical_height_closed(G: Semigroup, g1: Word, g2: Word,
                            beta: Fraction | RadicalPoint) -> float:
    """Exact canonical height of beta for the sequence (g1, then g2 forever).

    Finite sum over the support places of
    max(0, log|a|_v / |k| + log|b|_v / (|k|(l-1)) + sgn(k) log|beta|_v),
    each sign decided exactly.
    """
    x = beta if isinstance(beta, RadicalPoint) else RadicalPoint.from_rational(beta)
    if g1:
        a, k = compose_word(G, g1)
    else:
        a, k = Fraction(1), 1
    b, ell = _period_data(G, g2)
    e_a = Fraction(1, abs(k))
    e_b = Fraction(1, abs(k) * (ell - 1))
    sgn = 1 if k > 0 else -1
    places = {INF}
    for val in (a, b):
        places.update(Place(p) for p, _ in _support(val))
    places.update(Place(p) for p in x.support_primes())
    total = 0.0
    for v in places:
        term = (PosReal.of(a) if v.is_archimedean else _p_abs(a, v.p)) ** e_a
        term = term * ((PosReal.of(b) if v.is_archimedean else _p_abs(b, v.p)) ** e_b)
        term = term * (x.abs_exact(v) ** sgn)
        if term.compare_one() > 0:
            total += term.log()
    return total


def _support(x: Fraction):
    from .primes import factor_fraction
    return factor_fraction(x).exponents


def _p_abs(x: Fraction, p: int) -> PosReal:
    from .primes import ord_p
    return PosReal({p: Fraction(-ord_p(x, p))})


def witness_sequence_height(G: Semigroup, word: Word, prefix: int,
                            x: RadicalPoint) -> float:
    """Canonical height of x for the sequence defined by a collision witness."""
    return canonical_height_closed(G, word[:prefix], word[prefix:], x)


def height_lower_bound_nonpreperiodic(G: Semigroup, beta: Fraction,
                                      depth: int) -> float:
    """max over |w| <= depth of (h(f_w(beta)) - 2c(G)) / |D_w|, floored at 0.

    When positive, a certified lower bound for the canonical height of beta
    under every sequence obtained from G.
    """
    if depth < 1:
        raise ZeroInput("depth must be >= 1")
    c = height_drift(G)
    x0 = RadicalPoint.from_rational(beta)
    best = 0.0
    frontier = [(x0, 1)]
    for _ in range(depth):
        nxt = []
        for pt, D in frontier:
            for g in G.generators:
                y = pt.apply(g)
                Dy = D * g.d
                best = max(best, (y.height() - 2 * c) / abs(Dy))
                nxt.append((y, Dy))
        frontier = nxt
    return best


@dataclass(frozen=True)
class EquilibriumRadius:
    v: Place
    radius: float
    exact: PosReal


def equilibrium_radius(G: Semigroup, g1: Word, g2: Word) -> EquilibriumRadius:
    """|a|^(-1/k) |b|^(-1/(k(l-1))) at the archimedean place."""
    if g1:
        a, k = compose_word(G, g1)
    else:
        a, k = Fraction(1), 1
    b, ell = _period_data(G, g2)
    exact = PosReal.of(a, Fraction(-1, k)) * PosReal.of(b, Fraction(-1, k * (ell - 1)))
    return EquilibriumRadius(INF, float(exact), exact)


def jensen_check(radius: float, beta: Fraction | float, nodes: int
                 ) -> tuple[float, float, float]:
    """Quadrature of the circle average of log|z - beta| against its closed form.

    Returns (quadrature value, log max(radius, |beta|), difference).
    """
    if nodes < 16:
        raise BadWindow("need at least 16 nodes")
    if radius <= 0:
        raise ZeroInput("radius must be positive")
    b = float(beta)
    theta = 2 * np.pi * (np.arange(nodes) / nodes)
    z = radius * np.exp(1j * theta) - b
    dist = np.abs(z)
    if np.any(dist == 0):
        if abs(abs(b) - radius) > 1e-12:
            raise QuadratureSingular("node coincided with beta off the circle")
        theta = theta + np.pi / nodes
        dist = np.abs(radius * np.exp(1j * theta) - b)
        if np.any(dist == 0):
            raise QuadratureSingular("beta sits on the quadrature circle")
    lhs = float(np.mean(np.log(dist)))
    rhs = math.log(max(radius, abs(b)))
    return lhs, rhs, lhs - rhs
