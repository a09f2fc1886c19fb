"""Certified complex root isolation and heights of algebraic numbers.

Simultaneous (Durand-Kerner) iteration in mpmath arithmetic.  The a
posteriori certificate is the classical Weierstrass inclusion: for monic f of
degree n with pairwise distinct approximations z_i and corrections
W_i = f(z_i)/prod_{j!=i}(z_i - z_j), every root lies in the union of the
disks D(z_i, n|W_i|), and disjoint disks isolate exactly one root each.
Precision doubles until the disks are disjoint and small enough for the
requested output accuracy.
"""

from __future__ import annotations

import math

import mpmath as mp

from .errors import ReducibleInput, RootIsolationFailure, ZeroInput
from .polynomials import UniPoly
from .polyfactor import factor_poly


def isolate_roots(f: UniPoly, tol: float = 1e-15, max_prec: int = 4096
                  ) -> list[tuple[complex, float]]:
    """[(approximation, certified radius)] covering all roots of f.

    f must be squarefree.  Each returned disk contains exactly one root and
    the radii are below tol * max(1, |z|).
    """
    if f.degree < 1:
        raise ZeroInput("need degree >= 1")
    n = f.degree
    monic = [c / f.lead for c in f.coeffs]
    prec = 64
    while prec <= max_prec:
        with mp.workprec(prec):
            cs = [mp.mpf(c.numerator) / mp.mpf(c.denominator) for c in monic]
            zs = _durand_kerner(cs, n, prec)
            if zs is not None:
                ws = [_weierstrass(cs, zs, i) for i in range(n)]
                radii = [n * abs(w) for w in ws]
                if _disks_ok(zs, radii, tol):
                    return [(complex(z), float(r)) for z, r in zip(zs, radii)]
        prec *= 2
    raise RootIsolationFailure(f"no certificate at {max_prec} bits")


def _durand_kerner(cs, n, prec):
    # spread initial points on a circle below the Cauchy root bound
    radius = 1 + max(abs(c) for c in cs[:-1]) if n else mp.mpf(1)
    zs = [radius * mp.expjpi(mp.mpf(2 * i) / n + mp.mpf(1) / (2 * n + 1))
          for i in range(n)]
    target = mp.mpf(2) ** (-(prec * 3) // 4)
    for _ in range(200 + 20 * n):
        maxw = mp.mpf(0)
        for i in range(n):
            w = _weierstrass(cs, zs, i)
            zs[i] = zs[i] - w
            maxw = max(maxw, abs(w))
        if maxw < target * max(mp.mpf(1), radius):
            return zs
    return None


def _weierstrass(cs, zs, i):
    z = zs[i]
    val = mp.mpf(0)
    for c in reversed(cs):
        val = val * z + c
    den = mp.mpf(1)
    for j, zj in enumerate(zs):
        if j != i:
            den *= (z - zj)
    if den == 0:
        return mp.mpf(1)  # forces another round at higher precision
    return val / den


def _disks_ok(zs, radii, tol):
    n = len(zs)
    for i in range(n):
        if radii[i] > tol * max(1, abs(zs[i])):
            return False
    for i in range(n):
        for j in range(i + 1, n):
            if abs(zs[i] - zs[j]) <= radii[i] + radii[j]:
                return False
    return True


def mahler_height(f: UniPoly, tol: float = 1e-13) -> float:
    """(1/deg) log M(f^) for the integer-primitive form f^ of f.

    Equals the height of any root when f is irreducible.  The root moduli are
    certified to a radius small enough that the total error stays below tol.
    """
    if f.degree < 1:
        raise ZeroInput("need degree >= 1")
    _, prim = f.content_and_primitive()
    n = prim.degree
    # per-root certified relative error must sum below tol
    disks = isolate_roots(prim, tol=tol / (4 * n))
    total = math.log(abs(prim.lead))
    for z, r in disks:
        m = abs(z)
        if m + r <= 1:
            continue
        if m - r >= 1:
            total += math.log(m)
        else:
            # root modulus within r of 1: log+ contributes at most ~r
            total += 0.0
    return total / n


def height_from_minpoly(f: UniPoly, tol: float = 1e-13) -> float:
    """Height of the algebraic numbers with minimal polynomial f."""
    if f.degree < 1:
        raise ZeroInput("need degree >= 1")
    factors = factor_poly(f)
    if len(factors) != 1 or factors[0][1] != 1:
        raise ReducibleInput("minimal polynomial must be irreducible")
    return mahler_height(f, tol=tol)
