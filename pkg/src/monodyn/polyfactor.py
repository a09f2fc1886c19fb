"""Factorization of univariate polynomials over Q.

Pipeline: integer content, squarefree decomposition, factorization modulo a
good small prime (distinct-degree plus equal-degree splitting), quadratic
Hensel lifting past the Mignotte bound, bounded-subset recombination.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from .errors import DegreeCapExceeded, ZeroInput
from .polynomials import UniPoly, squarefree_decomposition
from .primes import factorint, is_prime

DEGREE_CAP = 512

# ---------------------------------------------------------------------------
# GF(p)[X] arithmetic on dense low-to-high int lists


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _psub(a, b, p):
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
           for i in range(max(len(a), len(b)))]
    return _ptrim(out)


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _ptrim(out)


def _pdivmod(a, b, p):
    a = a[:]
    db, lb = len(b) - 1, b[-1]
    inv = pow(lb, -1, p)
    q = [0] * max(0, len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] * inv % p
        if c:
            q[k] = c
            for i, cb in enumerate(b):
                a[k + i] = (a[k + i] - c * cb) % p
    del a[db:]
    return _ptrim(q), _ptrim(a)


def _pmod(a, b, p):
    return _pdivmod(a, b, p)[1]


def _pgcd(a, b, p):
    a, b = _ptrim(a[:]), _ptrim(b[:])
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _pgcdext(a, b, p):
    """s, t with s*a + t*b = 1 mod p for coprime a, b."""
    r0, r1 = _ptrim(a[:]), _ptrim(b[:])
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        t0, t1 = t1, _psub(t0, _pmul(q, t1, p), p)
    inv = pow(r0[0], -1, p)
    return [c * inv % p for c in s0], [c * inv % p for c in t0]


def _ppowmod(a, e, m, p):
    out = [1]
    a = _pmod(a, m, p)
    while e:
        if e & 1:
            out = _pmod(_pmul(out, a, p), m, p)
        a = _pmod(_pmul(a, a, p), m, p)
        e >>= 1
    return out


def _pderiv(a, p):
    return _ptrim([i * c % p for i, c in enumerate(a)][1:])


def _distinct_degree(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """[(product of irreducible factors of degree d, d)] for monic squarefree f."""
    out = []
    v = f[:]
    h = [0, 1]
    d = 0
    while len(v) - 1 >= 2 * (d + 1):
        d += 1
        h = _ppowmod(h, p, v, p)
        g = _pgcd(_psub(h, [0, 1], p), v, p)
        if len(g) > 1:
            out.append((g, d))
            v, _ = _pdivmod(v, g, p)
            h = _pmod(h, v, p)
    if len(v) > 1:
        out.append((v, len(v) - 1))
    return out


def _equal_degree_split(g: list[int], d: int, p: int,
                        rng: random.Random) -> list[list[int]]:
    """Cantor-Zassenhaus split of a product of degree-d irreducibles (p odd)."""
    out = []
    work = [g]
    while work:
        cur = work.pop()
        if len(cur) - 1 == d:
            out.append(cur)
            continue
        while True:
            u = _ptrim([rng.randrange(p) for _ in range(len(cur) - 1)])
            if not u:
                continue
            t = _ppowmod(u, (p ** d - 1) // 2, cur, p)
            w = _pgcd(_psub(t, [1], p), cur, p)
            if 1 < len(w) < len(cur):
                work.append(w)
                work.append(_pdivmod(cur, w, p)[0])
                break
    return out


def _factor_mod_p(f: list[int], p: int, rng: random.Random) -> list[list[int]]:
    """Monic irreducible factors of a squarefree monic f over GF(p)."""
    out = []
    for g, d in _distinct_degree(f, p):
        out.extend(_equal_degree_split(g, d, p, rng))
    return out


# ---------------------------------------------------------------------------
# Hensel lifting (von zur Gathen-Gerhard style quadratic step on a tree)


def _zmul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % m
    while out and out[-1] == 0:
        out.pop()
    return out


def _zadd(a, b, m):
    out = [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m
           for i in range(max(len(a), len(b)))]
    while out and out[-1] == 0:
        out.pop()
    return out


def _zsub(a, b, m):
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m
           for i in range(max(len(a), len(b)))]
    while out and out[-1] == 0:
        out.pop()
    return out


def _zdivmod_monic(a, b, m):
    """divmod by monic b, coefficients mod m."""
    a = a[:]
    db = len(b) - 1
    q = [0] * max(0, len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] % m
        if c:
            q[k] = c
            for i, cb in enumerate(b):
                a[k + i] = (a[k + i] - c * cb) % m
    del a[db:]
    while a and a[-1] == 0:
        a.pop()
    while q and q[-1] == 0:
        q.pop()
    return q, a


def _hensel_step(f, g, h, s, t, m):
    """One quadratic lift: from f=gh, sg+th=1 (mod m) to the same mod m^2.

    h must be monic; degrees: deg s < deg h, deg t < deg g.
    """
    m2 = m * m
    f = [c % m2 for c in f]
    e = _zsub(f, _zmul(g, h, m2), m2)
    q, r = _zdivmod_monic(_zmul(s, e, m2), h, m2)
    g1 = _zadd(g, _zadd(_zmul(t, e, m2), _zmul(q, g, m2), m2), m2)
    h1 = _zadd(h, r, m2)
    b = _zsub(_zadd(_zmul(s, g1, m2), _zmul(t, h1, m2), m2), [1], m2)
    c, d = _zdivmod_monic(_zmul(s, b, m2), h1, m2)
    s1 = _zsub(s, d, m2)
    t1 = _zsub(t, _zadd(_zmul(t, b, m2), _zmul(c, g1, m2), m2), m2)
    return g1, h1, s1, t1


def _hensel_lift_pair(f, g, h, p, k):
    """Lift f = g*h from mod p to mod p^(2^k); h monic mod p."""
    s, t = _pgcdext(g, h, p)
    m = p
    for _ in range(k):
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m = m * m
    return g, h


def _hensel_tree(f: list[int], facs: list[list[int]], p: int, k: int) -> list[list[int]]:
    """Lift f = lc(f) * prod(facs) (mod p, facs monic) to mod p^(2^k)."""
    big = p ** (2 ** k)
    if len(facs) == 1:
        inv = pow(f[-1] % big, -1, big)
        return [[c * inv % big for c in f]]
    mid = (len(facs) + 1) // 2
    g = [f[-1] % p]
    for fac in facs[:mid]:
        g = _pmul(g, fac, p)
    h = [1]
    for fac in facs[mid:]:
        h = _pmul(h, fac, p)
    gl, hl = _hensel_lift_pair([c % big for c in f], g, h, p, k)
    return _hensel_tree(gl, facs[:mid], p, k) + _hensel_tree(hl, facs[mid:], p, k)


# ---------------------------------------------------------------------------
# Zassenhaus over Z


def _mignotte_bound(f: list[int]) -> int:
    norm2 = math.isqrt(sum(c * c for c in f)) + 1
    return (1 << (len(f) - 1)) * norm2 * abs(f[-1])


def _symmetric(c: int, m: int) -> int:
    c %= m
    return c - m if 2 * c > m else c


def _int_primitive(f: list[int]) -> list[int]:
    g = 0
    for c in f:
        g = math.gcd(g, c)
    if g == 0:
        return f
    f = [c // g for c in f]
    if f[-1] < 0:
        f = [-c for c in f]
    return f


def _int_exact_div(f: list[int], g: list[int]) -> list[int] | None:
    """f / g over Z when the division is exact, else None."""
    if not g or len(g) > len(f):
        return None
    r = f[:]
    q = [0] * (len(f) - len(g) + 1)
    lg = g[-1]
    for k in range(len(f) - len(g), -1, -1):
        c = r[k + len(g) - 1]
        if c % lg:
            return None
        c //= lg
        q[k] = c
        if c:
            for i, cg in enumerate(g):
                r[k + i] -= c * cg
    return q if not any(r[: len(g) - 1]) else None


def _next_prime(p: int) -> int:
    p += 2 if p % 2 else 1
    while not is_prime(p):
        p += 2
    return p


def _good_prime_factorization(f: list[int], rng: random.Random):
    """Pick, among several good primes, the one with fewest modular factors."""
    best = None
    p = 2
    tried = 0
    while tried < 6:
        p = _next_prime(p)
        if f[-1] % p == 0:
            continue
        fp = [c % p for c in f]
        if _pgcd(fp, _pderiv(fp, p), p) != [1]:
            continue
        tried += 1
        inv = pow(f[-1], -1, p)
        monic = [c * inv % p for c in fp]
        facs = _factor_mod_p(monic, p, rng)
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        if len(facs) == 1:
            break
    return best


def _factor_squarefree_z(f: list[int], rng: random.Random) -> list[list[int]]:
    """Irreducible factors over Z of a squarefree primitive f, deg >= 1."""
    if len(f) - 1 == 1:
        return [f]
    p, modular = _good_prime_factorization(f, rng)
    if len(modular) == 1:
        return [f]
    bound = 2 * _mignotte_bound(f) + 1
    k = 0
    while p ** (2 ** k) < bound:
        k += 1
    big = p ** (2 ** k)
    lifted = _hensel_tree([c % big for c in f], modular, p, k)
    out = []
    remaining = f[:]
    idx = list(range(len(lifted)))
    r = 1
    while 2 * r <= len(idx):
        found = True
        while found and 2 * r <= len(idx):
            found = False
            for subset in itertools.combinations(idx, r):
                cand = [remaining[-1] % big]
                for i in subset:
                    cand = _zmul(cand, lifted[i], big)
                cand = [_symmetric(c, big) for c in cand]
                g = _int_primitive(cand)
                q = _int_exact_div(remaining, g)
                if q is not None:
                    out.append(g)
                    remaining = _int_primitive(q)
                    idx = [i for i in idx if i not in subset]
                    found = True
                    break
        r += 1
    if len(remaining) > 1:
        out.append(_int_primitive(remaining))
    return out


def factor_poly(f: UniPoly, degree_cap: int = DEGREE_CAP,
                seed: int = 0) -> list[tuple[UniPoly, int]]:
    """Complete factorization over Q into primitive irreducibles.

    Returns [(g_i, m_i)] with f = content * prod g_i^m_i; the g_i are
    integer-primitive with positive leading coefficients, sorted by degree
    then coefficients.
    """
    if f.degree < 1:
        raise ZeroInput("factor_poly expects degree >= 1")
    if f.degree > degree_cap:
        raise DegreeCapExceeded(f"degree {f.degree} exceeds cap {degree_cap}")
    rng = random.Random(seed or 0xC0FFEE)
    out: list[tuple[UniPoly, int]] = []
    k = 0
    cs = list(f.coeffs)
    while cs and cs[0] == 0:
        cs.pop(0)
        k += 1
    if k:
        out.append((UniPoly.x(), k))
    g = UniPoly(tuple(cs))
    if g.degree >= 1:
        for sqf, mult in squarefree_decomposition(g):
            _, prim = sqf.content_and_primitive()
            for piece in _factor_squarefree_z(prim.int_coeffs(), rng):
                out.append((UniPoly.from_coeffs(piece), mult))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return out


def factorization_content(f: UniPoly) -> Fraction:
    """The rational c with f = c * prod g_i^m_i over the factor_poly output."""
    c, _ = f.content_and_primitive()
    return c


# ---------------------------------------------------------------------------
# Independent irreducibility evidence (for cross-checks in tests)


def _divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorint(n).items():
        out = [d * p ** i for d in out for i in range(e + 1)]
    return sorted(out)


def rational_roots(f: UniPoly) -> list[Fraction]:
    """All rational roots via the numerator/denominator divisor sieve."""
    if f.degree < 1:
        return []
    _, prim = f.content_and_primitive()
    cs = prim.int_coeffs()
    out = []
    if cs[0] == 0:
        out.append(Fraction(0))
        while cs[0] == 0:
            cs.pop(0)
    for num in _divisors(abs(cs[0])):
        for den in _divisors(abs(cs[-1])):
            for s in (1, -1):
                r = Fraction(s * num, den)
                if r not in out and prim(r) == 0:
                    out.append(r)
    return sorted(out)


def irreducibility_certificate(f: UniPoly, primes_to_try: int = 12) -> str:
    """'irreducible', 'reducible' or 'unknown', independent of factor_poly.

    Degree 1 is irreducible; degrees 2 and 3 are decided by the rational root
    sieve.  Beyond that, an inert prime or a pinched set of attainable factor
    degrees certifies irreducibility, a rational root certifies reducibility,
    and anything else is 'unknown'.
    """
    if f.degree < 1:
        raise ZeroInput("need degree >= 1")
    if f.degree == 1:
        return "irreducible"
    _, prim = f.content_and_primitive()
    if rational_roots(prim):
        return "reducible"
    if f.degree <= 3:
        return "irreducible"
    cs = prim.int_coeffs()
    if cs[0] == 0:
        return "reducible"
    possible = set(range(f.degree + 1))
    p = 101
    tried = 0
    while tried < primes_to_try:
        p = _next_prime(p)
        if cs[-1] % p == 0:
            continue
        fp = [c % p for c in cs]
        if _pgcd(fp, _pderiv(fp, p), p) != [1]:
            continue
        tried += 1
        degs = []
        inv = pow(fp[-1], -1, p)
        for g, d in _distinct_degree([c * inv % p for c in fp], p):
            degs.extend([d] * ((len(g) - 1) // d))
        if degs == [f.degree]:
            return "irreducible"
        sums = {0}
        for d in degs:
            sums |= {s + d for s in sums}
        possible &= sums
        if possible == {0, f.degree}:
            return "irreducible"
    return "unknown"
