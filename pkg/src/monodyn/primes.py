"""Integer and rational factorization primitives.

Deterministic Miller-Rabin below 3.3 * 10^24, Brent-cycle Pollard rho above
trial division, and exponent-map factorizations of rationals.  Everything here
is exact; floats never enter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import RootOfUnityInput, ZeroInput

# Deterministic witness set, valid for all n < 3,317,044,064,679,887,385,961,981.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
    151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of composite n, Brent's cycle variant."""
    if n % 2 == 0:
        return 2
    gcd = math.gcd
    seed = 1
    while True:
        y = (seed * 2 + 1) % n
        c = (seed * 3 + 7) % n or 1
        m = 256
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * (x - y) % n
                g = gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(x - ys, n)
        if g != n:
            return g
        seed += 1


def _sieve_primes(limit: int) -> tuple[int, ...]:
    mark = bytearray([1]) * (limit + 1)
    mark[0:2] = b"\0\0"
    for i in range(2, int(limit ** 0.5) + 1):
        if mark[i]:
            mark[i * i::i] = b"\0" * len(mark[i * i::i])
    return tuple(i for i in range(limit + 1) if mark[i])


_TRIAL_PRIMES = _sieve_primes(1000)


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; n must be nonzero."""
    if n == 0:
        raise ZeroInput("0 has no factorization")
    n = abs(n)
    out: dict[int, int] = {}
    for p in _TRIAL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        # perfect-power peel before rho: cheap and helps rho's worst case
        root = _perfect_power(m)
        if root is not None:
            b, k = root
            stack.extend([b] * k)
            continue
        d = _pollard_brent(m)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(out.items()))


def _perfect_power(n: int) -> tuple[int, int] | None:
    """(b, k) with n = b^k for a prime k, or None (prime k suffices here)."""
    if n < 4:
        return None
    for k in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61):
        if k >= n.bit_length():
            break
        b = _iroot(n, k)
        if b ** k == n:
            return b, k
    return None


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 0:
        raise ValueError("negative input")
    if n == 0:
        return 0
    if k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    x = 1 << (-(-n.bit_length() // k))
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x


@dataclass(frozen=True)
class PrimeFactorization:
    """Signed exponent map for a nonzero rational: x = sign * prod p^e."""

    sign: int
    exponents: tuple[tuple[int, int], ...]  # strictly increasing primes, nonzero exponents

    def value(self) -> Fraction:
        out = Fraction(self.sign)
        for p, e in self.exponents:
            out *= Fraction(p) ** e
        return out

    def as_dict(self) -> dict[int, int]:
        return dict(self.exponents)


def factor_fraction(x: Fraction | int) -> PrimeFactorization:
    """Exact prime factorization of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise ZeroInput("0 has no factorization")
    num = factorint(x.numerator)
    den = factorint(x.denominator)
    exps = dict(num)
    for p, e in den.items():
        exps[p] = exps.get(p, 0) - e
    exps = {p: e for p, e in exps.items() if e != 0}
    return PrimeFactorization(1 if x > 0 else -1, tuple(sorted(exps.items())))


def ord_p(x: Fraction | int, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise ZeroInput("ord_p(0) is +infinity")
    v = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        v += 1
    if v:
        return v
    d = x.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi expects n >= 1")
    out = n
    for p in factorint(n) if n > 1 else {}:
        out -= out // p
    return out


def max_power_exponent(a: Fraction | int) -> tuple[int, Fraction, int]:
    """Largest l with a = xi * x^l for xi in {1,-1} and rational x.

    Returns (l, x, xi) with the identity exact.  Since the only rational roots
    of unity are +-1, l is the gcd of the prime exponents of |a|, and the sign
    is absorbed by x when l is odd and by xi when l is even.
    """
    a = Fraction(a)
    if a == 0:
        raise ZeroInput("a must be nonzero")
    if a == 1 or a == -1:
        raise RootOfUnityInput("a must not be a root of unity")
    fac = factor_fraction(abs(a))
    ell = 0
    for _, e in fac.exponents:
        ell = math.gcd(ell, abs(e))
    x = Fraction(1)
    for p, e in fac.exponents:
        x *= Fraction(p) ** (e // ell)
    if a > 0:
        return ell, x, 1
    if ell % 2 == 1:
        return ell, -x, 1
    return ell, x, -1


def squarefree_kernel(x: Fraction | int) -> int:
    """Squarefree integer d with sqrt(|x|) in sqrt(d) * Q; keeps the sign of x."""
    x = Fraction(x)
    if x == 0:
        raise ZeroInput("x must be nonzero")
    d = 1
    for p, e in factor_fraction(abs(x)).exponents:
        if e % 2:
            d *= p
    return d if x > 0 else -d


def quadratic_conductor(d: int) -> int:
    """Conductor of Q(sqrt(d)) for squarefree d != 0, 1 (= |discriminant|)."""
    if d % 4 == 1:
        return abs(d)
    return 4 * abs(d)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n)."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 == 1 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol (a/n) for odd n >= 1
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0
