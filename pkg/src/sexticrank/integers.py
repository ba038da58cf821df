"""Integer factorization and square-free machinery over exact rationals.

Factorization is trial division against a sieved prime table (up to 10**6)
with a Pollard-rho fallback for larger cofactors; everything in scope stays
well below the point where that strategy struggles.
"""

from __future__ import annotations

import math
import random
from functools import lru_cache

from .rationals import Rat

_SIEVE_LIMIT = 10**6


@lru_cache(maxsize=1)
def prime_table(limit: int = _SIEVE_LIMIT) -> tuple[int, ...]:
    """Primes up to `limit`, sieved once and cached."""
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return tuple(i for i, b in enumerate(sieve) if b)


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24 (fixed base set)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
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


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    while True:
        y = random.randrange(1, n)
        c = random.randrange(1, n)
        m = 128
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
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; n must be nonzero."""
    if n == 0:
        raise ValueError("cannot factor zero")
    n = abs(n)
    out: dict[int, int] = {}
    for p in prime_table():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if is_probable_prime(m):
                out[m] = out.get(m, 0) + 1
                continue
            d = _pollard_rho(m)
            stack.append(d)
            stack.append(m // d)
    return out


def is_square(q) -> bool:
    """True iff the rational q is the square of a rational (0 counts)."""
    q = Rat(q)
    if q < 0:
        return False
    n, d = int(q.numerator), int(q.denominator)
    return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d


def rational_isqrt(q) -> Rat:
    """Exact nonnegative square root of a square rational."""
    q = Rat(q)
    if not is_square(q):
        raise ValueError(f"{q} is not a rational square")
    return Rat(math.isqrt(int(q.numerator)), math.isqrt(int(q.denominator)))


def squarefree_part(q) -> int:
    """The unique square-free integer s with q/s a rational square.

    Sign is preserved; q must be nonzero.  For q = a/b this is the square-free
    kernel of a*b, since a/b and a*b differ by the square b**2.
    """
    q = Rat(q)
    if q == 0:
        raise ValueError("zero has no square-free part")
    n = int(q.numerator) * int(q.denominator)
    sign = -1 if n < 0 else 1
    s = 1
    for p, e in factorize(n).items():
        if e % 2:
            s *= p
    return sign * s


def is_squarefree(n: int) -> bool:
    """True iff no prime square divides |n| (early exit, rho fallback)."""
    if n == 0:
        return False
    n = abs(n)
    for p in prime_table():
        if p * p > n:
            return True
        if n % p == 0:
            n //= p
            if n % p == 0:
                return False
    if n == 1 or is_probable_prime(n):
        return True
    # all remaining factors exceed the table limit; only few can fit
    if math.isqrt(n) ** 2 == n:
        return False
    return all(e == 1 for e in factorize(n).values())


def valuation(n: int, p: int) -> int:
    """p-adic valuation of nonzero n."""
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v
