"""Counting and listing the primitive triples with a given inradius.

With Euclid's parameters the inradius is r = n(m - n).  Writing d = m - n,
primitivity forces d odd and gcd(n, d) = 1, so the triples with inradius r
are in bijection with the splittings r = n * d into coprime factors with d
odd.  Every prime power of r goes wholly to one side, except that all
factors of 2 must go to n; hence 2^omega(r) triples for odd r and
2^(omega(r) - 1) for even r.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd, isqrt, prod

from .ppt_core import PPT, EuclidPair, InvariantViolation, from_euclid

_SMALL_PRIMES = [p for p in range(2, 1000) if all(p % q for q in range(2, isqrt(p) + 1))]
# deterministic Miller-Rabin witness set for n < 3.3e24 (covers all of 2^64)
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@dataclass(frozen=True)
class Factorization:
    prime_powers: tuple[tuple[int, int], ...]

    @property
    def omega(self) -> int:
        return len(self.prime_powers)

    @property
    def value(self) -> int:
        return prod(p**e for p, e in self.prime_powers)


def is_prime(n: int) -> bool:
    """Miller-Rabin; exact below 3.3e24, probabilistic (error < 4^-13) above."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES[:13]:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
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
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(r: int) -> Factorization:
    """Prime factorization: trial division below 1000, then Pollard-Brent rho.

    Fast for anything below 2^64; beyond that, numbers with two large prime
    factors can take a long time.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    counts: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > r:
            break
        while r % p == 0:
            counts[p] = counts.get(p, 0) + 1
            r //= p
    rng = random.Random(r)
    stack = [r] if r > 1 else []
    while stack:
        n = stack.pop()
        if is_prime(n):
            counts[n] = counts.get(n, 0) + 1
            continue
        root = isqrt(n)
        if root * root == n:
            stack += [root, root]
            continue
        f = _pollard_brent(n, rng)
        stack += [f, n // f]
    return Factorization(tuple(sorted(counts.items())))


def count_with_inradius(r: int) -> int:
    omega = factorize(r).omega
    return 2 ** (omega - 1) if r % 2 == 0 else 2**omega


def enumerate_with_inradius(r: int) -> list[PPT]:
    """Every PPT with inradius r, sorted by hypotenuse."""
    fac = factorize(r)
    twos = 1
    odd_parts = []
    for p, e in fac.prime_powers:
        if p == 2:
            twos = p**e
        else:
            odd_parts.append(p**e)
    triples = []
    for mask in range(1 << len(odd_parts)):
        n = twos * prod(q for i, q in enumerate(odd_parts) if mask >> i & 1)
        d = r // n
        triples.append(from_euclid(EuclidPair(n + d, n)))
    triples.sort(key=lambda t: (t.z, t.x))
    if len(triples) != count_with_inradius(r):
        raise InvariantViolation(f"inradius {r}: found {len(triples)} triples")
    return triples
