"""Brute-force reference computations for cross-checking the fast paths.

Nothing here uses the closed-form powers, the tree walk, or the
unitary-divisor construction; the base matrices are a separate literal copy.
"""

from __future__ import annotations

from math import gcd, isqrt

from .ppt_core import PPT, EuclidPair, TripleError, from_euclid, validate_triple

_BASE = {
    "A": [[1, -2, 2], [2, -1, 2], [2, -2, 3]],
    "B": [[1, 2, 2], [2, 1, 2], [2, 2, 3]],
    "C": [[-1, 2, 2], [-2, 1, 2], [-2, 2, 3]],
}


def scan_ppt_by_hypotenuse(z_bound: int) -> list[PPT]:
    """All PPTs with z <= z_bound via every Euclid pair with m^2 + n^2 <= z_bound."""
    out = []
    m = 2
    while m * m + 1 <= z_bound:
        for n in range(1, m):
            if m * m + n * n > z_bound:
                break
            if gcd(m, n) == 1 and (m - n) % 2 == 1:
                out.append(from_euclid(EuclidPair(m, n)))
        m += 1
    return sorted(out, key=lambda t: (t.z, t.x))


def scan_pythagorean_brute(z_bound: int) -> list[tuple[int, int, int]]:
    """Every integer solution of x^2 + y^2 = z^2 with 0 < x, y and z <= z_bound, both leg orders."""
    out = []
    for z in range(1, z_bound + 1):
        zz = z * z
        for x in range(1, z):
            yy = zz - x * x
            y = isqrt(yy)
            if y * y == yy:
                out.append((x, y, z))
    return out


def scan_ppt_by_inradius(r: int) -> list[PPT]:
    """All PPTs with inradius r: try every split r = n * d, keep what validates."""
    found = []
    for n in range(1, r + 1):
        if r % n:
            continue
        m = n + r // n
        try:
            t, _ = validate_triple(m * m - n * n, 2 * m * n, m * m + n * n)
        except TripleError:
            continue
        found.append(t)
    return sorted(found, key=lambda t: (t.z, t.x))


def scan_inradius_buckets(r_bound: int) -> dict[int, set[PPT]]:
    """Bucket by inradius every Euclid pair with n(m - n) <= r_bound."""
    buckets: dict[int, set[PPT]] = {}
    for n in range(1, r_bound + 1):
        for d in range(1, r_bound // n + 1):
            m = n + d
            if gcd(m, n) == 1 and d % 2 == 1:
                t = PPT(m * m - n * n, 2 * m * n, m * m + n * n)
                buckets.setdefault((t.x + t.y - t.z) // 2, set()).add(t)
    return buckets


def mat_product(p: list[list[int]], q: list[list[int]]) -> list[list[int]]:
    return [[sum(p[i][k] * q[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def naive_matrix_power(letter: str, n: int) -> tuple[tuple[int, ...], ...]:
    if n < 0:
        raise ValueError("n must be non-negative")
    acc = [[int(i == j) for j in range(3)] for i in range(3)]
    for _ in range(n):
        acc = mat_product(acc, _BASE[letter])
    return tuple(tuple(row) for row in acc)


def naive_descend(t: tuple[int, int, int], letter: str) -> tuple[int, int, int]:
    m = _BASE[letter]
    return tuple(sum(m[i][k] * t[k] for k in range(3)) for i in range(3))  # type: ignore[return-value]


def pell_recurrence(n: int) -> tuple[int, int]:
    """(p_n, q_n) with (3 + 2 sqrt 2)^n = p_n + q_n sqrt 2, by stepping from (1, 0)."""
    p, q = 1, 0
    for _ in range(n):
        p, q = 3 * p + 4 * q, 2 * p + 3 * q
    return p, q
