"""Primitive Pythagorean triples: the validated type, Euclid's and F(m, n)
parametrizations, and the in/circumradius of the corresponding right triangle.

All arithmetic is on Python ints, so coordinates may grow without bound.
Half-integer radii are returned as :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

Rational = Fraction


class TripleError(ValueError):
    """Base class for rejected triples and parameters."""


class NotPythagorean(TripleError):
    pass


class NotPrimitive(TripleError):
    pass


class NonPositive(TripleError):
    pass


class BothLegsSameParity(TripleError):
    pass


class NonIntegralResult(TripleError):
    pass


class InvariantViolation(RuntimeError):
    """A proven identity failed to hold. Indicates a bug or corrupted input."""


def _check(x: int, y: int, z: int) -> None:
    if x <= 0 or y <= 0 or z <= 0:
        raise NonPositive(f"({x}, {y}, {z}) has a non-positive component")
    if x * x + y * y != z * z:
        raise NotPythagorean(f"{x}^2 + {y}^2 != {z}^2")
    if gcd(x, y) != 1:
        raise NotPrimitive(f"gcd({x}, {y}) = {gcd(x, y)}")
    # unreachable once the two checks above pass (odd^2 + odd^2 = 2 mod 4), kept as a guard
    if x % 2 == y % 2:
        raise BothLegsSameParity(f"legs {x} and {y} have the same parity")


@dataclass(frozen=True, order=True)
class PPT:
    """A primitive Pythagorean triple in canonical order (odd leg, even leg, hypotenuse).

    Construction validates; use :func:`validate_triple` to accept swapped legs.
    """

    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        _check(self.x, self.y, self.z)
        if self.x % 2 == 0:
            raise BothLegsSameParity(
                f"({self.x}, {self.y}, {self.z}) is not in canonical order: first leg must be odd"
            )

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __str__(self) -> str:
        return f"({self.x}, {self.y}, {self.z})"


ROOT = PPT(3, 4, 5)


@dataclass(frozen=True)
class EuclidPair:
    m: int
    n: int

    def __post_init__(self) -> None:
        if not self.m > self.n >= 1:
            raise ValueError(f"need m > n >= 1, got m={self.m}, n={self.n}")
        if gcd(self.m, self.n) != 1:
            raise ValueError(f"m={self.m} and n={self.n} are not coprime")
        if (self.m - self.n) % 2 == 0:
            raise ValueError(f"m={self.m} and n={self.n} have the same parity")


def validate_triple(x: int, y: int, z: int) -> tuple[PPT, bool]:
    """Validate an arbitrary integer triple.

    Returns ``(ppt, swapped)`` where ``swapped`` is True when the legs were
    given as (even, odd) and had to be reordered.
    """
    _check(x, y, z)
    if x % 2 == 0:
        return PPT(y, x, z), True
    return PPT(x, y, z), False


def from_euclid(p: EuclidPair) -> PPT:
    m, n = p.m, p.n
    return PPT(m * m - n * n, 2 * m * n, m * m + n * n)


def to_euclid(t: PPT) -> EuclidPair:
    # m^2 = (z + x) / 2, n^2 = (z - x) / 2; both are perfect squares for a PPT
    m2, n2 = (t.z + t.x) // 2, (t.z - t.x) // 2
    m, n = isqrt(m2), isqrt(n2)
    if m * m != m2 or n * n != n2:
        raise InvariantViolation(f"{t} has no Euclid pair")
    return EuclidPair(m, n)


def f_param(m: int, n: int) -> tuple[int, int, int]:
    """The F(m, n) parametrization of Pythagorean triples.

    Returns a raw triple which need not be primitive, nor in canonical leg
    order (e.g. F(2, 1) = (4, 3, 5)).  Promote with :func:`validate_triple`.
    """
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got m={m}, n={n}")
    x = (2 if m % 2 else 1) * m * n + m  # (3 - (-1)^m) / 2 is 2 for odd m, 1 for even
    num_y, num_z = x * x - m * m, x * x + m * m
    if num_y % (2 * m) or num_z % (2 * m):
        raise NonIntegralResult(f"F({m}, {n}) is not integral")
    return x, num_y // (2 * m), num_z // (2 * m)


def inradius(t: PPT) -> int:
    return (t.x + t.y - t.z) // 2


def circumradius(t: PPT) -> Fraction:
    return Fraction(t.z, 2)
