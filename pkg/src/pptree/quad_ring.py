"""Exact arithmetic in Z[sqrt 2].

The B-branch of the tree is governed by powers of the unit 3 + 2*sqrt(2).
Writing (3 + 2 sqrt 2)^n = p + q sqrt 2, the conjugate sum is 2p and the
conjugate difference is 2q sqrt 2, so every radical expression for B^n and
the B-chain radii reduces to integer combinations of p and q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class QuadInt:
    """a + b*sqrt(2) with integer a, b."""

    a: int
    b: int = 0

    def __add__(self, other: QuadInt) -> QuadInt:
        return QuadInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: QuadInt) -> QuadInt:
        return QuadInt(self.a - other.a, self.b - other.b)

    def __mul__(self, other: QuadInt) -> QuadInt:
        return QuadInt(self.a * other.a + 2 * self.b * other.b, self.a * other.b + self.b * other.a)

    def __pow__(self, n: int) -> QuadInt:
        if n < 0:
            raise ValueError("negative powers are not supported")
        result, base = QuadInt(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> QuadInt:
        return QuadInt(self.a, -self.b)

    def norm(self) -> int:
        return self.a * self.a - 2 * self.b * self.b

    def __float__(self) -> float:
        return self.a + self.b * 2**0.5

    def __str__(self) -> str:
        return f"{self.a}{self.b:+}√2"


SILVER_UNIT = QuadInt(3, 2)


def quad_add(p: QuadInt, q: QuadInt) -> QuadInt:
    return p + q


def quad_mul(p: QuadInt, q: QuadInt) -> QuadInt:
    return p * q


def quad_conj(p: QuadInt) -> QuadInt:
    return p.conj()


def silver_power(n: int) -> QuadInt:
    """(3 + 2*sqrt 2)**n by binary exponentiation."""
    return SILVER_UNIT**n


@dataclass(frozen=True, order=True)
class HalfInt:
    """twice_value / 2."""

    twice_value: int

    @property
    def is_integer(self) -> bool:
        return self.twice_value % 2 == 0

    def __add__(self, other: HalfInt) -> HalfInt:
        return HalfInt(self.twice_value + other.twice_value)

    def __int__(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.twice_value // 2

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    def __str__(self) -> str:
        return str(self.twice_value // 2) if self.is_integer else f"{self.twice_value}/2"


def b1_b2(n: int) -> tuple[HalfInt, int]:
    """The scalars b1 = p/2 and b2 = q for (3 + 2 sqrt 2)^n = p + q sqrt 2."""
    s = silver_power(n)
    return HalfInt(s.a), s.b
