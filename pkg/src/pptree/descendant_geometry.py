"""Geometry of the triangle whose vertices are the three children of a PPT.

For P = (x, y, z) put u = BP - AP, v = CP - AP, w = CP - BP.  Then

    u = (4y, 2y, 4y)                 |u| = 6y
    v = (-2x+4y, -4x+2y, -4x+4y)     |v| = 2 sqrt(D),  D = 9x^2 - 16xy + 9y^2
    w = (-2x, -4x, -4x)              |w| = 6x
    u x v = (8xy, 8xy, -12xy)        area = 2xy sqrt(17)

The inradius 2xy sqrt17 / (3(x+y) + sqrt D) is kept in the rationalized form
(3(x+y) - sqrt D) / sqrt 17, using (3(x+y))^2 - D = 34xy; the circumradius
is kept through R^2 = 81 D / 17.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Context, Decimal
from fractions import Fraction

from .berggren import LETTERS, descend
from .inradius_enum import factorize
from .ppt_core import PPT, InvariantViolation

Point3 = tuple[int, int, int]

_CTX = Context(prec=60)


class CollinearPoints(ValueError):
    pass


def sub(p: Point3, q: Point3) -> Point3:
    return (p[0] - q[0], p[1] - q[1], p[2] - q[2])


def dot(p: Point3, q: Point3) -> int:
    return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]


def cross(p: Point3, q: Point3) -> Point3:
    return (
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    )


@dataclass(frozen=True)
class Plane:
    """alpha*a + beta*b + gamma*c + delta = 0."""

    alpha: int
    beta: int
    gamma: int
    delta: int

    def evaluate(self, p: Point3) -> int:
        return self.alpha * p[0] + self.beta * p[1] + self.gamma * p[2] + self.delta

    def contains(self, p: Point3) -> bool:
        return self.evaluate(p) == 0

    def __str__(self) -> str:
        return f"{self.alpha}a{self.beta:+}b{self.gamma:+}c{self.delta:+}=0"


@dataclass(frozen=True, eq=False)
class Surd:
    """coeff * sqrt(radicand).

    Instances are not simplified on construction, since square-freeing a big
    radicand needs a factorization; :meth:`simplified` does that on request.
    Equality compares values exactly.
    """

    coeff: Fraction
    radicand: int

    def __post_init__(self) -> None:
        if self.radicand < 0:
            raise ValueError("radicand must be non-negative")
        object.__setattr__(self, "coeff", Fraction(self.coeff))

    def squared(self) -> Fraction:
        return self.coeff * self.coeff * self.radicand

    def _sign(self) -> int:
        return 0 if self.coeff == 0 or self.radicand == 0 else (1 if self.coeff > 0 else -1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Surd):
            return NotImplemented
        return self._sign() == other._sign() and self.squared() == other.squared()

    def __hash__(self) -> int:
        return hash((self._sign(), self.squared()))

    def simplified(self) -> Surd:
        if self.radicand == 0:
            return Surd(Fraction(0), 0)
        outside, inside = 1, 1
        for p, e in factorize(self.radicand).prime_powers:
            outside *= p ** (e // 2)
            inside *= p ** (e % 2)
        return Surd(self.coeff * outside, inside)

    def to_decimal(self) -> Decimal:
        c = self.coeff
        quotient = _CTX.divide(Decimal(c.numerator), Decimal(c.denominator))
        return _CTX.multiply(quotient, _CTX.sqrt(Decimal(self.radicand)))

    def __float__(self) -> float:
        return float(self.to_decimal())

    def __str__(self) -> str:
        return f"{self.coeff}√{self.radicand}"


@dataclass(frozen=True)
class DescTriangleMetrics:
    """Exact and floating metrics of the descendant triangle of ``triple``.

    ``sides`` is (|u|, |w|, |v|) = (6y, 6x, 2 sqrt D).  ``inradius_exact`` is the
    pair (p, D) with r = (p - sqrt D) / sqrt 17.
    """

    triple: PPT
    points: tuple[Point3, Point3, Point3]
    plane: Plane
    area: Surd
    sides: tuple[int, int, Surd]
    D: int
    dot_products: tuple[int, int, int]
    inradius_exact: tuple[int, int]
    circumradius_sq: Fraction
    inradius_float: float
    circumradius_float: float


def descendant_points(t: PPT) -> tuple[Point3, Point3, Point3]:
    a, b, c = (tuple(descend(t, letter)) for letter in LETTERS)
    return a, b, c  # type: ignore[return-value]


def _edges(points: tuple[Point3, Point3, Point3]) -> tuple[Point3, Point3, Point3]:
    pa, pb, pc = points
    return sub(pb, pa), sub(pc, pa), sub(pc, pb)


def check_noncollinear(t: PPT) -> bool:
    u, v, _ = _edges(descendant_points(t))
    return cross(u, v) != (0, 0, 0)


def descendant_plane(t: PPT) -> Plane:
    # normal (8xy, 8xy, -12xy) ~ (2, 2, -3); gcd(2, 2, -3, z) = 1 always
    return Plane(2, 2, -3, t.z)


def descendant_area(t: PPT) -> Surd:
    area = Surd(Fraction(2 * t.x * t.y), 17)
    u, v, _ = _edges(descendant_points(t))
    c = cross(u, v)
    # |u x v|^2 = 4 * area^2
    if Fraction(dot(c, c)) != 4 * area.squared():
        raise InvariantViolation(f"area of descendant triangle of {t} is not 2xy*sqrt(17)")
    return area


def check_non_right(t: PPT) -> tuple[int, int, int]:
    """The dot products (u.v, u.w, v.w); all are non-zero for a PPT."""
    u, v, w = _edges(descendant_points(t))
    return dot(u, v), dot(u, w), dot(v, w)


def descendant_triangle_metrics(t: PPT) -> DescTriangleMetrics:
    x, y = t.x, t.y
    points = descendant_points(t)
    plane = descendant_plane(t)
    if not all(plane.contains(p) for p in points):
        raise InvariantViolation(f"descendants of {t} are off the plane {plane}")
    u, v, w = _edges(points)
    area = Surd(Fraction(2 * x * y), 17)
    c = cross(u, v)
    if Fraction(dot(c, c)) != 4 * area.squared():
        raise InvariantViolation(f"area of descendant triangle of {t} is not 2xy*sqrt(17)")
    dots = dot(u, v), dot(u, w), dot(v, w)
    if 0 in dots:
        raise InvariantViolation(f"descendant triangle of {t} has a right angle")

    D = 9 * x * x - 16 * x * y + 9 * y * y
    p = 3 * (x + y)
    if p * p - D != 34 * x * y:
        raise InvariantViolation("rationalization identity failed")
    if (dot(u, u), dot(w, w), dot(v, v)) != (36 * y * y, 36 * x * x, 4 * D):
        raise InvariantViolation(f"side lengths of descendant triangle of {t} are off")
    R_sq = Fraction(81 * D, 17)

    # 2xy sqrt17 / (p + sqrt D): no cancellation, unlike (p - sqrt D) / sqrt 17
    sqrt_d = _CTX.sqrt(Decimal(D))
    r_dec = _CTX.divide(_CTX.multiply(Decimal(2 * x * y), _CTX.sqrt(Decimal(17))), _CTX.add(Decimal(p), sqrt_d))
    R_dec = _CTX.sqrt(_CTX.divide(Decimal(81 * D), Decimal(17)))

    return DescTriangleMetrics(
        triple=t,
        points=points,
        plane=plane,
        area=area,
        sides=(6 * y, 6 * x, Surd(Fraction(2), D)),
        D=D,
        dot_products=dots,
        inradius_exact=(p, D),
        circumradius_sq=R_sq,
        inradius_float=float(r_dec),
        circumradius_float=float(R_dec),
    )


def triangle_radii_from_vectors(p1: Point3, p2: Point3, p3: Point3) -> tuple[float, float, float]:
    """Generic (r, R, area) of a triangle in 3-space, in plain floating point."""
    u, v, w = sub(p2, p1), sub(p3, p1), sub(p3, p2)
    c = cross(u, v)
    if c == (0, 0, 0):
        raise CollinearPoints(f"{p1}, {p2}, {p3} are collinear")
    cn = math.sqrt(dot(c, c))
    lu, lv, lw = math.sqrt(dot(u, u)), math.sqrt(dot(v, v)), math.sqrt(dot(w, w))
    return cn / (lu + lv + lw), lu * lv * lw / (2 * cn), cn / 2
