"""In- and circumradius along the tree.

Child radii follow from the parent's by affine laws, and along the pure
chains A^n, B^n, C^n applied to (3, 4, 5) they have closed forms.  The
B-chain forms are carried in Z[sqrt 2] so they stay exact for any n.

n = 0 is accepted everywhere and yields the root's radii (r = 1, R = 5/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .berggren import matrix_power, mat_vec
from .ppt_core import PPT, ROOT, InvariantViolation, circumradius, inradius
from .quad_ring import silver_power


@dataclass(frozen=True)
class ChainPoint:
    letter: str
    n: int
    triple: PPT
    r: int
    R: Fraction


def child_inradius(t: PPT, letter: str) -> int:
    r = inradius(t)
    if letter == "A":
        return r - t.y + t.z
    if letter == "B":
        return r + t.z
    if letter == "C":
        return r - t.x + t.z
    raise ValueError(f"unknown letter {letter!r}")


def child_circumradius(t: PPT, letter: str) -> Fraction:
    R = circumradius(t)
    if letter == "A":
        return t.x - t.y + 3 * R
    if letter == "B":
        return t.x + t.y + 3 * R
    if letter == "C":
        return -t.x + t.y + 3 * R
    raise ValueError(f"unknown letter {letter!r}")


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError("chain index must be non-negative")


def chain_inradius(letter: str, n: int) -> int:
    _check_n(n)
    if letter == "A":
        return n + 1
    if letter == "C":
        return 2 * n + 1
    if letter == "B":
        # ((3+2√2)^(n+1) - (3-2√2)^(n+1)) / (4√2) = q_{n+1} / 2
        q = silver_power(n + 1).b
        return q // 2
    raise ValueError(f"unknown letter {letter!r}")


def chain_circumradius(letter: str, n: int) -> Fraction:
    _check_n(n)
    if letter == "A":
        return Fraction(2 * n * n + 6 * n + 5, 2)
    if letter == "C":
        return Fraction(4 * n * n + 8 * n + 5, 2)
    if letter == "B":
        # ((5√2-7)(3-2√2)^n + (5√2+7)(3+2√2)^n) / (4√2) = (5 p_n + 7 q_n) / 2
        s = silver_power(n)
        return Fraction(5 * s.a + 7 * s.b, 2)
    raise ValueError(f"unknown letter {letter!r}")


def chain_point(letter: str, n: int) -> ChainPoint:
    _check_n(n)
    triple = PPT(*mat_vec(matrix_power(letter, n), (ROOT.x, ROOT.y, ROOT.z)))
    r, R = chain_inradius(letter, n), chain_circumradius(letter, n)
    if r != inradius(triple) or R != circumradius(triple):
        raise InvariantViolation(f"chain {letter}^{n}: closed forms disagree with {triple}")
    return ChainPoint(letter, n, triple, r, R)
