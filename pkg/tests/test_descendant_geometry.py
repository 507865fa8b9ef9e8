import math
from decimal import Decimal, localcontext
from fractions import Fraction

import pytest
import sympy as sp

from pptree import berggren
from pptree.berggren import enumerate_tree
from pptree.descendant_geometry import (
    CollinearPoints,
    Plane,
    Surd,
    check_non_right,
    check_noncollinear,
    cross,
    descendant_area,
    descendant_plane,
    descendant_points,
    descendant_triangle_metrics,
    sub,
    triangle_radii_from_vectors,
)
from pptree.ppt_core import PPT, ROOT


def rel_close(a, b, tol=1e-12):
    return abs(a - b) <= tol * max(abs(a), abs(b))


def test_symbolic_identities():
    x, y, z = sp.symbols("x y z")
    P = sp.Matrix([x, y, z])
    A, B, C = (sp.Matrix(berggren.MATRICES[letter]) for letter in "ABC")
    u, v, w = (B - A) * P, (C - A) * P, (C - B) * P
    assert list(u) == [4 * y, 2 * y, 4 * y]
    assert list(sp.expand(v)) == [-2 * x + 4 * y, -4 * x + 2 * y, -4 * x + 4 * y]
    assert list(w) == [-2 * x, -4 * x, -4 * x]
    assert list(sp.expand(u.cross(v))) == [8 * x * y, 8 * x * y, -12 * x * y]
    D = 9 * x**2 - 16 * x * y + 9 * y**2
    assert sp.expand((3 * x + 3 * y) ** 2 - D) == 34 * x * y
    assert sp.expand(v.dot(v)) == sp.expand(4 * D)
    assert sp.expand(u.dot(v)) == -32 * x * y + 36 * y**2
    assert sp.expand(u.dot(w)) == -32 * x * y
    assert sp.expand(v.dot(w)) == 36 * x**2 - 32 * x * y
    # the plane's constant term: A P lies on 2a + 2b - 3c + z = 0
    assert sp.expand(sp.Matrix([[2, 2, -3]]) * A * P)[0] + z == 0
    # rationalized inradius equals the quotient form
    xs, ys = sp.symbols("xs ys", positive=True)
    Ds = 9 * xs**2 - 16 * xs * ys + 9 * ys**2
    quotient = 2 * xs * ys * sp.sqrt(17) / (3 * xs + 3 * ys + sp.sqrt(Ds))
    rationalized = (3 * (xs + ys) - sp.sqrt(Ds)) / sp.sqrt(17)
    assert sp.simplify(sp.radsimp(quotient - rationalized)) == 0


def test_points_of_root():
    assert descendant_points(ROOT) == ((5, 12, 13), (21, 20, 29), (15, 8, 17))


def test_edge_vectors_general():
    for _, t in enumerate_tree(2000):
        a, b, c = descendant_points(t)
        assert sub(b, a) == (4 * t.y, 2 * t.y, 4 * t.y)
        assert sub(c, b) == (-2 * t.x, -4 * t.x, -4 * t.x)
        assert cross(sub(b, a), sub(c, a)) == (8 * t.x * t.y, 8 * t.x * t.y, -12 * t.x * t.y)


def test_noncollinear():
    assert check_noncollinear(ROOT)
    assert check_noncollinear(PPT(119, 120, 169))


def test_plane():
    assert descendant_plane(ROOT) == Plane(2, 2, -3, 5)
    assert descendant_plane(PPT(5, 12, 13)) == Plane(2, 2, -3, 13)
    assert Plane(2, 2, -3, 5).evaluate((5, 12, 13)) == 0


def test_area():
    assert descendant_area(ROOT) == Surd(Fraction(24), 17)
    assert descendant_area(PPT(5, 12, 13)) == Surd(Fraction(120), 17)
    assert math.isclose(float(descendant_area(ROOT)), math.sqrt(96**2 + 96**2 + 144**2) / 2, rel_tol=1e-15)


def test_dot_products_of_root():
    assert check_non_right(ROOT) == (192, -384, -60)


def test_metrics_of_root():
    m = descendant_triangle_metrics(ROOT)
    assert m.D == 33
    assert m.circumradius_sq == Fraction(2673, 17)
    assert m.inradius_exact == (21, 33)
    assert m.sides == (24, 18, Surd(Fraction(2), 33))
    with localcontext() as ctx:
        ctx.prec = 50
        s17, s33 = Decimal(17).sqrt(), Decimal(33).sqrt()
        rationalized = (21 - s33) / s17
        quotient = 24 * s17 / (21 + s33)
        assert abs(rationalized - quotient) < Decimal("1e-45")
        assert m.inradius_float == float(rationalized)
        assert m.circumradius_float == float((Decimal(2673) / 17).sqrt())
    assert rel_close(m.inradius_float, 3.6999870337245206)


def test_surd():
    assert Surd(Fraction(2), 12) == Surd(Fraction(4), 3)
    assert Surd(Fraction(2), 12).simplified() == Surd(Fraction(4), 3)
    assert Surd(Fraction(2), 12).simplified().radicand == 3
    assert Surd(Fraction(1), 49).simplified().radicand == 1
    assert Surd(Fraction(-1), 2) != Surd(Fraction(1), 2)


def test_lemma_vectors_right_triangle():
    r, R, area = triangle_radii_from_vectors((0, 0, 0), (3, 0, 0), (0, 4, 0))
    assert (r, R, area) == (1.0, 2.5, 6.0)


def test_collinear():
    with pytest.raises(CollinearPoints):
        triangle_radii_from_vectors((0, 0, 0), (1, 0, 0), (2, 0, 0))


def test_invariants_over_tree():
    for _, t in enumerate_tree(10_000):
        x, y, z = t
        m = descendant_triangle_metrics(t)
        assert all(Plane(2, 2, -3, z).contains(p) for p in m.points)
        assert m.area.squared() == 68 * x * x * y * y
        assert 0 not in m.dot_products
        assert m.D > 0 and m.D == (3 * x - 3 * y) ** 2 + 2 * x * y
        assert 17 * m.circumradius_sq == 81 * m.D
        r_ref, R_ref, area_ref = triangle_radii_from_vectors(*m.points)
        assert rel_close(m.inradius_float, r_ref)
        assert rel_close(m.circumradius_float, R_ref)
        assert rel_close(m.circumradius_float**2, float(Fraction(81 * m.D, 17)))
        assert rel_close(float(m.area), area_ref)


def test_exact_form_deep_in_tree():
    # floats stay accurate where coordinates are far past 2^53
    t = berggren.descend_path("BCABBACBAB" * 2)
    m = descendant_triangle_metrics(t)
    with localcontext() as ctx:
        ctx.prec = 80
        x, y = Decimal(t.x), Decimal(t.y)
        ref = 2 * x * y * Decimal(17).sqrt() / (3 * x + 3 * y + Decimal(m.D).sqrt())
    assert m.inradius_float == float(ref)
