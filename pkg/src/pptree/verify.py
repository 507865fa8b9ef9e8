"""Self-check: every closed form and enumeration against the brute-force oracle.

Each check stops at its first counterexample.  An exception raised inside a
check (e.g. a descent that leaves the set of PPTs) counts as a failure.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import oracle
from .berggren import (
    LETTERS,
    MATRICES,
    det3,
    descend,
    descend_path,
    enumerate_tree,
    inverse,
    lemma_f1n_check,
    mat_vec,
    matrix_power,
    path_of,
)
from .descendant_geometry import (
    check_non_right,
    check_noncollinear,
    descendant_area,
    descendant_plane,
    descendant_points,
    descendant_triangle_metrics,
    triangle_radii_from_vectors,
)
from .inradius_enum import count_with_inradius, enumerate_with_inradius
from .ppt_core import PPT, circumradius, f_param, inradius
from .quad_ring import silver_power
from .radius_sequences import chain_circumradius, chain_inradius, child_circumradius, child_inradius

REL_TOL = 1e-12


class Counterexample(Exception):
    pass


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail}"


@dataclass(frozen=True)
class Bounds:
    max_z: int = 10_000
    max_n: int = 30
    max_r: int = 500
    samples: int = 10_000
    max_depth: int = 25
    seed: int = 0


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise Counterexample(msg)


def _rel_close(a: float, b: float) -> bool:
    return abs(a - b) <= REL_TOL * max(abs(a), abs(b))


def check_tree_coverage(b: Bounds) -> str:
    paths, triples = [], []
    for path, t in enumerate_tree(b.max_z):
        paths.append(path)
        triples.append(t)
    _expect(len(set(triples)) == len(triples), "tree enumeration repeats a triple")
    _expect(len(set(paths)) == len(paths), "tree enumeration repeats a path")
    expected = set(oracle.scan_ppt_by_hypotenuse(b.max_z))
    missing, extra = expected - set(triples), set(triples) - expected
    _expect(not missing, f"missing from tree: {sorted(missing)[:3]}")
    _expect(not extra, f"not a PPT per Euclid scan: {sorted(extra)[:3]}")
    return f"{len(triples)} nodes with z <= {b.max_z}, no duplicates"


def check_matrix_powers(b: Bounds) -> str:
    dets = {"A": 1, "B": -1, "C": 1}
    for letter in LETTERS:
        base = MATRICES[letter]
        _expect(base == oracle.naive_matrix_power(letter, 1), f"{letter} differs from the reference matrix")
        _expect(det3(base) == dets[letter], f"det {letter} = {det3(base)}")
        inv = inverse(letter)
        _expect(
            oracle.mat_product([list(r) for r in inv], [list(r) for r in base]) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            f"{letter}^-1 is not an integer inverse",
        )
        for n in range(b.max_n + 1):
            closed, naive = matrix_power(letter, n), oracle.naive_matrix_power(letter, n)
            _expect(all(type(e) is int for row in closed for e in row), f"{letter}^{n} has non-integer entries")
            _expect(closed == naive, f"{letter}^{n}: closed form {closed} != product {naive}")
    return f"A^n, B^n, C^n for n <= {b.max_n}"


def check_lemma_f1n(b: Bounds) -> str:
    for n in range(1, b.max_r + 1):
        _expect(lemma_f1n_check(n), f"A^{n - 1}(3,4,5) != F(1,{n})")
        _expect(f_param(1, n) == (2 * n + 1, 2 * n * n + 2 * n, 2 * n * n + 2 * n + 1), f"F(1,{n}) off")
        _expect(inradius(PPT(*f_param(1, n))) == n, f"no triple with inradius {n} on the A-chain")
    return f"n <= {b.max_r}; every inradius <= {b.max_r} attained"


def check_robbins_count(b: Bounds) -> str:
    for r in range(1, b.max_r + 1):
        got = enumerate_with_inradius(r)
        want = count_with_inradius(r)
        _expect(len(got) == want, f"r={r}: {len(got)} triples, count formula says {want}")
        _expect(got == oracle.scan_ppt_by_inradius(r), f"r={r}: construction != oracle scan")
        _expect(all(inradius(t) == r for t in got), f"r={r}: wrong inradius emitted")
    return f"r <= {b.max_r}"


def check_child_radii(b: Bounds) -> str:
    count = 0
    for _, t in enumerate_tree(b.max_z):
        for letter in LETTERS:
            child = descend(t, letter)
            _expect(child_inradius(t, letter) == inradius(child), f"r_{letter} of {t}")
            _expect(child_circumradius(t, letter) == circumradius(child), f"R_{letter} of {t}")
            count += 1
    return f"{count} parent/child pairs with parent z <= {b.max_z}"


def check_chain_radii(b: Bounds) -> str:
    for letter in LETTERS:
        for n in range(1, b.max_n + 1):
            t = PPT(*mat_vec(oracle.naive_matrix_power(letter, n), (3, 4, 5)))
            _expect(chain_inradius(letter, n) == inradius(t), f"r({letter},{n})")
            _expect(chain_circumradius(letter, n) == circumradius(t), f"R({letter},{n})")
    for n in range(b.max_n + 1):
        s = silver_power(n)
        _expect((s.a, s.b) == oracle.pell_recurrence(n), f"(3+2√2)^{n} != Pell recurrence")
    for n in range(1, b.max_n + 1):
        _expect(chain_inradius("A", n) == n + 1 and chain_inradius("C", n) == 2 * n + 1, f"A/C chain at {n}")
    _expect(chain_inradius("B", 1) == 6 and chain_circumradius("B", 1) == Fraction(29, 2), "B chain at 1")
    return f"n <= {b.max_n} for each letter"


def check_descendant_triangle(b: Bounds) -> str:
    count = 0
    for _, t in enumerate_tree(b.max_z):
        x, y, z = t
        pts = descendant_points(t)
        plane = descendant_plane(t)
        _expect((plane.alpha, plane.beta, plane.gamma, plane.delta) == (2, 2, -3, z), f"plane of {t}")
        _expect(all(plane.contains(p) for p in pts), f"point off plane for {t}")
        _expect(check_noncollinear(t), f"collinear descendants of {t}")
        _expect(descendant_area(t).squared() == 68 * x * x * y * y, f"area of {t}")
        _expect(0 not in check_non_right(t), f"right angle for {t}")
        m = descendant_triangle_metrics(t)
        _expect(17 * m.circumradius_sq == 81 * m.D, f"17R^2 != 81D for {t}")
        r_ref, R_ref, area_ref = triangle_radii_from_vectors(*pts)
        _expect(_rel_close(m.inradius_float, r_ref), f"r of {t}: {m.inradius_float} vs {r_ref}")
        _expect(_rel_close(m.circumradius_float, R_ref), f"R of {t}: {m.circumradius_float} vs {R_ref}")
        _expect(_rel_close(float(m.area), area_ref), f"area of {t}: {float(m.area)} vs {area_ref}")
        count += 1
    return f"{count} nodes with z <= {b.max_z}, float tolerance {REL_TOL:g}"


def check_round_trip(b: Bounds) -> str:
    rng = random.Random(b.seed)
    biggest = 0
    for _ in range(b.samples):
        path = "".join(rng.choice(LETTERS) for _ in range(rng.randint(0, b.max_depth)))
        t = descend_path(path)
        _expect(path_of(t) == path, f"path_of(descend_path({path!r})) = {path_of(t)!r}")
        _expect(descend_path(path_of(t)) == t, f"round trip failed for {t}")
        biggest = max(biggest, t.z)
    return f"{b.samples} random paths of length <= {b.max_depth}, largest z has {len(str(biggest))} digits"


CHECKS: list[tuple[str, Callable[[Bounds], str]]] = [
    ("Berggren tree covers every PPT exactly once", check_tree_coverage),
    ("Closed forms of A^n, B^n, C^n", check_matrix_powers),
    ("Lemma A^(n-1)(3,4,5) = F(1,n)", check_lemma_f1n),
    ("Robbins count of triples with given inradius", check_robbins_count),
    ("Child radius laws r_A, r_B, r_C and R_A, R_B, R_C", check_child_radii),
    ("Inradius and circumradius along the A, B, C chains", check_chain_radii),
    ("Descendant triangle: plane, area, non-right, radii", check_descendant_triangle),
    ("Unique ascent: path_of inverts descend_path", check_round_trip),
]


def run_check(index: int, bounds: Bounds) -> CheckResult:
    name, fn = CHECKS[index]
    try:
        return CheckResult(name, True, fn(bounds))
    except Exception as exc:  # any exception is a failed check, reported with its message
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")


def run_all(bounds: Bounds, workers: int = 1) -> list[CheckResult]:
    if workers <= 1:
        return [run_check(i, bounds) for i in range(len(CHECKS))]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_check, range(len(CHECKS)), [bounds] * len(CHECKS)))
