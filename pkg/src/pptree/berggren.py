"""The Berggren ternary tree of primitive Pythagorean triples.

Every PPT is reached from (3, 4, 5) by exactly one word over {A, B, C}; a
path is written as a plain string, the empty string denoting the root.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterable, Iterator, Literal

from .ppt_core import PPT, ROOT, InvariantViolation, TripleError, f_param
from .quad_ring import HalfInt, b1_b2

Letter = Literal["A", "B", "C"]
Mat3 = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]

LETTERS: tuple[Letter, ...] = ("A", "B", "C")

MATRICES: dict[str, Mat3] = {
    "A": ((1, -2, 2), (2, -1, 2), (2, -2, 3)),
    "B": ((1, 2, 2), (2, 1, 2), (2, 2, 3)),
    "C": ((-1, 2, 2), (-2, 1, 2), (-2, 2, 3)),
}

IDENTITY: Mat3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


class InvalidPath(ValueError):
    pass


def parse_path(word: str) -> str:
    bad = set(word) - set(LETTERS)
    if bad:
        raise InvalidPath(f"path {word!r} contains {''.join(sorted(bad))!r}; only A, B, C allowed")
    return word


def mat_mul(m: Mat3, k: Mat3) -> Mat3:
    return tuple(
        tuple(sum(m[i][j] * k[j][c] for j in range(3)) for c in range(3)) for i in range(3)
    )  # type: ignore[return-value]


def mat_vec(m: Mat3, v: Iterable[int]) -> tuple[int, int, int]:
    a, b, c = v
    return (
        m[0][0] * a + m[0][1] * b + m[0][2] * c,
        m[1][0] * a + m[1][1] * b + m[1][2] * c,
        m[2][0] * a + m[2][1] * b + m[2][2] * c,
    )


def det3(m: Mat3) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


@lru_cache(maxsize=None)
def _integer_inverse(m: Mat3) -> Mat3:
    d = det3(m)
    if d not in (1, -1):
        raise InvariantViolation(f"matrix {m} has determinant {d}; no integer inverse")
    cof = [[0, 0, 0], [0, 0, 0], [0, 0, 0]]
    for i in range(3):
        for j in range(3):
            rows = [r for r in range(3) if r != i]
            cols = [c for c in range(3) if c != j]
            minor = m[rows[0]][cols[0]] * m[rows[1]][cols[1]] - m[rows[0]][cols[1]] * m[rows[1]][cols[0]]
            cof[i][j] = (-1) ** (i + j) * minor
    # inverse = adjugate / det = transpose(cofactors) * det, since det = +-1
    return tuple(tuple(cof[j][i] * d for j in range(3)) for i in range(3))  # type: ignore[return-value]


def inverse(letter: str) -> Mat3:
    return _integer_inverse(MATRICES[letter])


def descend(t: PPT, letter: str) -> PPT:
    x, y, z = mat_vec(MATRICES[letter], (t.x, t.y, t.z))
    try:
        child = PPT(x, y, z)
    except TripleError as exc:
        raise InvariantViolation(f"{letter}*{t} = ({x}, {y}, {z}) is not a canonical PPT: {exc}") from exc
    if child.z <= t.z:
        raise InvariantViolation(f"{letter}*{t} = {child} does not increase the hypotenuse")
    return child


def parent(t: PPT) -> tuple[PPT, Letter] | None:
    """The unique (parent, letter) with descend(parent, letter) == t, or None at the root."""
    if t == ROOT:
        return None
    found = []
    for letter in LETTERS:
        x, y, z = mat_vec(inverse(letter), (t.x, t.y, t.z))
        try:
            cand = PPT(x, y, z)
        except TripleError:
            continue
        if cand.z < t.z:
            found.append((cand, letter))
    if len(found) != 1:
        raise InvariantViolation(f"{t} has {len(found)} candidate parents")
    return found[0]


def descend_path(path: str, start: PPT = ROOT) -> PPT:
    t = start
    for letter in parse_path(path):
        t = descend(t, letter)
    return t


def path_of(t: PPT) -> str:
    letters = []
    step = parent(t)
    while step is not None:
        t, letter = step
        letters.append(letter)
        step = parent(t)
    return "".join(reversed(letters))


def _as_int(h: HalfInt) -> int:
    if not h.is_integer:
        raise InvariantViolation(f"B^n entry {h} is not an integer")
    return int(h)


def matrix_power(letter: str, n: int) -> Mat3:
    """Closed-form A^n, B^n, C^n (no repeated multiplication)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if letter == "A":
        return (
            (1, -2 * n, 2 * n),
            (2 * n, 1 - 2 * n * n, 2 * n * n),
            (2 * n, -2 * n * n, 2 * n * n + 1),
        )
    if letter == "C":
        return (
            (1 - 2 * n * n, 2 * n, 2 * n * n),
            (-2 * n, 1, 2 * n),
            (-2 * n * n, 2 * n, 2 * n * n + 1),
        )
    if letter == "B":
        b1, b2 = b1_b2(n)
        sign = HalfInt(1 if n % 2 == 0 else -1)  # (-1)^n / 2
        neg_sign = HalfInt(-sign.twice_value)
        diag, off = _as_int(sign + b1), _as_int(neg_sign + b1)
        return (
            (diag, off, b2),
            (off, diag, b2),
            (b2, b2, _as_int(b1 + b1)),
        )
    raise InvalidPath(f"unknown letter {letter!r}")


def enumerate_tree(z_bound: int, start: PPT = ROOT, prefix: str = "") -> Iterator[tuple[str, PPT]]:
    """Breadth-first walk of every node with z <= z_bound.

    Nodes come out by path length, then lexicographically (A < B < C).
    Pruning is sound because descent strictly increases z.
    """
    if start.z > z_bound:
        return
    queue = deque([(prefix, start)])
    while queue:
        path, t = queue.popleft()
        yield path, t
        for letter in LETTERS:
            child = descend(t, letter)
            if child.z <= z_bound:
                queue.append((path + letter, child))


def _subtree(args: tuple[int, str, tuple[int, int, int]]) -> list[tuple[str, tuple[int, int, int]]]:
    z_bound, prefix, xyz = args
    return [(p, (t.x, t.y, t.z)) for p, t in enumerate_tree(z_bound, PPT(*xyz), prefix)]


def enumerate_tree_parallel(z_bound: int, workers: int) -> list[tuple[str, PPT]]:
    """Same nodes and order as :func:`enumerate_tree`, with subtrees split across processes."""
    if workers <= 1:
        return list(enumerate_tree(z_bound))
    head: list[tuple[str, PPT]] = []
    frontier = [("", ROOT)] if ROOT.z <= z_bound else []
    while frontier and len(frontier) < workers:
        head.extend(frontier)
        nxt = []
        for path, t in frontier:
            for letter in LETTERS:
                child = descend(t, letter)
                if child.z <= z_bound:
                    nxt.append((path + letter, child))
        frontier = nxt
    jobs = [(z_bound, p, (t.x, t.y, t.z)) for p, t in frontier]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunks = list(pool.map(_subtree, jobs))
    nodes = head + [(p, PPT(*xyz)) for chunk in chunks for p, xyz in chunk]
    nodes.sort(key=lambda node: (len(node[0]), node[0]))
    return nodes


def lemma_f1n_check(n: int) -> bool:
    """A^(n-1) (3,4,5)^T == F(1, n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return mat_vec(matrix_power("A", n - 1), (3, 4, 5)) == f_param(1, n)
