import pytest
from hypothesis import given, settings, strategies as st

from pptree import berggren
from pptree.berggren import (
    IDENTITY,
    LETTERS,
    MATRICES,
    InvalidPath,
    det3,
    descend,
    descend_path,
    enumerate_tree,
    enumerate_tree_parallel,
    inverse,
    lemma_f1n_check,
    mat_mul,
    matrix_power,
    parent,
    path_of,
)
from pptree.oracle import naive_descend, naive_matrix_power, scan_ppt_by_hypotenuse
from pptree.ppt_core import PPT, ROOT, InvariantViolation

paths = st.text(alphabet="ABC", max_size=25)


@pytest.mark.parametrize("letter, child", [("A", (5, 12, 13)), ("B", (21, 20, 29)), ("C", (15, 8, 17))])
def test_descend_root(letter, child):
    assert tuple(descend(ROOT, letter)) == child
    assert parent(PPT(*child)) == (ROOT, letter)


def test_root_has_no_parent():
    assert parent(ROOT) is None
    assert path_of(ROOT) == ""


def test_paths():
    assert descend_path("") == ROOT
    assert descend_path("AA") == PPT(7, 24, 25)
    assert path_of(PPT(119, 120, 169)) == "BB"
    assert descend_path(path_of(PPT(119, 120, 169))) == PPT(119, 120, 169)


def test_bad_path():
    with pytest.raises(InvalidPath):
        descend_path("ABD")


def test_determinants_and_inverses():
    assert [det3(MATRICES[letter]) for letter in LETTERS] == [1, -1, 1]
    for letter in LETTERS:
        assert mat_mul(inverse(letter), MATRICES[letter]) == IDENTITY


def test_matrix_power_examples():
    assert matrix_power("A", 0) == IDENTITY
    assert matrix_power("A", 3) == ((1, -6, 6), (6, -17, 18), (6, -18, 19))
    assert matrix_power("B", 2) == ((9, 8, 12), (8, 9, 12), (12, 12, 17))
    assert matrix_power("B", 0) == IDENTITY


@pytest.mark.parametrize("letter", LETTERS)
def test_matrix_power_matches_repeated_product(letter):
    for n in range(61):
        m = matrix_power(letter, n)
        assert m == naive_matrix_power(letter, n)
        assert all(type(e) is int for row in m for e in row)


def test_enumerate_small():
    assert list(enumerate_tree(5)) == [("", ROOT)]
    assert [(p, tuple(t)) for p, t in enumerate_tree(17)] == [
        ("", (3, 4, 5)),
        ("A", (5, 12, 13)),
        ("C", (15, 8, 17)),
    ]


def test_enumerate_order_is_bfs_lexicographic():
    order = [p for p, _ in enumerate_tree(20_000)]
    assert order == sorted(order, key=lambda p: (len(p), p))


def test_enumerate_matches_euclid_scan():
    nodes = [t for _, t in enumerate_tree(20_000)]
    assert len(nodes) == len(set(nodes))
    assert set(nodes) == set(scan_ppt_by_hypotenuse(20_000))


def test_closure_and_monotonicity():
    for _, t in enumerate_tree(10_000):
        kids = [descend(t, letter) for letter in LETTERS]
        assert len(set(kids)) == 3
        for letter, kid in zip(LETTERS, kids):
            assert kid.z > t.z
            assert tuple(kid) == naive_descend(tuple(t), letter)
            assert parent(kid) == (t, letter)


def test_parallel_enumeration_matches_serial():
    assert enumerate_tree_parallel(5000, 4) == list(enumerate_tree(5000))
    assert enumerate_tree_parallel(5000, 1) == list(enumerate_tree(5000))


@settings(max_examples=300)
@given(paths)
def test_path_round_trip(path):
    assert path_of(descend_path(path)) == path


def test_lemma_f1n():
    assert lemma_f1n_check(1)
    assert lemma_f1n_check(2)
    assert all(lemma_f1n_check(n) for n in range(1, 501))


def test_descend_rejects_corrupted_matrix(monkeypatch):
    monkeypatch.setitem(berggren.MATRICES, "A", ((2, -2, 2), (2, -1, 2), (2, -2, 3)))
    with pytest.raises(InvariantViolation):
        descend(ROOT, "A")


def test_parent_rejects_non_unique_ascent(monkeypatch):
    # with B replaced by A, (5,12,13) has two candidate parents
    monkeypatch.setitem(berggren.MATRICES, "B", MATRICES["A"])
    with pytest.raises(InvariantViolation):
        parent(PPT(5, 12, 13))
