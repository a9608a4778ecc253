from itertools import combinations

import pytest

from msts.core import SparseWord
from msts.shortest import construct_shortest
from msts.subspace import (
    EnumerationTooLarge,
    complementary_partition,
    dense_to_sparse,
    full_perfect_code,
    is_perfect,
    weight3_codewords,
)
from msts.verifier import verify_msts

from .oracles import dense_distance, is_msts


@pytest.mark.parametrize("kp, lp, m", [(1, 1, 1), (2, 2, 9), (3, 2, 21), (2, 3, 21), (4, 1, 15)])
def test_partition_cells(kp, lp, m):
    p = complementary_partition(kp, lp)
    assert p.m == m == 2 ** (kp + lp) - 2**kp - 2**lp + 1
    cells = p.cells()
    assert len(cells) == m + 2
    assert all(len(c) == 1 for c in cells[:m])
    flat = sorted(v for c in cells for v in c)
    assert flat == list(range(1, 2 ** (kp + lp)))
    for cell in cells:
        closed = set(cell) | {0}
        assert all(a ^ b in closed for a in closed for b in closed)
    assert p.alphabet.sizes == (2,) * m + (2**kp, 2**lp)


def test_partition_11():
    p = complementary_partition(1, 1)
    assert p.cells() == [[0b11], [0b01], [0b10]]


def test_value_maps_are_bijections():
    p = complementary_partition(3, 2)
    for cell_index, cell in enumerate(p.cells()):
        values = [p.locate(v) for v in cell]
        assert all(c == cell_index for c, _ in values)
        assert sorted(v for _, v in values) == list(range(1, len(cell) + 1))
        assert all(p.vector(cell_index, val) == v for v, (_, val) in zip(cell, values))


@pytest.mark.parametrize("bad", [(0, 1), (1, 0), (9, 8)])
def test_partition_bounds(bad):
    with pytest.raises(ValueError):
        complementary_partition(*bad)


def test_weight3_11():
    d = weight3_codewords(complementary_partition(1, 1))
    assert list(d) == [SparseWord(((0, 1), (1, 1), (2, 1)))]
    assert d.alphabet.sizes == (2, 2, 2)


@pytest.mark.parametrize("kp, lp", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (3, 2), (2, 3)])
def test_weight3_is_msts_with_formula_count(kp, lp):
    p = complementary_partition(kp, lp)
    d = weight3_codewords(p)
    k, l, m = 2**kp - 1, 2**lp - 1, p.m
    assert 3 * len(d) == k * l + (k + l) * m + m * (m - 1) // 2
    assert verify_msts(d).accepted
    assert d.meta == {"construction": "subspace-partition", "kprime": kp, "lprime": lp}


def test_weight3_22_against_brute_force():
    d = weight3_codewords(complementary_partition(2, 2))
    assert len(d) == 33
    assert is_msts(d)


def test_singleton_pairs_resolve_through_first_subspace():
    p = complementary_partition(2, 2)
    d = weight3_codewords(p)
    singles = p.singletons
    for (i, a), (j, b) in combinations(enumerate(singles), 2):
        s = a ^ b
        if s and not s & p.high_mask:
            hits = [c for c in d if (i, 1) in c.entries and (j, 1) in c.entries]
            assert hits == [SparseWord(((i, 1), (j, 1), (p.m, s)))]


def test_full_code_11():
    p = complementary_partition(1, 1)
    code = full_perfect_code(p)
    assert code == {(0, 0, 0), (1, 1, 1)}
    assert is_perfect(code, p.alphabet)


@pytest.mark.parametrize("kp, lp", [(1, 1), (2, 1), (2, 2)])
def test_full_code_properties(kp, lp):
    p = complementary_partition(kp, lp)
    code = full_perfect_code(p)
    a = p.alphabet
    assert (0,) * a.n_total in code
    assert len(code) * (1 + sum(q - 1 for q in a.sizes)) == a.volume()
    assert is_perfect(code, a)
    assert all(dense_distance(x, y) >= 3 for x, y in combinations(code, 2))
    weight3 = {dense_to_sparse(w) for w in code if sum(1 for v in w if v) == 3}
    assert weight3 == set(weight3_codewords(p).codewords)


def test_is_perfect_detects_damage():
    p = complementary_partition(2, 1)
    code = full_perfect_code(p)
    code.discard(next(w for w in sorted(code) if any(w)))
    assert not is_perfect(code, p.alphabet)


def test_full_code_budget():
    with pytest.raises(EnumerationTooLarge):
        full_perfect_code(complementary_partition(3, 3))


def test_same_parameters_as_shortest_3_3():
    a = weight3_codewords(complementary_partition(2, 2))
    b = construct_shortest(3, 3)
    assert a.alphabet == b.alphabet and len(a) == len(b) == 33
    assert verify_msts(a).accepted and verify_msts(b).accepted
