import json

import pytest
from hypothesis import given, settings, strategies as st

from bowbruhat.enumeration import (BctFamily, InterchangeGraph, compositions, count_bcts, enumerate_bcts,
                                   gale_ryser_feasible, interchange_graph, is_connected)
from bowbruhat.matrix import I2, L2, BinaryMatrix, MarginPair
from bowbruhat.sweep import margin_pairs

import oracles

DIAMOND_MEMBERS = ["011100101", "101001110", "101010101", "101100011", "110001101"]


def small_margins(max_len=4, max_entry=4):
    vec = st.lists(st.integers(0, max_entry), min_size=1, max_size=max_len)
    return st.tuples(vec, vec)


def test_feasibility_examples():
    assert gale_ryser_feasible(((1, 1), (1, 1)))
    assert not gale_ryser_feasible(((2,), (1, 1, 1)))
    assert gale_ryser_feasible(((3,) * 6, (3,) * 6))
    assert not gale_ryser_feasible(((3,), (1, 1)))


@settings(max_examples=300)
@given(small_margins())
def test_feasibility_matches_brute_force(margins):
    r, c = margins
    assert gale_ryser_feasible((r, c)) == bool(oracles.brute_bcts(r, c))


def test_feasibility_matches_enumeration_exhaustively():
    for r, c in margin_pairs(7):
        assert gale_ryser_feasible((r, c)) == (len(enumerate_bcts((r, c))) > 0)


def test_enumeration_examples():
    assert list(enumerate_bcts(((1, 1), (1, 1)))) == [L2, I2]
    assert [M.bitstring for M in enumerate_bcts(((2, 1, 2), (2, 1, 2)))] == DIAMOND_MEMBERS
    assert len(enumerate_bcts(((1, 4, 5, 2, 1, 3), (3, 1, 2, 5, 4, 1)))) == 89


@settings(max_examples=200, deadline=None)
@given(small_margins())
def test_enumeration_matches_brute_force(margins):
    r, c = margins
    fam = enumerate_bcts((r, c))
    expected = oracles.brute_bcts(r, c)
    assert [tuple(M) for M in fam] == expected
    assert count_bcts((r, c)) == len(expected)


def test_family_invariants():
    fam = enumerate_bcts(((2, 2, 1, 1), (1, 2, 2, 1)))
    bits = [M.bitstring for M in fam]
    assert bits == sorted(bits) and len(set(bits)) == len(bits)
    for a, M in enumerate(fam):
        assert M.margins == fam.margins
        assert fam.index[M] == a and fam[a] == M and M in fam


def test_zero_margins_and_infeasible_families():
    assert len(enumerate_bcts(((0, 0), (0,)))) == 1
    assert len(enumerate_bcts(((2, 0), (1, 1)))) == 1
    empty = enumerate_bcts(((3,), (1, 1)))
    assert len(empty) == 0 and count_bcts(((3,), (1, 1))) == 0
    assert is_connected(interchange_graph(empty))


def test_count_is_invariant_under_row_permutation():
    r, c = (1, 3, 2, 2), (2, 2, 2, 1, 1)
    base = enumerate_bcts((r, c))
    perm = (2, 0, 3, 1)
    moved = enumerate_bcts((tuple(r[p] for p in perm), c))
    assert len(moved) == len(base)
    rows_moved = {M.with_rows([M.packed_rows[p] for p in perm]) for M in base}
    assert rows_moved == set(moved)


def test_family_json():
    fam = enumerate_bcts(((1, 1), (1, 1)))
    data = json.loads(json.dumps(fam.to_json()))
    assert data == {"r": [1, 1], "c": [1, 1], "members": [[[0, 1], [1, 0]], [[1, 0], [0, 1]]]}


def test_interchange_graph_examples():
    g = interchange_graph(enumerate_bcts(((1, 1), (1, 1))))
    assert g.edges == {(0, 1)}
    assert is_connected(interchange_graph(enumerate_bcts(((2, 1, 2), (2, 1, 2)))))


def test_interchange_graph_matches_scan():
    fam = enumerate_bcts(((1, 1, 1, 1), (2, 2)))
    g = interchange_graph(fam)
    members = [tuple(M) for M in fam]
    expected = set()
    for a, M in enumerate(members):
        for sel in oracles.l2_corners(M):
            b = members.index(oracles.flip(M, sel))
            expected.add((min(a, b), max(a, b)))
    assert g.edges == expected
    assert len(fam) == 6 and len(g.edges) == 12


def test_disconnected_graph_detected():
    fam = enumerate_bcts(((1, 1), (1, 1)))
    assert not is_connected(InterchangeGraph(fam, frozenset()))


def test_ryser_connectivity_small():
    for r, c in margin_pairs(5):
        fam = enumerate_bcts((r, c))
        assert is_connected(interchange_graph(fam))


def test_compositions():
    assert list(compositions(3)) == [(3,), (1, 2), (2, 1), (1, 1, 1)]
    assert sum(1 for _ in compositions(7)) == 64
    assert list(compositions(0)) == []


def test_margins_validation():
    with pytest.raises(ValueError):
        MarginPair((-1,), (1,))
    assert BctFamily(MarginPair((1,), (1,)), [BinaryMatrix.from_rows([[1]])]).n == 1
