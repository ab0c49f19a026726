import math

import pytest
from hypothesis import given, strategies as st

from hecke_fusion.combinat import (
    Node, StandardTableau, addable_nodes, addable_removable, conjugate,
    count_standard_tableaux, enumerate_multipartitions, enumerate_standard_tableaux,
    generalized_hook, hook, nodes, partitions, removable_nodes, residue,
    residue_sequence, residues_separate, size,
)
from hecke_fusion.errors import EntryOutOfRange, NodeOutsideDiagram
from hecke_fusion.exact import GenericScalar, Parameters

GRID = [(1, n) for n in range(0, 6)] + [(2, n) for n in range(0, 5)] + [(3, n) for n in range(0, 4)]


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((2, 2)) == (2, 2)


@given(st.integers(0, 9).flatmap(lambda n: st.sampled_from(partitions(n))))
def test_conjugate_is_involution(la):
    assert conjugate(conjugate(la)) == la
    assert sum(conjugate(la)) == sum(la)


def test_hook_examples():
    assert hook((2, 1), 1, 1) == 3
    assert hook((5,), 1, 1) == 5
    assert hook((2, 1), 1, 2) == 1
    with pytest.raises(NodeOutsideDiagram):
        hook((2, 1), 2, 2)


def test_generalized_hook_examples():
    assert generalized_hook((1,), (), 1, 1) == 0
    assert generalized_hook((1,), (1,), 1, 1) == 1
    for la in partitions(5):
        for i, j in nodes(la):
            assert generalized_hook(la, la, i, j) == hook(la, i, j)


def test_addable_removable_examples():
    assert addable_removable(((),)) == ([Node(1, 1, 1)], [])
    assert removable_nodes((2, 1)) == [(1, 2), (2, 1)]
    assert addable_nodes((2, 1)) == [(1, 3), (2, 2), (3, 1)]
    add, rem = addable_removable(((1,), ()))
    assert add == [Node(1, 1, 2), Node(1, 2, 1), Node(2, 1, 1)]
    assert rem == [Node(1, 1, 1)]


@given(st.integers(0, 10).flatmap(lambda n: st.sampled_from(partitions(n))))
def test_addable_exceeds_removable_by_one(la):
    assert len(addable_nodes(la)) == len(removable_nodes(la)) + 1


def test_multipartition_counts():
    assert len(enumerate_multipartitions(1, 3)) == 3
    assert len(enumerate_multipartitions(2, 2)) == 5
    assert len(enumerate_multipartitions(1, 4)) == 5
    for m in (1, 2, 3):
        assert enumerate_multipartitions(m, 0) == [((),) * m]


def test_multipartition_order():
    assert enumerate_multipartitions(2, 2) == [
        ((2,), ()), ((1, 1), ()), ((1,), (1,)), ((), (2,)), ((), (1, 1))]


def test_standard_tableaux_examples():
    assert len(enumerate_standard_tableaux(((4,),))) == 1
    assert [t.rows() for t in enumerate_standard_tableaux(((2, 1),))] == [[[[1, 3], [2]]], [[[1, 2], [3]]]]
    assert len(enumerate_standard_tableaux(((1,), (1,)))) == 2


def _hook_length_count(la) -> int:
    n = sum(la)
    prod = 1
    for i, j in nodes(la):
        prod *= hook(la, i, j)
    return math.factorial(n) // prod


@pytest.mark.parametrize("n", range(0, 8))
def test_tableau_count_matches_hook_length_formula(n):
    for la in partitions(n):
        assert count_standard_tableaux((la,)) == _hook_length_count(la)


@pytest.mark.parametrize("m,n", GRID)
def test_dimension_identity(m, n):
    total = sum(count_standard_tableaux(la) ** 2 for la in enumerate_multipartitions(m, n))
    assert total == m ** n * math.factorial(n)


@pytest.mark.parametrize("m,n", [(2, 3), (3, 2), (1, 5)])
def test_tableaux_are_sorted_standard_and_distinct(m, n):
    for la in enumerate_multipartitions(m, n):
        tabs = enumerate_standard_tableaux(la)
        assert tabs == sorted(tabs)
        assert len(set(tabs)) == len(tabs)
        for t in tabs:
            assert StandardTableau.from_rows(t.rows()) == t
            assert t.restrict(n) == t
            for k in range(n):
                assert t.restrict(k).extend(t.node_of(k + 1)) == t.restrict(k + 1)


def test_from_rows_rejects_nonstandard():
    with pytest.raises(ValueError):
        StandardTableau.from_rows([[[2, 1]]])
    with pytest.raises(ValueError):
        StandardTableau.from_rows([[[1, 3]]])


def test_node_of_range():
    t = enumerate_standard_tableaux(((2,),))[0]
    with pytest.raises(EntryOutOfRange):
        t.node_of(3)


def test_swap():
    row = StandardTableau.from_rows([[[1, 2]]])
    assert row.swap(1) is None
    t = StandardTableau.from_rows([[[1, 2], [3]]])
    assert t.swap(2).rows() == [[[1, 3], [2]]]


def test_residue_examples():
    q1, q2 = GenericScalar.variables(2)
    P = Parameters.generic(1, 3)
    t = StandardTableau.from_rows([[[1, 2, 3]]])
    assert residue_sequence(t, P) == (P.qvalues[0], P.qvalues[0] + 1, P.qvalues[0] + 2)
    P2 = Parameters.generic(2, 2)
    assert P2.node_residue(2, 1, 2) == q2 - 1
    t = StandardTableau.from_rows([[[1]], [[2]]])
    assert residue(t, 1, P2) == q1 and residue(t, 2, P2) == q2


def test_residue_separation_examples():
    assert residues_separate(1, 2, Parameters.default(1, 2))
    assert residues_separate(2, 1, Parameters.generic(2, 1))
    assert not residues_separate(2, 2, Parameters.specialized(2, 2, [0, 1], check=False))


@pytest.mark.parametrize("m,n", GRID)
def test_default_parameters_separate_residues(m, n):
    assert residues_separate(m, n, Parameters.default(m, n))


def test_size():
    assert size(((2, 1), (1,))) == 4
    assert size((3, 1)) == 4
