import itertools
from math import factorial

import pytest

from essdim.catalog import Cyclic, Imprimitive, Symmetric, group_order
from essdim.enumeration import (
    CycleSignature,
    brute_force_families,
    class_families,
    partitions,
    signatures_alternating,
    signatures_imprimitive,
    signatures_symmetric,
)
from essdim.errors import EnumerationBudgetError

from oracles import partition_count, permutation_parity


def _by_partition(fams):
    return {f.signature.partition: f.element_count for f in fams}


def test_symmetric_3():
    fams = list(signatures_symmetric(3))
    assert [f.signature.partition for f in fams] == [(1, 1, 1), (2, 1), (3,)]
    assert [f.element_count for f in fams] == [1, 3, 2]


def test_symmetric_4():
    fams = list(signatures_symmetric(4))
    assert len(fams) == 5
    assert sum(f.element_count for f in fams) == 24


def test_symmetric_6_class_33_by_brute_force():
    brute = 0
    for perm in itertools.permutations(range(6)):
        seen, lengths = set(), []
        for s in range(6):
            if s in seen:
                continue
            k, i = 0, s
            while i not in seen:
                seen.add(i)
                i = perm[i]
                k += 1
            lengths.append(k)
        brute += sorted(lengths) == [3, 3]
    assert brute == 40
    assert _by_partition(signatures_symmetric(6))[(3, 3)] == 40


def test_alternating_small():
    assert _by_partition(signatures_alternating(4)) == {(1, 1, 1, 1): 1, (2, 2): 3, (3, 1): 8}
    assert _by_partition(signatures_alternating(3)) == {(1, 1, 1): 1, (3,): 2}


def test_alternating_8_contains_44():
    # (0 1 2 3)(4 5 6 7) as a one-line permutation
    rep = (1, 2, 3, 0, 5, 6, 7, 4)
    assert permutation_parity(rep) == 0
    assert (4, 4) in _by_partition(signatures_alternating(8))


@pytest.mark.parametrize("n", range(2, 11))
def test_alternating_counts(n):
    assert sum(f.element_count for f in signatures_alternating(n)) == factorial(n) // 2


@pytest.mark.parametrize("n", range(1, 21))
def test_partition_count(n):
    assert sum(1 for _ in partitions(n)) == partition_count(n)
    assert sum(1 for _ in signatures_symmetric(n)) == partition_count(n)


def test_partitions_are_lexicographic():
    parts = list(partitions(7))
    assert parts == sorted(parts)
    assert all(list(p) == sorted(p, reverse=True) for p in parts)


def test_small_imprimitive_counts():
    assert sum(f.element_count for f in signatures_imprimitive(2, 1, 2)) == 8
    assert sum(f.element_count for f in signatures_imprimitive(2, 2, 2)) == 4


def _grid(max_m, max_n):
    for m in range(2, max_m + 1):
        for l in (d for d in range(1, m + 1) if m % d == 0):
            for n in range(2, max_n + 1):
                yield Imprimitive(m, l, n)


@pytest.mark.parametrize("g", list(_grid(4, 6)) + [Symmetric(n) for n in range(2, 9)] + [Cyclic(m) for m in range(1, 13)], ids=str)
def test_count_sum_law(g):
    fams = list(class_families(g))
    assert sum(f.element_count for f in fams) == group_order(g)
    for f in fams:
        assert f.signature.degree == (g.n if isinstance(g, Symmetric) else g.rank)
        if isinstance(g, Imprimitive):
            assert f.signature.phase_total % g.l == 0
    # deterministic order
    assert fams == list(class_families(g))


@pytest.mark.parametrize("g", list(_grid(3, 5)) + [Imprimitive(2, 1, 6), Imprimitive(2, 2, 6)], ids=str)
def test_signatures_match_element_oracle(g):
    fast = {f.signature: f.element_count for f in class_families(g)}
    assert len(fast) == len(list(class_families(g)))
    assert fast == brute_force_families(g.m, g.l, g.n)


def test_budget():
    with pytest.raises(EnumerationBudgetError, match="enumeration budget of 10"):
        list(signatures_imprimitive(4, 1, 6, budget=10))
    with pytest.raises(EnumerationBudgetError):
        list(class_families(Symmetric(30), budget=100))


def test_signature_validation():
    with pytest.raises(ValueError):
        CycleSignature(((2, 3),), 2)
    assert CycleSignature(((1, 1), (2, 0)), 2).degree == 3
