"""Suffix reduction, its containment equivalence, and class decomposition."""
import pytest

from invpat import boards
from invpat.boards import graph_of, symmetric_full_placements
from invpat.errors import InvalidInputError, InvalidPatternError, InvalidPlacementError
from invpat.perms import perm_from_text
from invpat.reduction import (
    SuffixSet,
    class_decomposition_check,
    suffix_reduction,
    suffix_set,
    verify_reduction_equivalence,
)


def test_suffix_set_validation():
    t = suffix_set(3, [(5, 4), (4, 5)])
    assert t.j == 3 and len(t.suffixes) == 2
    with pytest.raises(InvalidInputError):
        suffix_set(3, [])  # no suffixes
    with pytest.raises(InvalidInputError):
        suffix_set(3, [()])  # empty suffix
    with pytest.raises(InvalidInputError):
        suffix_set(3, [(4, 4)])  # repeated value
    with pytest.raises(InvalidInputError):
        suffix_set(3, [(1, 2)])  # wrong value range
    with pytest.raises(InvalidInputError):
        suffix_set(0, [(1,)])


def test_patterns_with_prefix():
    t = suffix_set(2, [(3,), (4, 3)])
    assert t.patterns_with_prefix((2, 1)) == frozenset({(2, 1, 3), (2, 1, 4, 3)})
    with pytest.raises(InvalidPatternError):
        t.patterns_with_prefix((1, 2, 3))  # wrong length
    with pytest.raises(InvalidPatternError):
        t.patterns_with_prefix((2, 3, 1)[:2])  # (2, 3) is not a permutation slice
    with pytest.raises(InvalidPatternError):
        t.patterns_with_prefix(perm_from_text("231")[:2])


def test_worked_nine_by_nine_example():
    p = graph_of(perm_from_text("127965384"))
    rb = suffix_reduction((9,) * 9, p, suffix_set(3, [(5, 4)]))
    assert rb.shape == (4, 4, 4, 3)
    assert rb.kept_columns == (1, 2, 3, 7)
    assert rb.kept_rows == (1, 2, 3, 7)
    assert sorted(rb.induced.dots) == [(1, 1), (2, 2), (3, 4), (4, 3)]
    assert boards.is_symmetric(rb.induced) and boards.is_full(rb.induced)


def test_reduction_requires_symmetric_full_placement():
    with pytest.raises(InvalidPlacementError):
        suffix_reduction((2, 1), graph_of((1, 2)), suffix_set(1, [(2,)]))
    asym = boards.make_placement((2, 2), [(1, 2), (2, 1)])
    with pytest.raises(InvalidPlacementError):
        suffix_reduction((3, 2), asym, suffix_set(1, [(2,)]))


def test_no_occurrence_reduces_to_empty_board():
    p = graph_of((1, 2, 3))  # increasing, avoids any descent suffix
    rb = suffix_reduction((3, 3, 3), p, suffix_set(1, [(3, 2)]))
    assert rb.shape == ()
    assert rb.induced.dots == frozenset()


def test_equivalence_sweep_small():
    for mu in [(3, 3, 3), (3, 3, 2), (4, 4, 4, 4), (4, 4, 2, 2)]:
        for t in [suffix_set(1, [(2,)]), suffix_set(2, [(3,)]), suffix_set(2, [(4, 3)])]:
            prefixes = {1: [(1,)], 2: [(1, 2), (2, 1)]}[t.j]
            for p in symmetric_full_placements(mu):
                for sigma in prefixes:
                    assert verify_reduction_equivalence(mu, p, sigma, t)


def test_class_decomposition_small():
    t = suffix_set(2, [(3,)])
    assert class_decomposition_check((4, 4, 4, 4), t, (1, 2), (2, 1))
    assert class_decomposition_check((4, 4, 2, 2), t, (1, 2), (2, 1))
    t3 = suffix_set(3, [(4,)])
    assert class_decomposition_check((4, 4, 4, 4), t3, (1, 2, 3), (3, 2, 1))
