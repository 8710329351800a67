"""Permutations, patterns, and containment against a naive oracle."""
from itertools import combinations, permutations

import pytest

from invpat.errors import InvalidWordError
from invpat.perms import (
    avoids,
    contains,
    inverse,
    involution_list,
    involutions,
    is_involution,
    pattern_of,
    perm_from_text,
    perm_to_text,
    reversed_complement,
    symmetry_class,
    validate_perm,
)


def naive_contains(pi, sigma):
    return any(pattern_of(c) == sigma for c in combinations(pi, len(sigma)))


def test_validate_perm_rejects_non_permutations():
    with pytest.raises(InvalidWordError):
        validate_perm((1, 3))
    with pytest.raises(InvalidWordError):
        validate_perm((1, 1, 2))
    assert validate_perm(()) == ()


def test_pattern_of_rejects_repeats():
    with pytest.raises(InvalidWordError):
        pattern_of((2, 2))
    assert pattern_of(()) == ()
    assert pattern_of((40, 10, 30)) == (3, 1, 2)


def test_inverse_and_reversed_complement_are_involutive():
    for pi in permutations(range(1, 6)):
        assert inverse(inverse(pi)) == pi
        assert reversed_complement(reversed_complement(pi)) == pi
        # the two symmetry generators commute on the orbit
        assert inverse(reversed_complement(pi)) == reversed_complement(inverse(pi))


def test_symmetry_class_sizes_divide_four():
    for n in range(1, 6):
        for pi in permutations(range(1, n + 1)):
            cls = symmetry_class(pi)
            assert len(cls) in (1, 2, 4)
            assert pi in cls
            for member in cls:
                assert symmetry_class(member) == cls


def test_contains_matches_naive_oracle():
    patterns = [p for k in range(1, 4) for p in permutations(range(1, k + 1))]
    for pi in permutations(range(1, 6)):
        for sigma in patterns:
            assert contains(pi, sigma) == naive_contains(pi, sigma)


def test_contains_on_longer_patterns():
    for sigma in permutations(range(1, 5)):
        for pi in permutations(range(1, 6)):
            assert contains(pi, sigma) == naive_contains(pi, sigma)


def test_contains_accepts_arbitrary_distinct_values():
    assert contains((10, 40, 20), (1, 3, 2))
    assert avoids((10, 40, 20), (3, 2, 1))
    assert contains((5,), ())


def test_involution_counts_match_known_sequence():
    expected = [1, 1, 2, 4, 10, 26, 76, 232, 764]
    assert [len(involution_list(n)) for n in range(9)] == expected


def test_involutions_are_involutions_and_distinct():
    for n in range(7):
        seen = list(involutions(n))
        assert len(set(seen)) == len(seen)
        assert all(is_involution(pi) for pi in seen)


def test_is_involution_examples():
    assert is_involution(())
    assert is_involution((2, 1, 3))
    assert not is_involution((2, 3, 1))


def test_text_round_trip():
    for pi in [(3, 1, 2), (), tuple(range(1, 12))]:
        assert perm_from_text(perm_to_text(pi)) == pi
    assert perm_to_text(tuple(range(1, 12))).count(",") == 10
    with pytest.raises(InvalidWordError):
        perm_from_text("122")
