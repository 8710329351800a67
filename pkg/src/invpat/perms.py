"""Permutations in one-line notation, patterns, and containment.

A permutation of [n] is a tuple of the integers 1..n, each appearing once.
The empty tuple is the (valid) empty permutation.  Patterns are themselves
permutations; a permutation contains a pattern if some subsequence of it
has the same relative order.
"""
from __future__ import annotations

from functools import cache
from typing import Iterable, Iterator, Sequence

from .errors import InvalidWordError

Perm = tuple[int, ...]


def validate_perm(values: Sequence[int]) -> Perm:
    """Return values as a tuple after checking it permutes 1..n.

    >>> validate_perm([2, 1, 3])
    (2, 1, 3)
    """
    pi = tuple(values)
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise InvalidWordError(f"not a permutation of 1..{len(pi)}: {pi}")
    return pi


def pattern_of(word: Iterable[int]) -> Perm:
    """Order-preserving relabelling of a word with distinct entries.

    >>> pattern_of((7, 9, 6))
    (2, 3, 1)
    >>> pattern_of((9, 6, 5))
    (3, 2, 1)
    """
    w = tuple(word)
    if len(set(w)) != len(w):
        raise InvalidWordError(f"word has repeated entries: {w}")
    rank = {v: i + 1 for i, v in enumerate(sorted(w))}
    return tuple(rank[v] for v in w)


def inverse(pi: Perm) -> Perm:
    """The inverse permutation: inverse(pi)[pi[i]-1] == i+1.

    >>> inverse((2, 4, 1, 3))
    (3, 1, 4, 2)
    """
    out = [0] * len(pi)
    for i, v in enumerate(pi):
        out[v - 1] = i + 1
    return tuple(out)


def reversed_complement(tau: Perm) -> Perm:
    """Rotate the graph of tau by 180 degrees: (k+1-tau_k)...(k+1-tau_1).

    >>> reversed_complement((1, 2, 4, 3))
    (2, 1, 3, 4)
    """
    k = len(tau)
    return tuple(k + 1 - v for v in reversed(tau))


def is_involution(pi: Perm) -> bool:
    """True iff pi composed with itself is the identity.

    >>> is_involution((1, 2, 7, 9, 6, 5, 3, 8, 4))
    True
    >>> is_involution((4, 9, 7, 3, 8, 5, 6, 2, 1))
    False
    """
    return all(pi[v - 1] == i + 1 for i, v in enumerate(pi))


def symmetry_class(tau: Perm) -> frozenset[Perm]:
    """Orbit of tau under the symmetries preserving diagonal symmetry.

    The four members are tau, its inverse, its reversed complement, and the
    inverse of the reversed complement; duplicates collapse, so the orbit
    has size 1, 2, or 4.

    >>> sorted(symmetry_class((1, 2, 4, 3)))
    [(1, 2, 4, 3), (2, 1, 3, 4)]
    """
    rc = reversed_complement(tau)
    return frozenset((tau, inverse(tau), rc, inverse(rc)))


@cache
def _pattern_links(sigma: Perm) -> tuple[tuple[int | None, int | None], ...]:
    # For each pattern position d, the earlier position holding the closest
    # smaller value and the one holding the closest larger value.  These are
    # the only order constraints a new candidate has to satisfy.
    links = []
    for d in range(len(sigma)):
        lo = hi = None
        for e in range(d):
            if sigma[e] < sigma[d] and (lo is None or sigma[e] > sigma[lo]):
                lo = e
            if sigma[e] > sigma[d] and (hi is None or sigma[e] < sigma[hi]):
                hi = e
        links.append((lo, hi))
    return tuple(links)


def contains(pi: Sequence[int], sigma: Perm) -> bool:
    """True iff some subsequence of pi has pattern sigma.

    pi may be any sequence of distinct integers; only relative order is
    used.  The empty pattern is contained in everything.

    >>> contains((1, 2, 7, 9, 6, 5, 3, 8, 4), (1, 2, 3, 5, 4))
    True
    >>> contains((2, 1, 4, 3), (1, 2, 3, 4))
    False
    """
    m = len(sigma)
    if m == 0:
        return True
    n = len(pi)
    if m > n:
        return False
    links = _pattern_links(sigma)
    chosen = [0] * m

    def search(d: int, start: int) -> bool:
        lo, hi = links[d]
        for pos in range(start, n - (m - d) + 1):
            v = pi[pos]
            if lo is not None and v < chosen[lo]:
                continue
            if hi is not None and v > chosen[hi]:
                continue
            if d + 1 == m:
                return True
            chosen[d] = v
            if search(d + 1, pos + 1):
                return True
        return False

    return search(0, 0)


def avoids(pi: Sequence[int], sigma: Perm) -> bool:
    """True iff pi has no subsequence with pattern sigma."""
    return not contains(pi, sigma)


def involutions(n: int) -> Iterator[Perm]:
    """Yield every involution of [n], built by pairing the least free index.

    >>> sorted(involutions(3))
    [(1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 2, 1)]
    """
    mapping = [0] * n

    def extend(free: tuple[int, ...]) -> Iterator[Perm]:
        if not free:
            yield tuple(mapping)
            return
        t = free[0]
        mapping[t - 1] = t
        yield from extend(free[1:])
        for idx in range(1, len(free)):
            u = free[idx]
            mapping[t - 1] = u
            mapping[u - 1] = t
            yield from extend(free[1:idx] + free[idx + 1 :])

    yield from extend(tuple(range(1, n + 1)))


@cache
def involution_list(n: int) -> tuple[Perm, ...]:
    """All involutions of [n], cached (35,696 of them at n = 11)."""
    return tuple(involutions(n))


def perm_to_text(pi: Perm) -> str:
    """Digits concatenated for n <= 9, comma-separated beyond.

    >>> perm_to_text((3, 1, 2))
    '312'
    >>> perm_to_text(tuple([10, 2, 3, 4, 5, 6, 7, 8, 9, 1]))
    '10,2,3,4,5,6,7,8,9,1'
    """
    if len(pi) <= 9:
        return "".join(str(v) for v in pi)
    return ",".join(str(v) for v in pi)


def perm_from_text(text: str) -> Perm:
    """Parse the textual form accepted everywhere in the CLI."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return validate_perm([int(p) for p in text.split(",")])
    return validate_perm([int(ch) for ch in text])
