"""Reducing a symmetric full placement by a set of pattern suffixes.

Given a symmetric full placement on a self-conjugate shape and a set of
suffixes (orderings of j+1..k), the boxes strictly southwest of some
suffix occurrence, together with their mirror images, form a self-conjugate
subshape.  Deleting its dotless rows and columns leaves a smaller
self-conjugate board carrying a symmetric full placement.  Containment of a
length-j involution prefix on that board is equivalent to containment of
the full prefix+suffix patterns on the original board, which is what makes
prefix exchange work.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import boards
from .boards import Placement, Shape
from .errors import InvalidInputError, InvalidPatternError, InvalidPlacementError
from .perms import Perm, is_involution, pattern_of


@dataclass(frozen=True)
class SuffixSet:
    """A prefix length j and suffixes, each an ordering of j+1..k for k > j."""

    j: int
    suffixes: frozenset[tuple[int, ...]]

    def __post_init__(self):
        if self.j < 1:
            raise InvalidInputError("prefix length j must be >= 1")
        if not self.suffixes:
            raise InvalidInputError("suffix set must be nonempty")
        for tau in self.suffixes:
            # empty suffixes are rejected: 'southwest of an occurrence of
            # the empty pattern' has no usable meaning
            k = self.j + len(tau)
            if not tau or sorted(tau) != list(range(self.j + 1, k + 1)):
                raise InvalidInputError(
                    f"suffix {tau} is not a nonempty ordering of {self.j + 1}..{k}"
                )

    def patterns_with_prefix(self, prefix: Perm) -> frozenset[Perm]:
        """The full patterns obtained by prepending an involution prefix."""
        if len(prefix) != self.j or not is_involution(prefix):
            raise InvalidPatternError(f"prefix must be an involution of length {self.j}")
        return frozenset(tuple(prefix) + tau for tau in self.suffixes)


def suffix_set(j: int, suffixes) -> SuffixSet:
    return SuffixSet(j, frozenset(tuple(t) for t in suffixes))


@dataclass(frozen=True)
class ReducedBoard:
    """The reduced self-conjugate board with its induced placement and the
    row/column indices of the parent board it kept."""

    shape: Shape
    induced: Placement
    kept_columns: tuple[int, ...]
    kept_rows: tuple[int, ...]

    def parent_boxes(self) -> frozenset[tuple[int, int]]:
        """Boxes of the parent board corresponding to boxes of the shape."""
        out = set()
        for s, y in enumerate(self.kept_rows, start=1):
            for r in range(1, (self.shape[s - 1] if s <= len(self.shape) else 0) + 1):
                out.add((self.kept_columns[r - 1], y))
        return frozenset(out)


def _suffix_corners(p: Placement, t: SuffixSet) -> set[tuple[int, int]]:
    # For each occurrence of a suffix pattern (bounded by a rectangle of the
    # shape), record the box just southwest of all its dots.  Only these
    # corners matter; the marked region is the union of their rectangles.
    corners: set[tuple[int, int]] = set()
    dots = sorted(p.dots)
    for tau in t.suffixes:
        pat = pattern_of(tau)
        m = len(pat)
        for combo in combinations(dots, m):
            heights = [y for _, y in combo]
            if pattern_of(heights) != pat:
                continue
            if not boards.box_in_shape(p.shape, combo[-1][0], max(heights)):
                continue
            cx = min(x for x, _ in combo) - 1
            cy = min(heights) - 1
            if cx >= 1 and cy >= 1:
                corners.add((cx, cy))
    return corners


def suffix_reduction(mu: Shape, p: Placement, t: SuffixSet) -> ReducedBoard:
    """Build the reduced board of (mu, p) for the suffix set t.

    >>> from .boards import graph_of
    >>> from .perms import perm_from_text
    >>> rb = suffix_reduction((9,) * 9, graph_of(perm_from_text('127965384')),
    ...                       suffix_set(3, [(5, 4)]))
    >>> rb.shape
    (4, 4, 4, 3)
    """
    mu = boards.validate_shape(mu)
    if not boards.is_self_conjugate(mu):
        raise InvalidPlacementError(f"parent shape is not self-conjugate: {mu}")
    if p.shape != mu or not boards.is_symmetric(p) or not boards.is_full(p):
        raise InvalidPlacementError("placement must be symmetric and full on mu")

    corners = _suffix_corners(p, t)
    corners |= {(b, a) for a, b in corners}
    # column x of the marked region reaches height h(x); union of rectangles
    heights = [0] * (len(mu) + 1)
    for a, b in corners:
        for x in range(1, a + 1):
            heights[x] = max(heights[x], b)
    mu_cols = boards.column_heights(mu)
    region = [min(heights[x], mu_cols[x - 1]) for x in range(1, len(mu) + 1)]

    def in_region(x: int, y: int) -> bool:
        return 1 <= x <= len(region) and 1 <= y <= region[x - 1]

    kept_cols = tuple(sorted(x for x, y in p.dots if in_region(x, y)))
    kept_rows = tuple(sorted(y for x, y in p.dots if in_region(x, y)))
    assert kept_cols == kept_rows, "symmetry must keep the same rows and columns"

    col_rank = {x: r for r, x in enumerate(kept_cols, start=1)}
    row_rank = {y: s for s, y in enumerate(kept_rows, start=1)}
    parts = []
    for y in kept_rows:
        parts.append(sum(1 for x in kept_cols if in_region(x, y)))
    parts = tuple(sorted((p_ for p_ in parts if p_ > 0), reverse=True))
    # row s of the new shape corresponds to kept_rows[s-1]; check alignment
    row_lengths = {row_rank[y]: sum(1 for x in kept_cols if in_region(x, y)) for y in kept_rows}
    shape = tuple(row_lengths[s] for s in range(1, len(kept_rows) + 1))
    assert tuple(sorted(shape, reverse=True)) == parts
    shape = boards.validate_shape(shape)

    induced = Placement(
        shape,
        frozenset(
            (col_rank[x], row_rank[y]) for x, y in p.dots if in_region(x, y)
        ),
    )
    assert boards.is_symmetric(induced) and boards.is_full(induced)
    return ReducedBoard(shape, induced, kept_cols, kept_rows)


def verify_reduction_equivalence(mu: Shape, p: Placement, sigma: Perm, t: SuffixSet) -> bool:
    """Whether [p contains some prefix+suffix pattern] iff [the induced
    placement on the reduced board contains the prefix].  Always true.
    """
    sigma = tuple(sigma)
    patterns = t.patterns_with_prefix(sigma)
    lhs = any(boards.placement_contains(p, pat) for pat in patterns)
    rb = suffix_reduction(mu, p, t)
    rhs = boards.placement_contains(rb.induced, sigma)
    return lhs == rhs


def class_decomposition_check(mu: Shape, t: SuffixSet, alpha: Perm, beta: Perm) -> bool:
    """Partition the symmetric full placements on mu by their dots outside
    the reduced board, then compare per-class avoider counts against the
    reduced board on both prefixes.  Returns the conjunction of all checks.
    """
    mu = boards.validate_shape(mu)
    alpha, beta = tuple(alpha), tuple(beta)
    t_alpha = t.patterns_with_prefix(alpha)
    t_beta = t.patterns_with_prefix(beta)

    groups: dict[tuple, list[tuple[Placement, ReducedBoard]]] = {}
    for p in boards.symmetric_full_placements(mu):
        rb = suffix_reduction(mu, p, t)
        inner = rb.parent_boxes()
        outside = frozenset(d for d in p.dots if d not in inner)
        groups.setdefault((outside, inner), []).append((p, rb))

    for (_, _), members in groups.items():
        shape = members[0][1].shape
        if any(rb.shape != shape for _, rb in members):
            return False
        if len(members) != len(boards.symmetric_full_placements(shape)):
            return False
        inner_count_a = sum(
            1
            for placement in boards.symmetric_full_placements(shape)
            if not boards.placement_contains(placement, alpha)
        )
        inner_count_b = sum(
            1
            for placement in boards.symmetric_full_placements(shape)
            if not boards.placement_contains(placement, beta)
        )
        outer_count_a = sum(
            1
            for p, _ in members
            if all(not boards.placement_contains(p, pat) for pat in t_alpha)
        )
        outer_count_b = sum(
            1
            for p, _ in members
            if all(not boards.placement_contains(p, pat) for pat in t_beta)
        )
        if outer_count_a != inner_count_a or outer_count_b != inner_count_b:
            return False
    return True
