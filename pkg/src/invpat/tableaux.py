"""Standard Young tableaux, row insertion, and evacuation.

A tableau is stored as a tuple of row tuples, the row containing 1 first.
Entries increase along rows and along columns (from one row to the next),
and row lengths weakly decrease.
"""
from __future__ import annotations

from bisect import bisect_right
from typing import Iterator

from .errors import InvalidTableauError
from .perms import Perm, validate_perm

Tableau = tuple[tuple[int, ...], ...]


def tableau_shape(t: Tableau) -> tuple[int, ...]:
    return tuple(len(row) for row in t)


def is_standard(t: Tableau) -> bool:
    """Check strict row/column increase and entries 1..n each once."""
    lengths = tableau_shape(t)
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        return False
    entries = [v for row in t for v in row]
    if sorted(entries) != list(range(1, len(entries) + 1)):
        return False
    for row in t:
        if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
            return False
    for r in range(len(t) - 1):
        if any(t[r][c] >= t[r + 1][c] for c in range(len(t[r + 1]))):
            return False
    return True


def validate_tableau(rows) -> Tableau:
    t = tuple(tuple(row) for row in rows)
    if not is_standard(t):
        raise InvalidTableauError(f"not a standard tableau: {t}")
    return t


def transpose_tableau(t: Tableau) -> Tableau:
    """Reflect across the main diagonal (rows become columns).

    >>> transpose_tableau(((1, 2), (3,)))
    ((1, 3), (2,))
    """
    if not t:
        return ()
    return tuple(
        tuple(t[r][c] for r in range(len(t)) if c < len(t[r])) for c in range(len(t[0]))
    )


def rsk(pi: Perm) -> tuple[Tableau, Tableau]:
    """Row-insert pi; return the insertion and recording tableaux.

    The tableaux share a shape with len(pi) boxes, and an involution yields
    equal tableaux.

    >>> rsk((3, 1, 2))
    (((1, 2), (3,)), ((1, 3), (2,)))
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, value in enumerate(pi, start=1):
        x = value
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([x])
                q_rows.append([step])
                break
            row = p_rows[r]
            idx = bisect_right(row, x)
            if idx == len(row):
                row.append(x)
                q_rows[r].append(step)
                break
            row[idx], x = x, row[idx]
            r += 1
    return tuple(tuple(r) for r in p_rows), tuple(tuple(r) for r in q_rows)


def rsk_inverse(p: Tableau, q: Tableau) -> Perm:
    """Recover the permutation from an (insertion, recording) pair.

    >>> rsk_inverse(((1, 2), (3,)), ((1, 3), (2,)))
    (3, 1, 2)
    """
    p = validate_tableau(p)
    q = validate_tableau(q)
    if tableau_shape(p) != tableau_shape(q):
        raise InvalidTableauError("tableaux have different shapes")
    rows = [list(row) for row in p]
    cell_of = {q[r][c]: (r, c) for r in range(len(q)) for c in range(len(q[r]))}
    n = sum(len(row) for row in p)
    word = [0] * n
    for step in range(n, 0, -1):
        r, c = cell_of[step]
        x = rows[r].pop(c)
        if not rows[r]:
            rows.pop(r)
        for above in range(r - 1, -1, -1):
            row = rows[above]
            idx = bisect_right(row, x) - 1
            row[idx], x = x, row[idx]
        word[step - 1] = x
    return validate_perm(word)


def evacuation(q: Tableau) -> Tableau:
    """The shape-preserving involution obtained by iterated removal slides.

    Repeatedly delete the smallest entry and slide the hole to an outer
    corner; the corner vacated at step s receives n+1-s in the result.

    >>> evacuation(((1, 2), (3,)))
    ((1, 3), (2,))
    >>> evacuation(((1, 2, 3),))
    ((1, 2, 3),)
    """
    q = validate_tableau(q)
    rows = [list(row) for row in q]
    n = sum(len(row) for row in rows)
    out = [[0] * len(row) for row in q]
    for step in range(1, n + 1):
        r = c = 0
        while True:
            right = rows[r][c + 1] if c + 1 < len(rows[r]) else None
            below = (
                rows[r + 1][c] if r + 1 < len(rows) and c < len(rows[r + 1]) else None
            )
            if right is None and below is None:
                break
            if below is None or (right is not None and right < below):
                rows[r][c] = right
                c += 1
            else:
                rows[r][c] = below
                r += 1
        rows[r].pop()
        if not rows[r]:
            rows.pop(r)
        out[r][c] = n + 1 - step
    return tuple(tuple(row) for row in out)


def check_reversal_property(w: Perm) -> bool:
    """Whether reversing w transposes the insertion tableau and evacuates
    then transposes the recording tableau.  Holds for every permutation.
    """
    p, q = rsk(w)
    rp, rq = rsk(tuple(reversed(w)))
    return rp == transpose_tableau(p) and rq == transpose_tableau(evacuation(q))


def standard_tableaux(shape: tuple[int, ...]) -> Iterator[Tableau]:
    """Yield every standard tableau of the given shape.

    Built by removing the largest entry from an outer corner and recursing.
    """
    n = sum(shape)
    if n == 0:
        yield ()
        return
    for r in range(len(shape)):
        at_corner = shape[r] > (shape[r + 1] if r + 1 < len(shape) else 0)
        if not at_corner:
            continue
        smaller = list(shape)
        smaller[r] -= 1
        if smaller[r] == 0:
            smaller.pop(r)
        for t in standard_tableaux(tuple(smaller)):
            rows = [list(row) for row in t]
            if r == len(rows):
                rows.append([])
            rows[r].append(n)
            yield tuple(tuple(row) for row in rows)


def tableau_to_text(t: Tableau) -> str:
    """Rows joined by '/', entries comma-separated: '1,2/3'."""
    return "/".join(",".join(str(v) for v in row) for row in t)


def tableau_from_text(text: str) -> Tableau:
    text = text.strip()
    if not text:
        return ()
    return validate_tableau(
        tuple(tuple(int(v) for v in row.split(",")) for row in text.split("/"))
    )
