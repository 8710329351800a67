"""Exception types shared across the package."""


class InvalidWordError(ValueError):
    """A word with repeated entries cannot define a pattern."""


class InvalidShapeError(ValueError):
    """A partition that is not weakly decreasing, or lacks a required symmetry."""


class InvalidPlacementError(ValueError):
    """Dots that violate the one-per-row/column rule or a required symmetry."""


class InvalidPatternError(ValueError):
    """A pattern argument outside the domain of the operation."""


class InvalidTableauError(ValueError):
    """Rows that do not form a standard Young tableau, or mismatched shapes."""


class InvalidInputError(ValueError):
    """A precondition of a transformation failed; the message names it."""


class TableMismatchError(RuntimeError):
    """A recomputed table cell disagrees with the stored golden value."""

    def __init__(self, cells):
        self.cells = list(cells)
        lines = ", ".join(
            f"{label} n={n}: got {got}, expected {want}" for label, n, got, want in self.cells
        )
        super().__init__(f"table mismatch: {lines}")
