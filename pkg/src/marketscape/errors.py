"""Exception types shared across the pipeline.

Everything raised for bad input data or violated computation preconditions
derives from DataError, so callers (and the CLI exit-code mapping) can catch
one base class. I/O failures stay native OSError.
"""

from __future__ import annotations


class DataError(Exception):
    """Invalid input data or a violated computation precondition."""


class NonPositivePrice(DataError):
    def __init__(self, row, col, value=None):
        self.row = row
        self.col = col
        self.value = value
        detail = f" (value {value!r})" if value is not None else ""
        super().__init__(f"non-positive price at row {row}, asset {col}{detail}")


class TooFewRows(DataError):
    def __init__(self, have: int, need: int):
        self.have = have
        self.need = need
        super().__init__(f"need at least {need} price rows, got {have}")


class WindowTooLong(DataError):
    def __init__(self, window: int, rows: int):
        self.window = window
        self.rows = rows
        super().__init__(f"window {window} exceeds the {rows} available return rows")


class WindowTooShort(DataError):
    def __init__(self, window: int):
        self.window = window
        super().__init__(f"window must be at least 2, got {window}")


class EmptyCloud(DataError):
    def __init__(self, message: str = "point cloud is empty"):
        super().__init__(message)


class MissingFace(DataError):
    """A filtration is not closed under faces (internal invariant breach)."""

    def __init__(self, face, simplex):
        self.face = face
        self.simplex = simplex
        super().__init__(f"face {face} of simplex {simplex} missing from filtration")


class FiltrationDimensionTooLow(DataError):
    def __init__(self, max_dim: int):
        self.max_dim = max_dim
        super().__init__(
            f"1-dimensional persistence needs a filtration built with triangles "
            f"(max_dim=2), got max_dim={max_dim}"
        )


class ParseError(DataError):
    def __init__(self, path, line: int, message: str):
        self.path = path
        self.line = line
        super().__init__(f"{path}:{line}: {message}")


class TooFewCommonRows(DataError):
    def __init__(self, have: int, need: int):
        self.have = have
        self.need = need
        super().__init__(
            f"only {have} rows survive timestamp alignment, need at least {need}"
        )


class WindowComputeError(DataError):
    """A per-window computation failed; carries the window start index."""

    def __init__(self, window_start: int, cause: Exception):
        self.window_start = window_start
        super().__init__(f"window t={window_start}: {cause}")
