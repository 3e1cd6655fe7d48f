"""Price tables, log-return matrices, sliding-window point clouds, distances.

Each window of T consecutive return rows is treated as a point cloud of T
points in R^n (n = number of assets); everything downstream works on the
Euclidean distance matrix of that cloud. All values are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    EmptyCloud,
    NonPositivePrice,
    TooFewRows,
    WindowTooLong,
    WindowTooShort,
)

__all__ = [
    "PriceTable",
    "ReturnMatrix",
    "WindowCloud",
    "DistanceMatrix",
    "log_returns",
    "sliding_windows",
    "distance_matrix",
]


def _readonly(values, ndim: int) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if arr.ndim != ndim:
        raise ValueError(f"expected a {ndim}-dimensional array, got shape {arr.shape}")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class PriceTable:
    """Aligned closing values: one row per time step, one column per asset."""

    values: np.ndarray
    labels: tuple[str, ...]
    timestamps: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", _readonly(self.values, 2))
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "timestamps", tuple(self.timestamps))
        rows, n = self.values.shape
        if n < 1:
            raise ValueError("a price table needs at least one asset column")
        if len(self.labels) != n:
            raise ValueError(f"{n} columns but {len(self.labels)} labels")
        if len(self.timestamps) != rows:
            raise ValueError(f"{rows} rows but {len(self.timestamps)} timestamps")
        bad = np.argwhere(~(self.values > 0))  # catches <= 0 and NaN
        if bad.size:
            r, c = bad[0]
            raise NonPositivePrice(int(r), self.labels[int(c)], self.values[r, c])
        for a, b in zip(self.timestamps, self.timestamps[1:]):
            if not a < b:
                raise ValueError(f"timestamps not strictly increasing at {b!r}")

    @property
    def num_rows(self) -> int:
        return self.values.shape[0]

    @property
    def num_assets(self) -> int:
        return self.values.shape[1]


@dataclass(frozen=True)
class ReturnMatrix:
    """Log-returns of consecutive closing values.

    Row i is the return realized between price rows i and i+1 and carries the
    timestamp of the later row.
    """

    returns: np.ndarray
    labels: tuple[str, ...]
    timestamps: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "returns", _readonly(self.returns, 2))
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "timestamps", tuple(self.timestamps))
        rows, n = self.returns.shape
        if len(self.labels) != n:
            raise ValueError(f"{n} columns but {len(self.labels)} labels")
        if len(self.timestamps) != rows:
            raise ValueError(f"{rows} rows but {len(self.timestamps)} timestamps")

    @property
    def num_rows(self) -> int:
        return self.returns.shape[0]


@dataclass(frozen=True)
class WindowCloud:
    """One window of return rows viewed as a point cloud in R^n."""

    points: np.ndarray
    window_start: int
    window_len: int

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2:
            raise ValueError(f"expected a 2-dimensional array, got shape {pts.shape}")
        if pts.flags.writeable:  # read-only slices of a ReturnMatrix pass through
            pts = pts.copy()
            pts.flags.writeable = False
        object.__setattr__(self, "points", pts)
        if pts.shape[0] != self.window_len:
            raise ValueError(f"window_len={self.window_len} but {pts.shape[0]} points")

    @property
    def size(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric pairwise Euclidean distances with zero diagonal."""

    dist: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "dist", _readonly(self.dist, 2))
        d = self.dist
        if d.shape[0] != d.shape[1]:
            raise ValueError(f"distance matrix must be square, got {d.shape}")
        if d.size:
            if not np.all(np.isfinite(d)):
                raise ValueError("distance matrix contains non-finite entries")
            if np.any(d < 0):
                raise ValueError("distance matrix contains negative entries")
            if np.any(np.diagonal(d) != 0):
                raise ValueError("distance matrix diagonal must be zero")
            if not np.array_equal(d, d.T):
                raise ValueError("distance matrix must be symmetric")

    @property
    def size(self) -> int:
        return self.dist.shape[0]


def log_returns(prices: PriceTable) -> ReturnMatrix:
    """Natural-log returns ln(x[i+1]/x[i]) per asset.

    Multiplying all prices by a positive constant leaves the result unchanged
    (the ratios cancel).
    """
    if prices.num_rows < 2:
        raise TooFewRows(prices.num_rows, 2)
    v = prices.values
    returns = np.log(v[1:] / v[:-1])
    return ReturnMatrix(returns, prices.labels, prices.timestamps[1:])


def sliding_windows(returns: ReturnMatrix, window: int) -> list[WindowCloud]:
    """All length-`window` clouds of consecutive return rows.

    Window t covers rows [t, t+window); consecutive windows overlap in
    window-1 rows, so rows - window + 1 clouds come back.
    """
    if window < 2:
        raise WindowTooShort(window)
    rows = returns.num_rows
    if window > rows:
        raise WindowTooLong(window, rows)
    return [
        WindowCloud(returns.returns[t : t + window], t, window)
        for t in range(rows - window + 1)
    ]


def distance_matrix(cloud: WindowCloud) -> DistanceMatrix:
    """Pairwise Euclidean distances between the cloud's points."""
    pts = cloud.points
    if pts.shape[0] == 0:
        raise EmptyCloud()
    diff = pts[:, None, :] - pts[None, :, :]
    d = np.sqrt((diff * diff).sum(axis=-1))
    np.fill_diagonal(d, 0.0)
    return DistanceMatrix(d)
