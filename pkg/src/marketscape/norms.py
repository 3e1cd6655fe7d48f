"""The three market indicators: l1, l0 and c1 per sliding window.

Per window the chain is: distance matrix -> Rips filtration (triangles
included, unbounded scale) -> 0- and 1-dimensional diagrams -> landscape
norms. l1 is the area under the first landscape level of the 1-dimensional
diagram, l0 the area under the second level of the 0-dimensional one
(essential features excluded from both), and c1 the lag-corrected l1,
2*l1[t] - l1[t-1], undefined at the first window.

Windows are independent, so the series can fan out over worker processes;
the c1 join happens afterwards and output order is always by window start.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .errors import DataError, WindowComputeError
from .filtration import build_rips
from .geometry import WindowCloud, distance_matrix
from .landscape import build_landscape
from .persistence import PersistenceDiagram, compute_h0, compute_h1

__all__ = [
    "WindowNorms",
    "NormSeries",
    "l1_indicator",
    "l0_indicator",
    "c1_indicator",
    "window_diagrams",
    "compute_norm_series",
]


@dataclass(frozen=True, slots=True)
class WindowNorms:
    t: int
    timestamp: str | None
    l0: float
    l1: float
    c1: float | None  # undefined at the first window


@dataclass(frozen=True)
class NormSeries:
    records: tuple[WindowNorms, ...]
    labels: tuple[str, ...]
    window_len: int

    def __post_init__(self):
        object.__setattr__(self, "records", tuple(self.records))
        object.__setattr__(self, "labels", tuple(self.labels))
        for i, r in enumerate(self.records):
            if (r.c1 is None) != (i == 0):
                raise ValueError("c1 must be missing exactly at the first window")
            if r.l0 < 0 or r.l1 < 0:
                raise ValueError(f"negative indicator at t={r.t}")
        for prev, cur in zip(self.records, self.records[1:]):
            if cur.t != prev.t + 1:
                raise ValueError(f"window indices not consecutive at t={cur.t}")

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


def l1_indicator(d1: PersistenceDiagram) -> float:
    """Area under the first landscape level of a 1-dimensional diagram."""
    if d1.dim != 1:
        raise ValueError(f"l1 needs a 1-dimensional diagram, got dim {d1.dim}")
    return build_landscape(d1.finite()).lp_norm_level(1, 1.0)


def l0_indicator(d0: PersistenceDiagram) -> float:
    """Area under the second landscape level of a 0-dimensional diagram.

    The essential component is excluded, so fewer than two finite bars give 0.
    """
    if d0.dim != 0:
        raise ValueError(f"l0 needs a 0-dimensional diagram, got dim {d0.dim}")
    return build_landscape(d0.finite()).lp_norm_level(2, 1.0)


def c1_indicator(l1_now: float, l1_prev: float) -> float:
    """Lag-corrected l1 of two consecutive windows: 2*l1_now - l1_prev."""
    return 2.0 * l1_now - l1_prev


def window_diagrams(
    cloud: WindowCloud, max_scale: float | None = None
) -> tuple[PersistenceDiagram, PersistenceDiagram]:
    """0- and 1-dimensional diagrams of one window.

    max_scale=None builds to the window's full diameter.
    """
    scale = math.inf if max_scale is None else float(max_scale)
    filt = build_rips(distance_matrix(cloud), max_dim=2, max_scale=scale)
    return compute_h0(filt), compute_h1(filt)


def _window_indicators(args: tuple[int, object, float | None]) -> tuple[float, float]:
    start, points, max_scale = args
    cloud = WindowCloud(points, start, len(points))
    d0, d1 = window_diagrams(cloud, max_scale)
    return l0_indicator(d0), l1_indicator(d1)


def compute_norm_series(
    windows: Sequence[WindowCloud],
    *,
    timestamps: Sequence[str] | None = None,
    max_scale: float | None = None,
    jobs: int = 1,
    labels: Sequence[str] = (),
) -> NormSeries:
    """Indicator series over consecutive windows.

    ``timestamps`` indexes return rows, so window t is stamped with
    timestamps[t]. ``jobs`` > 1 fans windows out over worker processes;
    results are joined in window order either way, so output is identical
    for any job count.
    """
    windows = list(windows)
    if not windows:
        raise ValueError("empty window sequence")
    window_len = windows[0].window_len
    for prev, cur in zip(windows, windows[1:]):
        if cur.window_start != prev.window_start + 1 or cur.window_len != window_len:
            raise ValueError(f"windows not consecutive at t={cur.window_start}")

    tasks = [(w.window_start, w.points, max_scale) for w in windows]
    results: list[tuple[float, float]] = []
    if jobs <= 1:
        for start, points, scale in tasks:
            try:
                results.append(_window_indicators((start, points, scale)))
            except DataError as exc:
                raise WindowComputeError(start, exc) from exc
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, len(tasks) // (4 * jobs))
            outputs = pool.map(_window_indicators, tasks, chunksize=chunk)
            index = 0
            while True:
                try:
                    results.append(next(outputs))
                except StopIteration:
                    break
                except DataError as exc:
                    raise WindowComputeError(tasks[index][0], exc) from exc
                index += 1

    records = []
    prev_l1: float | None = None
    for w, (l0, l1) in zip(windows, results):
        stamp = timestamps[w.window_start] if timestamps is not None else None
        c1 = None if prev_l1 is None else c1_indicator(l1, prev_l1)
        records.append(WindowNorms(w.window_start, stamp, l0, l1, c1))
        prev_l1 = l1
    return NormSeries(tuple(records), tuple(labels), window_len)
