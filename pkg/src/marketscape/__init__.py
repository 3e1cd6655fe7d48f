"""Topological stability indicators for multi-asset price series.

Pipeline: closing prices -> log-returns -> sliding-window point clouds ->
Vietoris-Rips persistence (dimensions 0 and 1) -> landscape norms l0/l1/c1.
"""

from .errors import DataError
from .filtration import Filtration, Simplex, boundary, build_rips
from .geometry import (
    DistanceMatrix,
    PriceTable,
    ReturnMatrix,
    WindowCloud,
    distance_matrix,
    log_returns,
    sliding_windows,
)
from .landscape import Landscape, build_landscape
from .norms import (
    NormSeries,
    WindowNorms,
    c1_indicator,
    compute_norm_series,
    l0_indicator,
    l1_indicator,
    window_diagrams,
)
from .persistence import (
    PersistenceDiagram,
    PersistencePair,
    compute_h0,
    compute_h1,
    reduce_matrix,
)
from .pipeline import RunConfig, emit, ingest, run

__version__ = "0.1.0"

__all__ = [
    "DataError",
    "DistanceMatrix",
    "Filtration",
    "Landscape",
    "NormSeries",
    "PersistenceDiagram",
    "PersistencePair",
    "PriceTable",
    "ReturnMatrix",
    "RunConfig",
    "Simplex",
    "WindowCloud",
    "WindowNorms",
    "boundary",
    "build_landscape",
    "build_rips",
    "c1_indicator",
    "compute_h0",
    "compute_h1",
    "compute_norm_series",
    "distance_matrix",
    "emit",
    "ingest",
    "l0_indicator",
    "l1_indicator",
    "log_returns",
    "reduce_matrix",
    "run",
    "sliding_windows",
    "window_diagrams",
]
