"""CSV ingestion, series alignment, end-to-end runs and output emission.

Input files are plain CSVs whose first column header is `date` (opaque,
lexicographically ascending strings) and whose remaining columns are asset
closing prices. Several files are aligned by inner join on the date: a date
survives only if every selected asset has a parseable value there. Dropped
row counts go to the log so silent data loss stays visible.

Emission is deterministic to the byte: floats are rendered with repr (the
shortest round-trippable form), CSV uses RFC-4180 quoting with LF line
endings, and files are written to a temp path and atomically renamed.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import (
    DataError,
    NonPositivePrice,
    ParseError,
    TooFewCommonRows,
)
from .geometry import PriceTable, log_returns, sliding_windows
from .norms import NormSeries, WindowNorms, compute_norm_series, window_diagrams

__all__ = ["RunConfig", "RunResult", "ingest", "run", "emit", "normalized_table"]

log = logging.getLogger("marketscape")

FORMATS = ("csv", "json")


@dataclass
class RunConfig:
    inputs: tuple[Path, ...]
    out: Path | None
    window: int = 30
    assets: tuple[str, ...] | None = None  # None selects every column
    out_format: str = "csv"
    normalized_out: Path | None = None
    max_scale: float | None = None  # None = auto (window diameter)
    jobs: int = 1

    def __post_init__(self):
        self.inputs = tuple(Path(p) for p in self.inputs)
        if not self.inputs:
            raise ValueError("at least one input file is required")
        if self.window < 2:
            raise ValueError(f"window must be at least 2, got {self.window}")
        if self.assets is not None:
            self.assets = tuple(self.assets)
            if len(self.assets) < 2:
                raise ValueError("at least two assets must be selected")
            if len(set(self.assets)) != len(self.assets):
                raise ValueError("asset selection contains duplicates")
        if self.out_format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.out_format!r}")
        if self.max_scale is not None and not self.max_scale >= 0:
            raise ValueError(f"max-scale must be nonnegative, got {self.max_scale}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {self.jobs}")


def _parse_file(path: Path) -> tuple[list[str], dict[str, list[float | None]]]:
    """One CSV -> (asset labels, date -> row of values).

    A cell that is empty or not a finite number becomes None (the row drops
    out of the join for that asset); a nonpositive number is a hard error.
    """
    if not path.exists():
        raise FileNotFoundError(f"input file not found: {path}")
    rows: dict[str, list[float | None]] = {}
    with open(path, newline="", encoding="utf-8-sig") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError(path, 1, "file is empty") from None
        header = [h.strip() for h in header]
        if not header or header[0] != "date":
            raise ParseError(path, 1, "first column header must be 'date'")
        labels = header[1:]
        if not labels:
            raise ParseError(path, 1, "no asset columns after 'date'")
        if len(set(labels)) != len(labels) or any(not l for l in labels):
            raise ParseError(path, 1, "asset column names must be unique and nonempty")
        for lineno, cells in enumerate(reader, start=2):
            if not cells:
                continue  # tolerate blank trailing lines
            if len(cells) != len(header):
                raise ParseError(
                    path, lineno, f"expected {len(header)} fields, got {len(cells)}"
                )
            date = cells[0].strip()
            if not date:
                raise ParseError(path, lineno, "empty date")
            if date in rows:
                raise ParseError(path, lineno, f"duplicate date {date!r}")
            values: list[float | None] = []
            for label, cell in zip(labels, cells[1:]):
                try:
                    value = float(cell)
                except ValueError:
                    values.append(None)
                    continue
                if not math.isfinite(value):
                    values.append(None)
                    continue
                if value <= 0:
                    raise NonPositivePrice(f"{path}:{lineno}", label, value)
                values.append(value)
            rows[date] = values
    return labels, rows


def ingest(config: RunConfig) -> PriceTable:
    """Parse and inner-join the input files into one aligned price table."""
    columns: dict[str, dict[str, float | None]] = {}  # label -> date -> value
    order: list[str] = []
    for path in config.inputs:
        labels, rows = _parse_file(path)
        for i, label in enumerate(labels):
            if label in columns:
                raise ParseError(path, 1, f"asset {label!r} appears in several inputs")
            columns[label] = {date: values[i] for date, values in rows.items()}
            order.append(label)

    if config.assets is None:
        selected = order
        if len(selected) < 2:
            raise DataError(
                f"need at least two asset columns, inputs provide {len(selected)}"
            )
    else:
        missing = [a for a in config.assets if a not in columns]
        if missing:
            raise DataError(f"assets not found in inputs: {', '.join(missing)}")
        selected = list(config.assets)

    all_dates = set()
    for label in selected:
        all_dates.update(columns[label])
    common = [
        date
        for date in sorted(all_dates)
        if all(columns[label].get(date) is not None for label in selected)
    ]
    dropped = len(all_dates) - len(common)
    if dropped:
        log.warning(
            "dropped %d of %d dates during alignment (missing or unparseable cells)",
            dropped,
            len(all_dates),
        )
    if len(common) < config.window + 1:
        raise TooFewCommonRows(len(common), config.window + 1)

    values = np.array(
        [[columns[label][date] for label in selected] for date in common], dtype=float
    )
    return PriceTable(values, tuple(selected), tuple(common))


def normalized_table(table: PriceTable) -> list[list[str | float]]:
    """Per-asset min-max normalized values, as rows of [date, v1, v2, ...].

    A constant column normalizes to 0.0.
    """
    v = table.values
    lo = v.min(axis=0)
    span = v.max(axis=0) - lo
    span = np.where(span == 0, 1.0, span)
    norm = (v - lo) / span
    return [
        [date, *norm[i].tolist()] for i, date in enumerate(table.timestamps)
    ]


@dataclass
class RunResult:
    series: NormSeries
    table: PriceTable
    timestamps: tuple[str, ...] = field(default=())


def run(config: RunConfig) -> RunResult:
    """Full pipeline: ingest -> log-returns -> windows -> norms -> emit."""
    table = ingest(config)
    returns = log_returns(table)
    windows = sliding_windows(returns, config.window)
    series = compute_norm_series(
        windows,
        timestamps=returns.timestamps,
        max_scale=config.max_scale,
        jobs=config.jobs,
        labels=table.labels,
    )
    if config.out is not None:
        emit(series, config)
    if config.normalized_out is not None:
        _write_atomic(
            config.normalized_out,
            _render_normalized(table, config.out_format),
        )
    return RunResult(series, table, returns.timestamps)


def _fmt(x: float) -> str:
    return repr(float(x))


def render_series_csv(series: NormSeries) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t", "timestamp", "l0", "l1", "c1"])
    for r in series.records:
        writer.writerow(
            [
                r.t,
                r.timestamp or "",
                _fmt(r.l0),
                _fmt(r.l1),
                "" if r.c1 is None else _fmt(r.c1),
            ]
        )
    return buf.getvalue()


def render_series_json(series: NormSeries) -> str:
    payload = [
        {
            "t": r.t,
            "timestamp": r.timestamp,
            "l0": r.l0,
            "l1": r.l1,
            "c1": r.c1,
        }
        for r in series.records
    ]
    return json.dumps(payload, indent=2) + "\n"


def parse_series_csv(text: str, labels=(), window_len: int = 0) -> NormSeries:
    """Inverse of render_series_csv (used for round-trip checks)."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != ["t", "timestamp", "l0", "l1", "c1"]:
        raise ParseError("<series>", 1, f"unexpected header {header}")
    records = []
    for cells in reader:
        if not cells:
            continue
        records.append(
            WindowNorms(
                t=int(cells[0]),
                timestamp=cells[1] or None,
                l0=float(cells[2]),
                l1=float(cells[3]),
                c1=float(cells[4]) if cells[4] else None,
            )
        )
    return NormSeries(tuple(records), tuple(labels), window_len)


def emit(series: NormSeries, config: RunConfig) -> None:
    """Write the norm series to config.out in the configured format."""
    if not series.records:
        raise ValueError("refusing to emit an empty series")
    if config.out_format == "csv":
        text = render_series_csv(series)
    else:
        text = render_series_json(series)
    _write_atomic(config.out, text)


def _render_normalized(table: PriceTable, out_format: str) -> str:
    rows = normalized_table(table)
    if out_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["date", *table.labels])
        for date, *values in rows:
            writer.writerow([date, *(_fmt(v) for v in values)])
        return buf.getvalue()
    payload = [
        {"date": date, **dict(zip(table.labels, values))} for date, *values in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def render_diagrams_csv(series_rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t", "timestamp", "dim", "birth", "death"])
    for t, stamp, dim, birth, death in series_rows:
        writer.writerow([t, stamp or "", dim, _fmt(birth), _fmt(death)])
    return buf.getvalue()


def render_diagrams_json(series_rows) -> str:
    payload = [
        {
            "t": t,
            "timestamp": stamp,
            "dim": dim,
            "birth": birth,
            "death": None if math.isinf(death) else death,
        }
        for t, stamp, dim, birth, death in series_rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def dump_diagrams(config: RunConfig) -> str:
    """Per-window persistence pairs, for debugging."""
    table = ingest(config)
    returns = log_returns(table)
    windows = sliding_windows(returns, config.window)
    rows = []
    for w in windows:
        stamp = returns.timestamps[w.window_start]
        d0, d1 = window_diagrams(w, config.max_scale)
        for diagram in (d0, d1):
            for p in diagram.pairs:
                rows.append((w.window_start, stamp, p.dim, p.birth, p.death))
    if config.out_format == "csv":
        text = render_diagrams_csv(rows)
    else:
        text = render_diagrams_json(rows)
    if config.out is not None:
        _write_atomic(config.out, text)
    return text


def _write_atomic(path: Path, text: str) -> None:
    path = Path(path)
    if str(path) == "-":
        import sys

        sys.stdout.write(text)
        return
    tmp = path.with_name(path.name + ".tmp")
    try:
        with open(tmp, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except OSError:
        if tmp.exists():
            tmp.unlink()
        raise
