"""Figure rendering for the report path.

One stacked figure with the three indicator panels plus the per-asset
min-max normalized closing values, written straight to file (Agg backend,
no display needed).
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .geometry import PriceTable
from .norms import NormSeries
from .pipeline import normalized_table

__all__ = ["render_report"]


def render_report(
    series: NormSeries,
    table: PriceTable | None,
    path: Path,
    dpi: int = 150,
) -> None:
    """Render l0 / l1 / c1 panels (and normalized prices, if available)."""
    panels = 4 if table is not None else 3
    fig, axes = plt.subplots(
        panels, 1, figsize=(11, 2.4 * panels), sharex=False, constrained_layout=True
    )

    ts = [r.t for r in series.records]
    for ax, name, values in (
        (axes[0], "l0", [r.l0 for r in series.records]),
        (axes[1], "l1", [r.l1 for r in series.records]),
    ):
        ax.plot(ts, values, lw=0.9)
        ax.set_ylabel(name)
        ax.grid(True, alpha=0.3)

    c1_ts = [r.t for r in series.records if r.c1 is not None]
    c1_vals = [r.c1 for r in series.records if r.c1 is not None]
    axes[2].plot(c1_ts, c1_vals, lw=0.9, color="tab:red")
    axes[2].axhline(0.0, color="black", lw=0.5)
    axes[2].set_ylabel("c1")
    axes[2].grid(True, alpha=0.3)
    axes[2].set_xlabel("window start t")

    if table is not None:
        rows = normalized_table(table)
        xs = range(len(rows))
        for j, label in enumerate(table.labels):
            axes[3].plot(xs, [row[1 + j] for row in rows], lw=0.8, label=label)
        axes[3].set_ylabel("normalized value")
        axes[3].set_xlabel("price row")
        axes[3].grid(True, alpha=0.3)
        axes[3].legend(loc="upper left", fontsize=8, ncol=min(4, len(table.labels)))

    fig.suptitle(f"window T={series.window_len}: {', '.join(series.labels)}")
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
