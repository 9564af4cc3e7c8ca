"""Figures written next to the text output (matplotlib, non-interactive backend)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .partitions import dimension, format_partition  # noqa: E402

__all__ = ["character_table_figure", "multiplicity_figure"]

_STABLE_METADATA = {
    ".png": {"Software": None},
    ".pdf": {"Creator": None, "Producer": None, "CreationDate": None},
    ".svg": {"Creator": None, "Date": None},
}


def _save(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    # drop timestamps and version strings so repeated runs write identical files
    metadata = _STABLE_METADATA.get(path.suffix.lower())
    fig.savefig(path, dpi=120, bbox_inches="tight", metadata=metadata)
    plt.close(fig)
    return path


def character_table_figure(table, path) -> Path:
    """Heatmap of a character table with the values printed in the cells."""
    n = len(table.irreps)
    fig, ax = plt.subplots(figsize=(1.0 + 0.55 * n, 0.8 + 0.45 * n))
    vmax = max(abs(v) for row in table.values for v in row) or 1
    ax.imshow(table.values, cmap="RdBu_r", vmin=-vmax, vmax=vmax)
    ax.set_xticks(range(len(table.classes)), [format_partition(mu) for mu in table.classes], rotation=60, fontsize=7)
    ax.set_yticks(range(n), [format_partition(lam) for lam in table.irreps], fontsize=7)
    if n <= 15:
        for i, row in enumerate(table.values):
            for j, v in enumerate(row):
                ax.text(j, i, str(v), ha="center", va="center", fontsize=6)
    ax.set_xlabel("cycle type")
    ax.set_ylabel("irreducible character")
    ax.set_title(f"Character table of S_{table.degree}")
    return _save(fig, path)


def multiplicity_figure(mult, path, title: str = "Constituents of the ideal") -> Path:
    """Bar chart of constituent multiplicities, annotated with the ideal dimension they contribute."""
    items = mult.sorted_items()
    fig, ax = plt.subplots(figsize=(max(3.0, 0.6 * len(items) + 1.5), 3.0))
    labels = [f"[{format_partition(lam)}]" for lam, _ in items]
    counts = [c for _, c in items]
    bars = ax.bar(range(len(items)), counts, color="#4c72b0")
    for bar, (lam, c) in zip(bars, items):
        ax.text(bar.get_x() + bar.get_width() / 2, bar.get_height(), f"dim {c * dimension(lam)}",
                ha="center", va="bottom", fontsize=7)
    ax.set_xticks(range(len(items)), labels, rotation=45, fontsize=8)
    ax.set_ylabel("multiplicity")
    ax.set_title(title, fontsize=9)
    if counts:
        ax.set_ylim(0, max(counts) * 1.25)
    return _save(fig, path)
