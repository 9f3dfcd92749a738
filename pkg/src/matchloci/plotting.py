"""Histogram figures for the degree-dimension tables.

Counts can exceed float range by hundreds of orders of magnitude, so bars
are normalized by the maximum count (exact Fraction ratios) before
rendering; the exact integers always live in the delimited output next to
the figure.
"""

from fractions import Fraction

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_histogram(rows, path, title: str | None = None) -> None:
    """Render ``(degree, count)`` rows as a bar chart PNG at ``path``."""
    rows = list(rows)
    if not rows:
        raise ValueError("nothing to plot")
    peak = max(count for _, count in rows)
    degrees = [degree for degree, _ in rows]
    heights = [
        float(Fraction(count, peak)) if peak else 0.0 for _, count in rows
    ]
    fig, ax = plt.subplots(figsize=(8, 5))
    ax.bar(degrees, heights, width=0.9, color="#356a9c")
    ax.set_xlabel("degree")
    ax.set_ylabel("dimension / max dimension")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
