"""Matplotlib renderings: staircase diagrams and survey summaries.

Figures are built directly on ``matplotlib.figure.Figure`` (no pyplot
state), so rendering works headless and writing to a file is the only
side effect.
"""
from __future__ import annotations

from pathlib import Path

from matplotlib.figure import Figure
from matplotlib.patches import Rectangle

from . import hessfn
from .hessfn import HessFn
from .report import ClassReport, summary_counts

FILL = "#b8cbe3"
BOUNDARY = "#1f3a5f"


def staircase_figure(h: HessFn, show_pivots: bool = True) -> Figure:
    """The box diagram of h with its boundary path and pivot dots.

    Row 1 is at the top; the dot in column j sits in row w(j) for the
    pivot permutation w, marking the inner corners of the boundary.
    """
    n = h.n
    side = max(2.4, 0.32 * n)
    fig = Figure(figsize=(side, side))
    ax = fig.subplots()

    for j in range(1, n + 1):
        for i in range(1, h(j) + 1):
            ax.add_patch(
                Rectangle((j - 1, i - 1), 1, 1, facecolor=FILL, edgecolor="white", lw=0.6)
            )

    # boundary path: down the left wall to depth h(1), then along the
    # bottom of each column with vertical joins where h steps up
    ax.plot([0, 0], [0, h(1)], color=BOUNDARY, lw=2.0, solid_capstyle="round")
    for j in range(1, n + 1):
        ax.plot([j - 1, j], [h(j), h(j)], color=BOUNDARY, lw=2.0, solid_capstyle="round")
        if j < n and h(j) != h(j + 1):
            ax.plot([j, j], [h(j), h(j + 1)], color=BOUNDARY, lw=2.0)

    if show_pivots:
        w = hessfn.pivot_permutation(h)
        ax.scatter(
            [j - 0.5 for j in range(1, n + 1)],
            [w[j - 1] - 0.5 for j in range(1, n + 1)],
            s=max(6.0, 180.0 / n),
            color=BOUNDARY,
            zorder=3,
        )

    ax.set_xlim(0, n)
    ax.set_ylim(0, n)
    ax.invert_yaxis()
    ax.set_aspect("equal")
    ax.set_xticks([])
    ax.set_yticks([])
    for spine in ax.spines.values():
        spine.set_color("#999999")
    ax.set_title(f"h = {hessfn.to_text(h)}", fontsize=9)
    return fig


def survey_figure(reports: list[ClassReport]) -> Figure:
    """Classification counts for one survey as a small bar chart."""
    counts = summary_counts(reports)
    fano = counts["fano"]
    weak_only = counts["nef"] - fano
    rest = counts["total"] - counts["nef"]

    fig = Figure(figsize=(4.2, 3.0))
    ax = fig.subplots()
    labels = ["Fano", "weak Fano\n(not Fano)", "not nef"]
    values = [fano, weak_only, rest]
    bars = ax.bar(labels, values, color=[BOUNDARY, FILL, "#cccccc"])
    ax.bar_label(bars)
    n = reports[0].n if reports else "?"
    ax.set_title(f"connected Hessenberg functions, n = {n}", fontsize=9)
    ax.set_ylabel("count")
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    return fig


def save_figure(fig: Figure, path: str | Path) -> None:
    fig.savefig(Path(path), dpi=160, bbox_inches="tight")
