"""Matplotlib drawings of witnesses in the mirror layout.

Left vertices sit at x = 0 and right vertices at x = 1; with a pairing the
partner of each left vertex sits at the same height, so a mirror graph's
drawing is symmetric about the vertical line x = 1/2.  Used by the CLI's
report path to drop one PNG per witness next to the delimited summary.
"""

from __future__ import annotations

import os
from typing import TYPE_CHECKING, Iterable

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .core import BipartiteGraph, MirrorPairing

if TYPE_CHECKING:
    from matplotlib.axes import Axes

__all__ = ["draw_bipartite", "save_witness_figures"]


def draw_bipartite(
    g: BipartiteGraph,
    pairing: MirrorPairing | None = None,
    ax: "Axes | None" = None,
    title: str | None = None,
) -> "Axes":
    if ax is None:
        _, ax = plt.subplots(figsize=(3.2, 0.6 * max(g.n1, g.n2, 2) + 0.8))
    heights = list(range(g.n2))
    if pairing is not None:
        for i, j in enumerate(pairing):
            heights[j] = i
    for i, j in g.edges():
        ax.plot([0, 1], [i, heights[j]], color="0.45", lw=1.1, zorder=1)
    ax.scatter([0] * g.n1, range(g.n1), s=140, color="#1f77b4", zorder=2)
    ax.scatter([1] * g.n2, [heights[j] for j in range(g.n2)], s=140, color="#d62728", zorder=2)
    for i in range(g.n1):
        ax.annotate(f"a{i}", (0, i), ha="right", va="center", xytext=(-10, 0),
                    textcoords="offset points", fontsize=9)
    for j in range(g.n2):
        ax.annotate(f"b{j}", (1, heights[j]), ha="left", va="center", xytext=(10, 0),
                    textcoords="offset points", fontsize=9)
    ax.set_xlim(-0.45, 1.45)
    top = max(g.n1, g.n2, 1)
    ax.set_ylim(-0.8, top - 0.2)
    ax.invert_yaxis()
    ax.set_axis_off()
    if title:
        ax.set_title(title, fontsize=10)
    return ax


def save_witness_figures(
    witnesses: Iterable[tuple[BipartiteGraph, bool | None, MirrorPairing | None]],
    outdir: str,
    stem: str = "witness",
) -> list[str]:
    """One PNG per witness; a None verdict leaves the title bare.

    Returns the paths written.
    """
    os.makedirs(outdir, exist_ok=True)
    paths = []
    for idx, (g, mirror, pairing) in enumerate(witnesses):
        title = f"{stem} {idx}"
        if mirror is not None:
            title += ": mirror" if mirror else ": not mirror"
        ax = draw_bipartite(g, pairing, title=title)
        path = os.path.join(outdir, f"{stem}_{idx:03d}.png")
        ax.figure.savefig(path, dpi=150, bbox_inches="tight")
        plt.close(ax.figure)
        paths.append(path)
    return paths
