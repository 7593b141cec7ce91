"""Figures for benchmark reports, written next to the TSV table."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
}

# PNG metadata pinned so repeated runs write identical bytes.
_METADATA = {"Software": None}


def _save(fig, path: Path) -> Path:
    fig.savefig(path, metadata=_METADATA)
    plt.close(fig)
    return path


def ratio_histogram(rows: Sequence, path: Path) -> Path:
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.5, 3.0))
        alg = [r.alg / r.opt for r in rows if r.opt]
        greedy = [r.greedy / r.opt for r in rows if r.opt]
        bins = [1 + 0.05 * i for i in range(0, 36)]
        ax.hist([alg, greedy], bins=bins, label=["cycle-cover", "greedy"])
        ax.axvline(8 / 3, color="k", linestyle="--", linewidth=0.8, label="8/3")
        ax.set_xlabel("length / optimum")
        ax.set_ylabel("instances")
        ax.legend(frameon=False)
        fig.tight_layout()
        return _save(fig, path)


def length_scatter(rows: Sequence, path: Path) -> Path:
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.5, 3.5))
        pts = [r for r in rows if r.opt]
        if pts:
            top = max(max(r.alg, r.greedy) for r in pts)
            ax.plot([0, top], [0, top], color="0.6", linewidth=0.8)
            ax.plot([0, top], [0, 8 * top / 3], color="k", linestyle="--", linewidth=0.8, label="8/3 bound")
            ax.scatter([r.opt for r in pts], [r.alg for r in pts], s=10, label="cycle-cover")
            ax.scatter([r.opt for r in pts], [r.greedy for r in pts], s=10, marker="x", label="greedy")
            ax.scatter([r.opt for r in pts], [r.lower_bound for r in pts], s=8, marker="_", label="cover bound")
            ax.set_ylim(0, top * 1.05)
            ax.legend(frameon=False)
        ax.set_xlabel("optimum length")
        ax.set_ylabel("length")
        fig.tight_layout()
        return _save(fig, path)


def bench_figures(rows: Sequence, outdir: Path) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    return [
        ratio_histogram(rows, outdir / "ratio_hist.png"),
        length_scatter(rows, outdir / "lengths.png"),
    ]
