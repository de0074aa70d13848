"""Figure rendering for census reports.

Renders the cycle-length and destabilization-depth histograms to PNG files
next to the delimited output.  Matplotlib is imported lazily with the Agg
backend so the rest of the package never pays for it.
"""

from __future__ import annotations

import os

from .dynamics import CensusReport


def _bar(ax, hist: dict, title: str, xlabel: str, color: str):
    keys = sorted(hist)
    vals = [hist[k] for k in keys]
    ax.bar([str(k) for k in keys], vals, color=color)
    ax.set_title(title)
    ax.set_xlabel(xlabel)
    ax.set_ylabel("points")
    for i, v in enumerate(vals):
        ax.text(i, v, str(v), ha="center", va="bottom", fontsize=8)


def render_census_figures(report: CensusReport, out_base: str) -> list[str]:
    """Write <out_base>_cycles.png and <out_base>_destab.png; returns the paths."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    written = []
    field_label = f"GF(2^{report.field.degree})"

    fig, ax = plt.subplots(figsize=(5, 3.2))
    _bar(ax, report.cycle_length_histogram or {0: 0},
         f"Cycle lengths of periodic points over {field_label}",
         "cycle length", "#33689c")
    fig.tight_layout()
    path = f"{out_base}_cycles.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(5, 3.2))
    _bar(ax, report.destab_depth_histogram or {0: 0},
         f"Steps until the indeterminacy point over {field_label}",
         "steps to (1:1:1:1)", "#a84b38")
    fig.tight_layout()
    path = f"{out_base}_destab.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)
    return written


def figure_base(output_path: str) -> str:
    """Strip the extension of the delimited-output path for figure naming."""
    base, ext = os.path.splitext(output_path)
    return base if ext else output_path
