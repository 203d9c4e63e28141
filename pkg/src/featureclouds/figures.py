"""Chart output for evaluation reports.

Renders a grouped bar chart of per-block recall and precision to an image
file next to the delimited report. matplotlib is imported lazily with the
Agg backend so that plain CLI runs never touch a display.
"""
from __future__ import annotations

from pathlib import Path

from .errors import DataError
from .evaluation import EvaluationReport


def render_metrics_figure(report: EvaluationReport, path: str | Path) -> None:
    """Write a recall/precision bar chart for every scored block.

    The file format follows the extension (png, svg, pdf). Raises
    DataError when no block has ground truth, since there is nothing to
    plot.
    """
    scored = [block for block in report.blocks if block.result is not None]
    if not scored:
        raise DataError("no block has ground truth, nothing to plot")

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ids = [block.block_id for block in scored]
    recalls = [100.0 * float(block.result.recall) for block in scored]
    precisions = [100.0 * float(block.result.precision) for block in scored]

    positions = range(len(ids))
    width = 0.38
    fig, ax = plt.subplots(figsize=(max(6.0, 1.1 * len(ids)), 4.0))
    ax.bar([p - width / 2 for p in positions], recalls, width, label="recall")
    ax.bar([p + width / 2 for p in positions], precisions, width, label="precision")
    ax.set_xticks(list(positions))
    ax.set_xticklabels(ids, rotation=30, ha="right")
    ax.set_ylabel("percent")
    ax.set_ylim(0, 105)
    ax.set_title("name quality per block")
    ax.legend()
    fig.tight_layout()
    try:
        fig.savefig(path)
    finally:
        plt.close(fig)
