"""Report figures: per-config confusion heatmaps and a metrics bar chart.

Renders through the Agg backend straight to files; output depends only on
the numbers passed in, which keeps report bundles byte-reproducible.
"""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .metrics import ConfusionMatrix, MetricsRow


def confusion_heatmap(cm: ConfusionMatrix, path, title: str = "") -> None:
    data = np.array([[cm.tp, cm.fn], [cm.fp, cm.tn]], dtype=float)
    fig, ax = plt.subplots(figsize=(4.2, 3.6), dpi=100)
    im = ax.imshow(data, cmap="Blues")
    ax.set_xticks([0, 1], labels=["pred female", "pred male"])
    ax.set_yticks([0, 1], labels=["female", "male"])
    ax.set_xlabel("predicted")
    ax.set_ylabel("actual")
    cutoff = data.max() / 2 if data.max() > 0 else 1
    for i in range(2):
        for j in range(2):
            color = "white" if data[i, j] > cutoff else "black"
            ax.text(j, i, str(int(data[i, j])), ha="center", va="center", color=color)
    if title:
        ax.set_title(title)
    fig.colorbar(im)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def metrics_bars(rows: Sequence[MetricsRow], path) -> None:
    x = np.arange(len(rows))
    width = 0.27
    fig, ax = plt.subplots(figsize=(max(6.0, 2.0 * len(rows)), 4.2), dpi=100)
    ax.bar(x - width, [r.accuracy for r in rows], width, label="accuracy")
    ax.bar(x, [r.precision for r in rows], width, label="precision")
    ax.bar(x + width, [r.recall for r in rows], width, label="recall")
    ax.set_xticks(x, labels=[r.config_name for r in rows], rotation=20, ha="right")
    ax.set_ylim(0, 1)
    ax.set_ylabel("score")
    ax.legend(loc="lower right")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
