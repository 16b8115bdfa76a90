"""Matplotlib figures written next to the CLI's text and JSON output."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .cohomology import ExtensionGroup, preimage_order_profile  # noqa: E402
from .groups import FiniteGroup  # noqa: E402


def _save(fig, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_cayley_table(G: FiniteGroup, path: str | Path, title: str | None = None) -> Path:
    n = G.order
    fig, ax = plt.subplots(figsize=(min(3 + 0.12 * n, 10), min(3 + 0.12 * n, 10)))
    im = ax.imshow(G.table, cmap="viridis", interpolation="nearest")
    ax.set_title(title or f"Cayley table of {G.name}")
    ax.set_xlabel("h")
    ax.set_ylabel("g")
    if n <= 16:
        ax.set_xticks(range(n), G.labels, rotation=90, fontsize=7)
        ax.set_yticks(range(n), G.labels, fontsize=7)
    fig.colorbar(im, ax=ax, shrink=0.8, label="index of g*h")
    return _save(fig, Path(path))


def plot_fiber_orders(E: ExtensionGroup, path: str | Path) -> Path:
    """Base element order against the orders of its two lifts."""
    G = E.base
    profile = preimage_order_profile(E)
    xs = np.arange(G.order)
    lo = [profile[g][0] for g in xs]
    hi = [profile[g][1] for g in xs]
    fig, ax = plt.subplots(figsize=(max(4, 0.3 * G.order + 2), 3.5))
    ax.bar(xs - 0.2, G.element_orders, width=0.4, label="ord(g)", color="0.6")
    ax.scatter(xs + 0.2, lo, marker="v", label="lift orders", color="C0")
    ax.scatter(xs + 0.2, hi, marker="^", color="C0")
    ax.set_xlabel("base element")
    ax.set_ylabel("order")
    if G.order <= 32:
        ax.set_xticks(xs, G.labels, rotation=90, fontsize=7)
    ax.legend(frameon=False, fontsize=8)
    ax.set_title(f"Fiber orders over {G.name}")
    return _save(fig, Path(path))


def plot_suite_summary(names: Sequence[str], elapsed: Sequence[float], passed: Sequence[bool], path: str | Path) -> Path:
    fig, ax = plt.subplots(figsize=(6, 0.4 * len(names) + 1.5))
    colors = ["C2" if ok else "C3" for ok in passed]
    ax.barh(range(len(names)), elapsed, color=colors)
    ax.set_yticks(range(len(names)), names)
    ax.invert_yaxis()
    ax.set_xlabel("elapsed [s]")
    ax.set_title("verification suites (green = pass)")
    return _save(fig, Path(path))
