"""Matplotlib figures written next to the CSV/JSON reports.

Optional: needs the ``plot`` extra. The SVG renderer in :mod:`seqconv.svgplot`
is the dependency-free path.
"""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path

from .analysis import SweepSeries
from .dist import pmf_from_seq


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plt.rcParams.update({"font.size": 10, "axes.grid": True, "grid.alpha": 0.3,
                         "svg.hashsalt": "seqconv", "figure.dpi": 100})
    return plt


def _save(fig, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, bbox_inches="tight", metadata={"Date": None} if path.suffix == ".svg" else None)
    return path


def variance_figure(series: Sequence[SweepSeries], path: str | Path) -> Path:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    for s in series:
        ax.plot(s.Ls, [float(v) for v in s.variances], marker=".", lw=1, label=s.family.value)
    ax.set_xlabel("L")
    ax.set_ylabel("variance")
    ax.set_title("Variance vs sequence length")
    ax.legend()
    out = _save(fig, path)
    plt.close(fig)
    return out


def argmax_figure(scan: Sequence[tuple[int, int]], path: str | Path) -> Path:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    Ls = [L for L, _ in scan]
    ax.plot(Ls, [i for _, i in scan], ".", ms=3, label="argmax")
    ax.plot(Ls, [2 * L - 2 for L in Ls], "-", lw=0.8, label="2L-2")
    ax.set_xlabel("L")
    ax.set_ylabel("index of maximum")
    ax.legend()
    out = _save(fig, path)
    plt.close(fig)
    return out


def pmf_figure(weights, path: str | Path, gaussian: bool = True) -> Path:
    """Bar plot of an induced pmf, optionally with its moment-matched normal curve."""
    import math

    plt = _pyplot()
    p = pmf_from_seq(weights)
    ns = list(p.support)
    probs = [float(q) for q in p.probs]
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.bar(ns, probs, width=0.8, alpha=0.6, label="pmf")
    if gaussian:
        mu = sum(n * q for n, q in zip(ns, probs))
        var = sum((n - mu) ** 2 * q for n, q in zip(ns, probs))
        if var > 0:
            g = [math.exp(-((n - mu) ** 2) / (2 * var)) for n in ns]
            tot = sum(g)
            ax.plot(ns, [x / tot for x in g], "r-", lw=1, label="normal (renormalized)")
    ax.set_xlabel("n")
    ax.set_ylabel("P(X = n)")
    ax.legend()
    out = _save(fig, path)
    plt.close(fig)
    return out
