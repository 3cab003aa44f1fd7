"""Figure rendering for the CLI report paths.

Renders the bound curves of the tau-rho plane and region-scan scatters to
image files next to the delimited output.  Import is deferred to first use
so that library consumers never pay for matplotlib.
"""

from __future__ import annotations

import numpy as np

from .measures import hl_lower, hl_upper, sharp_lower


def _axes():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    ax.set_xlabel(r"Kendall's $\tau$")
    ax.set_ylabel(r"Spearman's $\rho$")
    ax.set_xlim(0.0, 1.0)
    ax.set_ylim(0.0, 1.0)
    return fig, ax


def _draw_curves(ax, grid):
    lower = np.array([hl_lower(t) for t in grid])
    upper = np.array([hl_upper(t) for t in grid])
    sharp = np.array([sharp_lower(t) for t in grid])
    ax.fill_between(grid, lower, upper, color="0.85", label="Hutchinson-Lai band")
    ax.plot(grid, lower, color="0.4", lw=1.0)
    ax.plot(grid, upper, color="0.4", lw=1.0)
    ax.plot(grid, sharp, color="m", lw=1.5, label="sharp lower bound")


def plot_bound_curves(path: str, grid=None):
    """Render the two classical bounds and the sharp lower bound."""
    grid = np.linspace(0.0, 1.0, 1001) if grid is None else np.asarray(grid)
    fig, ax = _axes()
    _draw_curves(ax, grid)
    ax.legend(loc="upper left", frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    import matplotlib.pyplot as plt

    plt.close(fig)


def plot_region(samples, path: str):
    """Scatter a region scan over the bound curves."""
    grid = np.linspace(0.0, 1.0, 1001)
    fig, ax = _axes()
    _draw_curves(ax, grid)
    taus = [s.tau for s in samples]
    rhos = [s.rho for s in samples]
    ax.scatter(taus, rhos, s=4, alpha=0.4, color="C0", label="scan samples")
    ax.legend(loc="upper left", frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    import matplotlib.pyplot as plt

    plt.close(fig)
