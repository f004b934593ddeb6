"""Figure rendering for scan reports.

Writes PNG files next to (never instead of) the delimited output: the B2
curve with its Boyle and self-similarity crossings marked, and the
self-similarity residual with its zero.  matplotlib is imported lazily with
the Agg backend so headless use never touches a display.
"""

from __future__ import annotations

import math
import os


def _crossing(ts, ys):
    """Linear-interpolated abscissa of the first sign change, or None."""
    prev_t = prev_y = None
    for t, y in zip(ts, ys):
        if not math.isfinite(y):
            continue
        if prev_y is not None and prev_y * y < 0:
            return prev_t + (t - prev_t) * prev_y / (prev_y - y)
        if y == 0:
            return t
        prev_t, prev_y = t, y
    return None


def render_scan_figures(rows, outdir):
    """Render the two scan figures into outdir; returns the file paths."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(outdir, exist_ok=True)
    ts = [r.t_star for r in rows]
    b2 = [r.b2_integral for r in rows]
    res = [r.residual for r in rows]
    boyle = _crossing(ts, b2)
    selfsim = _crossing(ts, res)
    paths = []

    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(ts, b2, lw=1.5, label="$B_2$ (quadrature)")
    ax.axhline(0.0, color="0.6", lw=0.8)
    if boyle is not None:
        ax.axvline(boyle, color="tab:red", lw=0.8, ls="--", label=f"Boyle root {boyle:.4g}")
    if selfsim is not None:
        ax.axvline(selfsim, color="tab:green", lw=0.8, ls="--",
                   label=f"self-similar point {selfsim:.4g}")
        # The self-similar point is where the ray from the origin is tangent
        # to the curve (max of B2/T); drawing it makes that visible.
        slope = None
        for r in rows:
            if abs(r.t_star - selfsim) < (ts[1] - ts[0] if len(ts) > 1 else 1.0):
                slope = r.b2_over_t
                break
        if slope is not None:
            ax.plot([0.0, ts[-1]], [0.0, slope * ts[-1]], color="tab:green",
                    lw=0.8, alpha=0.6)
    ax.set_xlabel(r"$T^{*} = kT/\varepsilon_0$")
    ax.set_ylabel(r"$B_2 / b_0$")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    path = os.path.join(outdir, "b2_curve.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)

    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(ts, res, lw=1.5, color="tab:purple",
            label=r"$\mathrm{d}B_2/\mathrm{d}T - B_2/T$")
    ax.axhline(0.0, color="0.6", lw=0.8)
    if selfsim is not None:
        ax.axvline(selfsim, color="tab:green", lw=0.8, ls="--",
                   label=f"zero at {selfsim:.6g}")
    ax.set_xlabel(r"$T^{*} = kT/\varepsilon_0$")
    ax.set_ylabel("self-similarity residual")
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    path = os.path.join(outdir, "residual.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)

    return paths
