"""Figure rendering for benchmark reports.

Renders error-versus-time scatter plots (one marker per record, grouped by
method) to an image file next to the delimited output. Headless backend;
nothing is shown interactively.
"""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

_STYLE = {
    "Kalman": dict(color="tab:red", marker="*", s=140),
    "Ours": dict(color="tab:blue", marker="o", s=60),
    "RowSampling": dict(color="tab:green", marker="s", s=60),
    "Uniform": dict(color="tab:orange", marker="^", s=60),
}
_LIN_THRESH = 0.005


def render_records(records, path, *, title=None) -> None:
    """Scatter wall time (x) against error_ratio - 1 (y, symlog above the
    linear window) for each record; writes the figure to `path`."""
    records = list(records)
    fig, ax = plt.subplots(figsize=(7.0, 4.6))
    seen = set()
    for rec in records:
        style = _STYLE.get(rec.method, dict(color="gray", marker="x", s=50))
        label = rec.method if rec.method not in seen else None
        seen.add(rec.method)
        ax.scatter(rec.wall_time_s, max(rec.error_ratio - 1.0, 0.0),
                   label=label, alpha=0.85, **style)
    ax.set_xlabel("update time (s)")
    ax.set_ylabel("relative error (err/err_std - 1)")
    ax.set_yscale("symlog", linthresh=_LIN_THRESH)
    ax.grid(True, which="both", alpha=0.3)
    if title:
        ax.set_title(title)
    if seen:
        ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
