"""Figure rendering for the CLI report path.

Each renderer takes the already-computed report data and writes one PNG
next to the delimited output.  matplotlib is imported lazily with the Agg
backend so that library users who never plot pay nothing for it.
"""

from __future__ import annotations

import math

__all__ = [
    "render_classify_figure",
    "render_gamma_figure",
    "render_prop1_figure",
    "render_wolpert_figure",
]


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _save(fig, path: str) -> None:
    fig.savefig(path, dpi=150, metadata={"Software": None})


def render_prop1_figure(rows, path: str) -> None:
    """Crossing lengths against the c|log l| law plus the X/Y difference."""
    plt = _pyplot()
    ns = [r.n for r in rows]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4), constrained_layout=True)
    ax1.plot(ns, [r.l_gamma_X for r in rows], "o-", ms=3, label="l_gamma(X)")
    ax1.plot(ns, [r.l_gamma_Y for r in rows], "s--", ms=3, label="l_gamma(Y)")
    ax1.plot(
        ns,
        [r.l_gamma_X - r.deviation_X for r in rows],
        ":",
        color="gray",
        label="c |log l_alpha(X)|",
    )
    ax1.set_xlabel("curve index n")
    ax1.set_ylabel("length")
    ax1.legend(fontsize=8)
    ax1.set_title("crossing-curve lengths")
    ax2.plot(ns, [r.diff for r in rows], "o-", ms=3, color="tab:red")
    ax2.axhline(0.0, color="gray", lw=0.8)
    ax2.set_xlabel("curve index n")
    ax2.set_ylabel("l_gamma(Y) - l_gamma(X)")
    ax2.set_title("additive difference")
    _save(fig, path)
    plt.close(fig)


def render_wolpert_figure(report, path: str) -> None:
    """Length ratios of the family against the allowed [1/K, K] band."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(8, 4), constrained_layout=True)
    xs = range(len(report.rows))
    ratios = [r.ratio for r in report.rows]
    colors = ["tab:red" if r.violation else "tab:blue" for r in report.rows]
    ax.scatter(xs, ratios, c=colors, s=14)
    ax.axhline(report.K, color="gray", ls="--", lw=0.9, label=f"K = {report.K:g}")
    ax.axhline(1.0 / report.K, color="gray", ls="--", lw=0.9)
    ax.set_yscale("log")
    ax.set_xticks(list(xs))
    ax.set_xticklabels([r.label for r in report.rows], rotation=90, fontsize=6)
    ax.set_ylabel("l(Y) / l(X)")
    ax.set_title("length ratios vs the multiplicative band")
    ax.legend(fontsize=8)
    _save(fig, path)
    plt.close(fig)


def render_gamma_figure(rows, path: str) -> None:
    """Shortest crossing lengths vs |log l_alpha| for one surface."""
    plt = _pyplot()
    ns = [r["n"] for r in rows]
    fig, ax = plt.subplots(figsize=(7, 4), constrained_layout=True)
    ax.plot(ns, [r["l_gamma"] for r in rows], "o-", ms=3, label="l_gamma")
    ax.plot(
        ns,
        [abs(math.log(r["l_alpha"])) for r in rows],
        ":",
        color="gray",
        label="|log l_alpha|",
    )
    ax.set_xlabel("curve index n")
    ax.set_ylabel("length")
    ax.legend(fontsize=8)
    ax.set_title("shortest crossing curves")
    _save(fig, path)
    plt.close(fig)


def render_classify_figure(pair, verdicts, path: str) -> None:
    """Deviation sequences behind the five verdicts, log-scaled."""
    plt = _pyplot()
    dlog, dt, ndt = pair.deviations()
    xs = range(pair.window)
    fig, ax = plt.subplots(figsize=(8, 4), constrained_layout=True)
    ax.plot(xs, dlog, lw=0.8, label="|log(l_n/l_n(X))|")
    ax.plot(xs, dt, lw=0.8, label="|t_n - t_n(X)|")
    ax.plot(xs, ndt, lw=0.8, label="normalized twist deviation")
    ax.axvline(pair.tail_start, color="gray", ls="--", lw=0.9, label="tail start")
    ax.set_yscale("symlog", linthresh=1e-12)
    ax.set_xlabel("position")
    ax.set_ylabel("deviation")
    decisions = ", ".join(
        f"{space}: {verdicts[space].decision}" for space in sorted(verdicts)
    )
    ax.set_title(decisions, fontsize=8)
    ax.legend(fontsize=7)
    _save(fig, path)
    plt.close(fig)
