"""Figure rendering for reports and ladders.

Everything draws through the Agg backend and writes straight to files, so the
command line front end can emit figures next to its delimited output without
a display.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_class_number_figure(reports, path):
    """Class number against conductor, eligible fields highlighted."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for eligible, color, label in ((True, "tab:green", "class number 2"),
                                   (False, "tab:gray", "other")):
        xs = [r.conductor for r in reports if r.eligible == eligible and r.h_K is not None]
        ys = [r.h_K for r in reports if r.eligible == eligible and r.h_K is not None]
        if xs:
            ax.scatter(xs, ys, s=22, color=color, label=label, alpha=0.8)
    ax.set_xscale("log")
    ax.set_xlabel("conductor")
    ax.set_ylabel("class number")
    ax.set_title("class numbers across the parameter grid")
    ax.legend(loc="upper left")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_witness_figure(reports, path):
    """Witness prime s and derived u against conductor, for eligible rows."""
    rows = [r for r in reports if r.eligible and r.s is not None]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    if rows:
        xs = [r.conductor for r in rows]
        ax.scatter(xs, [r.s for r in rows], s=24, color="tab:blue", label="s")
        ax.scatter(xs, [r.u for r in rows], s=24, color="tab:orange", marker="x", label="u")
        ax.set_yscale("log")
    ax.set_xscale("log")
    ax.set_xlabel("conductor")
    ax.set_ylabel("witness value")
    ax.set_title("witness pairs for eligible fields")
    ax.legend(loc="upper left")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_ladder_figure(ladder, path):
    """Step profile of the level function over 1..n_max."""
    ns = sorted(ladder.levels)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.step(ns, [ladder.levels[n] for n in ns], where="post", color="tab:purple")
    if ladder.above_cap:
        for n in sorted(ladder.above_cap):
            ax.axvline(n, color="tab:red", alpha=0.15)
    ax.set_xlabel("n   (the ideal (1/n)Z)")
    ax.set_ylabel("assigned level")
    ax.set_title("ladder levels, n_max=%d, cap=%d" % (ladder.n_max, ladder.level_cap))
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
