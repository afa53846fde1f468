"""CSV and figure rendering for the CLI report paths.

Figures go next to the delimited output so a report directory is
self-contained: the CSV carries the data, the PNG the overview.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .verify import CheckRow

__all__ = [
    "write_csv",
    "verification_csv",
    "verification_figure",
    "ideal_lattice_figure",
    "census_figure",
]

_STATUS_COLORS = {"pass": "#2e7d32", "fail": "#c62828", "skip": "#9e9e9e"}


def write_csv(path: str | Path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def verification_csv(path: str | Path, rows: Sequence[CheckRow]) -> None:
    write_csv(path, ["group", "check", "status", "detail"],
              [(r.group, r.check, r.status, r.detail) for r in rows])


def verification_figure(path: str | Path, rows: Sequence[CheckRow]) -> None:
    """Status grid: one column per group, one line per check."""
    groups = sorted({r.group for r in rows})
    checks = []
    for r in rows:
        if r.check not in checks:
            checks.append(r.check)
    status = {(r.group, r.check): r.status for r in rows}

    fig, ax = plt.subplots(
        figsize=(1.6 + 1.1 * len(groups), 1.2 + 0.32 * len(checks))
    )
    for gi, g in enumerate(groups):
        for ci, c in enumerate(checks):
            s = status.get((g, c), "skip")
            ax.add_patch(plt.Rectangle((gi, ci), 0.92, 0.92,
                                       color=_STATUS_COLORS[s], alpha=0.85))
    ax.set_xlim(0, len(groups))
    ax.set_ylim(0, len(checks))
    ax.set_xticks([i + 0.46 for i in range(len(groups))], groups)
    ax.set_yticks([i + 0.46 for i in range(len(checks))], checks, fontsize=7)
    ax.invert_yaxis()
    ax.set_title("verification status")
    handles = [plt.Rectangle((0, 0), 1, 1, color=c) for c in _STATUS_COLORS.values()]
    ax.legend(handles, _STATUS_COLORS.keys(), loc="upper left",
              bbox_to_anchor=(1.01, 1.0), fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def ideal_lattice_figure(path: str | Path, ideals: Sequence[frozenset[int]],
                         title: str = "ideal lattice") -> None:
    """Hasse diagram with layers by ideal size and covering-relation edges."""
    nodes = sorted(ideals, key=lambda s: (len(s), sorted(s)))
    sizes = sorted({len(s) for s in nodes})
    level_of = {sz: i for i, sz in enumerate(sizes)}
    per_level: dict[int, list[frozenset[int]]] = {}
    for s in nodes:
        per_level.setdefault(level_of[len(s)], []).append(s)
    pos = {}
    for lvl, members in per_level.items():
        for i, s in enumerate(members):
            pos[s] = (i - (len(members) - 1) / 2.0, lvl)

    def covers(lo: frozenset[int], hi: frozenset[int]) -> bool:
        if not (lo < hi):
            return False
        return not any(lo < mid < hi for mid in nodes)

    fig, ax = plt.subplots(figsize=(6, 1.2 + 1.1 * len(sizes)))
    for lo in nodes:
        for hi in nodes:
            if covers(lo, hi):
                ax.plot(*zip(pos[lo], pos[hi]), color="#607d8b", lw=1, zorder=1)
    for s, (x, y) in pos.items():
        label = "{" + ",".join(map(str, sorted(s))) + "}"
        ax.scatter([x], [y], s=240, color="#1565c0", zorder=2)
        ax.annotate(label, (x, y), textcoords="offset points", xytext=(0, 12),
                    ha="center", fontsize=8)
    ax.set_title(title)
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def census_figure(path: str | Path, counts: dict[str, int], title: str) -> None:
    """Horizontal bars of how many found tables satisfy each axiom."""
    names = list(counts)
    values = [counts[k] for k in names]
    fig, ax = plt.subplots(figsize=(6, 1.0 + 0.4 * max(1, len(names))))
    ax.barh(range(len(names)), values, color="#1565c0")
    ax.set_yticks(range(len(names)), names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("tables")
    ax.set_title(title)
    for i, v in enumerate(values):
        ax.annotate(str(v), (v, i), textcoords="offset points", xytext=(4, 0),
                    va="center", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
