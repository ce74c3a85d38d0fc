"""Benchmark rows: CSV output and an optional log-log figure."""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, asdict, fields
from pathlib import Path
from typing import Iterable, Sequence

__all__ = ["BenchRow", "write_csv", "read_csv", "loglog_slope", "plot_bench"]


@dataclass(frozen=True)
class BenchRow:
    engine: str
    n: int
    k: int
    max_states: int
    elapsed_ms: int
    hamiltonian: bool


def write_csv(rows: Iterable[BenchRow], path: str | Path) -> None:
    names = [f.name for f in fields(BenchRow)]
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=names)
        w.writeheader()
        for row in rows:
            w.writerow(asdict(row))


def read_csv(path: str | Path) -> list[BenchRow]:
    with open(path, newline="") as fh:
        return [BenchRow(r["engine"], int(r["n"]), int(r["k"]), int(r["max_states"]),
                         int(r["elapsed_ms"]), r["hamiltonian"] == "True")
                for r in csv.DictReader(fh)]


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of log y against log x (zeros clamped to 1e-3)."""
    if len(xs) < 2:
        raise ValueError("need at least two points for a slope")
    lx = [math.log(x) for x in xs]
    ly = [math.log(max(y, 1e-3)) for y in ys]
    mx, my = sum(lx) / len(lx), sum(ly) / len(ly)
    den = sum((a - mx) ** 2 for a in lx)
    return sum((a - mx) * (b - my) for a, b in zip(lx, ly)) / den


def plot_bench(rows: Sequence[BenchRow], path: str | Path, title: str = "") -> None:
    """Time and state count against n on log-log axes, one line per engine."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, (ax_t, ax_s) = plt.subplots(1, 2, figsize=(9, 3.6), constrained_layout=True)
    for engine in sorted({r.engine for r in rows}):
        pts = sorted((r.n, r.elapsed_ms, r.max_states) for r in rows if r.engine == engine)
        ns = [p[0] for p in pts]
        ax_t.plot(ns, [max(p[1], 0.5) for p in pts], marker="o", label=engine)
        ax_s.plot(ns, [p[2] for p in pts], marker="o", label=engine)
    for ax, ylabel in ((ax_t, "elapsed (ms)"), (ax_s, "max states per node")):
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xlabel("n")
        ax.set_ylabel(ylabel)
        ax.grid(True, which="both", alpha=0.3)
        ax.legend()
    if title:
        fig.suptitle(title)
    fig.savefig(path, dpi=120)
    plt.close(fig)
