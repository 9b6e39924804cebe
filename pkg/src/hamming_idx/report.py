"""Predicted-vs-measured operation counts: table, CSV rows and a figure."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Iterable, TextIO

import numpy as np

from .core import CodeParams, Form
from .counts import OpCounts
from .matrix import Pass, build_g, build_h, measure, predicted_counts

# The dense oracle materialises G (m x n); past this it stops fitting in memory.
BENCH_MAX_K = 12


@dataclass(frozen=True)
class BenchRow:
    k: int
    pass_: Pass
    predicted: OpCounts
    measured: OpCounts
    trials: int

    @property
    def ok(self) -> bool:
        return self.predicted == self.measured


def bench(params: CodeParams, trials: int, form: Form = Form.T, seed: int = 0) -> list[BenchRow]:
    """Count every pass over ``trials`` random inputs.

    ``measured`` is the per-trial count if every trial agreed, otherwise the
    first trial that disagreed with the prediction.
    """
    rng = np.random.default_rng(seed)
    h, g = build_h(params), build_g(params)
    rows = []
    for pass_ in Pass:
        predicted = predicted_counts(params, pass_, form)
        measured = OpCounts()
        for _ in range(trials):
            measured = measure(params, pass_, rng, form, h=h, g=g)
            if measured != predicted:
                break
        rows.append(BenchRow(params.k, pass_, predicted, measured, trials))
    return rows


def sweep(k_max: int, trials: int, form: Form = Form.T, seed: int = 0) -> list[BenchRow]:
    rows = []
    for k in range(2, k_max + 1):
        rows.extend(bench(CodeParams(k), trials, form, seed))
    return rows


def format_table(rows: Iterable[BenchRow]) -> str:
    header = ("k", "pass", "pred_add", "meas_add", "pred_mul", "meas_mul", "status")
    body = [
        (str(r.k), r.pass_.value,
         str(r.predicted.additions), str(r.measured.additions),
         str(r.predicted.multiplications), str(r.measured.multiplications),
         "ok" if r.ok else "MISMATCH")
        for r in rows
    ]
    widths = [max(len(line[i]) for line in [header, *body]) for i in range(len(header))]
    lines = []
    for line in [header, *body]:
        cells = [c.ljust(w) if i in (1, 6) else c.rjust(w) for i, (c, w) in enumerate(zip(line, widths))]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def write_csv(rows: Iterable[BenchRow], fh: TextIO) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["k", "pass", "trials", "pred_add", "meas_add", "pred_mul", "meas_mul", "ok"])
    for r in rows:
        writer.writerow([r.k, r.pass_.value, r.trials,
                         r.predicted.additions, r.measured.additions,
                         r.predicted.multiplications, r.measured.multiplications,
                         int(r.ok)])


def plot_counts(rows: Iterable[BenchRow], path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rows = list(rows)
    fig, (ax_add, ax_mul) = plt.subplots(1, 2, figsize=(10, 4), sharex=True)
    for pass_ in Pass:
        sel = [r for r in rows if r.pass_ is pass_]
        ks = [r.k for r in sel]
        for ax, field in ((ax_add, "additions"), (ax_mul, "multiplications")):
            # zero counts have no place on a log axis
            pred = [getattr(r.predicted, field) or np.nan for r in sel]
            meas = [getattr(r.measured, field) or np.nan for r in sel]
            if np.isnan(pred).all() and np.isnan(meas).all():
                continue
            (line,) = ax.plot(ks, pred, label=pass_.value)
            ax.plot(ks, meas, "o", color=line.get_color(), markerfacecolor="none")
    for ax, title in ((ax_add, "additions per block"), (ax_mul, "multiplications per block")):
        ax.set_yscale("log")
        ax.set_xlabel("k (check bits)")
        ax.set_title(title)
        ax.grid(True, which="both", alpha=0.3)
    ax_add.legend(frameon=False, fontsize=8)
    fig.text(0.5, 0.01, "lines: predicted; circles: measured", ha="center", fontsize=8)
    fig.tight_layout(rect=(0, 0.04, 1, 1))
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
