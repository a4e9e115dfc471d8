"""Encoding costs across temporal aggregation scales."""
from __future__ import annotations

import csv
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .core import LinkStream
from .costmodel import CostParams, Repr, report
from .transform import aggregate, infer_step

CSV_HEADER = (
    "window", "n", "m", "e", "t", "i", "t_prime",
    "cost_ls", "cost_sn_m", "cost_sn_e", "cost_ig", "best",
)


@dataclass(frozen=True)
class SweepRow:
    window: int
    params: CostParams
    cost_ls: float
    cost_sn_m: float
    cost_sn_e: float
    cost_ig: float
    best: Repr

    def as_csv_row(self) -> list[str]:
        p = self.params
        return [
            str(self.window), str(p.n), str(p.m), str(p.e), str(p.t), str(p.i), str(p.t_prime),
            f"{self.cost_ls:.6f}", f"{self.cost_sn_m:.6f}", f"{self.cost_sn_e:.6f}",
            f"{self.cost_ig:.6f}", self.best.value,
        ]


def default_scales(ls: LinkStream) -> list[int]:
    """Doubling windows ``step * 2**k`` up to the first one covering the whole span."""
    if not ls.t:
        return []
    step = infer_step(ls) if ls.t >= 2 else 1
    span = int(ls.times[-1] - ls.times[0]) + step
    scales = [step]
    while scales[-1] < span:
        scales.append(scales[-1] * 2)
    return scales


def sweep_row(ls: LinkStream, window: int, snm_variant: str = "prose", n: int | None = None) -> SweepRow:
    agg = aggregate(ls, window)
    rep = report(agg, step=1, snm_variant=snm_variant, n=n)
    return SweepRow(window, rep.params, rep.cost_ls, rep.cost_sn_m, rep.cost_sn_e, rep.cost_ig, rep.best)


def run_sweep(
    ls: LinkStream,
    scales: Sequence[int] | None = None,
    snm_variant: str = "prose",
    n: int | None = None,
    max_workers: int | None = None,
) -> list[SweepRow]:
    """Aggregate ``ls`` at every window in ``scales`` and cost each result.

    Intervals of aggregated streams are built at step 1 on window indices, so
    an empty window breaks an interval. With ``max_workers > 1`` scales are
    evaluated on a thread pool; output order is always by window.
    """
    if scales is None:
        scales = default_scales(ls)
    scales = sorted(int(w) for w in scales)
    if any(w < 1 for w in scales):
        raise ValueError("windows must be >= 1")
    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers) as pool:
            return list(pool.map(lambda w: sweep_row(ls, w, snm_variant, n), scales))
    return [sweep_row(ls, w, snm_variant, n) for w in scales]


def write_sweep_csv(rows: Iterable[SweepRow], fh: TextIO):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.as_csv_row())
