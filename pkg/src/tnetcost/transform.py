"""Temporal aggregation and interval construction."""
from __future__ import annotations

import numpy as np

from .core import IntervalGraph, LinkStream, Provenance, unique_rows


def infer_step(ls: LinkStream) -> int:
    """Smallest gap between consecutive occupied timestamps."""
    if ls.t < 2:
        raise ValueError("step undefined: fewer than two occupied times")
    return int(np.diff(ls.times).min())


def aggregate(ls: LinkStream, window: int) -> LinkStream:
    """Collapse events into non-overlapping windows anchored at the first time.

    Window ``k`` covers ``[t_min + k*window, t_min + (k+1)*window)``. An edge
    is present in a window iff it has at least one interaction there; the
    output times are the occupied window indices.
    """
    window = int(window)
    if window < 1:
        raise ValueError("window must be >= 1")
    prov = ls.provenance
    prov = Provenance(prov.source, window, prov.merged_duplicates, prov.generator, prov.seed)
    if not ls.e:
        return LinkStream(ls.nodes, [], np.empty((0, 3), dtype=np.int64), prov)
    ev = ls.events.copy()
    ev[:, 0] = (ev[:, 0] - ls.times[0]) // window
    ev = unique_rows(ev)
    return LinkStream(ls.nodes, np.unique(ev[:, 0]), ev, prov)


def build_intervals(ls: LinkStream, step: int) -> IntervalGraph:
    """Merge each edge's observations at consecutive grid points into intervals.

    Observations ``step`` apart join the same run; each run ``first..last``
    becomes ``[first, last + step)``. Gaps of any other size split runs.
    """
    step = int(step)
    if step <= 0:
        raise ValueError("step must be positive")
    ev = ls.events
    if not len(ev):
        empty = np.empty(0, dtype=np.int64)
        return IntervalGraph(ls.nodes, step, np.empty((0, 2), dtype=np.int64), empty, empty, empty)
    order = np.lexsort((ev[:, 0], ev[:, 2], ev[:, 1]))
    times, u, v = ev[order, 0], ev[order, 1], ev[order, 2]
    new_edge = np.ones(len(times), dtype=bool)
    new_edge[1:] = (u[1:] != u[:-1]) | (v[1:] != v[:-1])
    new_run = new_edge.copy()
    new_run[1:] |= np.diff(times) != step
    run_start = np.flatnonzero(new_run)
    run_last = np.append(run_start[1:] - 1, len(times) - 1)
    edge_id = np.cumsum(new_edge) - 1
    edges = np.column_stack([u[new_edge], v[new_edge]])
    return IntervalGraph(
        ls.nodes,
        step,
        edges,
        edge_id[run_start],
        times[run_start],
        times[run_last] + step,
    )


def intervals_to_stream(ig: IntervalGraph) -> LinkStream:
    """Expand every interval back to its grid observations."""
    if not ig.i:
        return LinkStream(ig.nodes, [], np.empty((0, 3), dtype=np.int64))
    counts = (ig.ends - ig.starts) // ig.step
    owner = np.repeat(np.arange(ig.i), counts)
    offset = np.arange(len(owner)) - np.repeat(np.cumsum(counts) - counts, counts)
    times = ig.starts[owner] + offset * ig.step
    pair = ig.edges[ig.interval_edge[owner]]
    ev = unique_rows(np.column_stack([times, pair]))
    return LinkStream(ig.nodes, np.unique(ev[:, 0]), ev)
