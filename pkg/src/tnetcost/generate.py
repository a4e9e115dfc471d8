"""Seeded synthetic temporal networks built from G(n, M) random graphs.

Randomness comes from numpy's PCG64 bit generator (``numpy.random.default_rng``)
seeded with the given integer. Edge sets are drawn by a partial Fisher-Yates
shuffle of the ``n(n-1)/2`` pair indices, pairs being ranked in row-major
upper-triangular order; node labels are the decimal strings ``"0" .. "n-1"``.
"""
from __future__ import annotations

import numpy as np

from .core import LinkStream, Provenance, canonicalize


class InfeasibleParameters(ValueError):
    pass


def _check(n: int, m: int, t: int):
    if n < 0 or m < 0 or t < 0:
        raise InfeasibleParameters("parameters must be non-negative")
    if m > n * (n - 1) // 2:
        raise InfeasibleParameters(f"{m} edges do not fit on {n} nodes")


def sample_gnm(n: int, m: int, rng: np.random.Generator) -> np.ndarray:
    """Draw ``m`` distinct pairs uniformly; returns an ``(m, 2)`` array with u < v."""
    _check(n, m, 1)
    total = n * (n - 1) // 2
    pool = np.arange(total)
    picks = rng.integers(np.arange(m), total)
    for j, k in enumerate(picks):
        pool[j], pool[k] = pool[k], pool[j]
    iu, iv = np.triu_indices(n, 1)
    chosen = pool[:m]
    return np.column_stack([iu[chosen], iv[chosen]])


def _stream(snapshots, seed, kind) -> LinkStream:
    raw = [(t, str(u), str(v)) for t, pairs in snapshots for u, v in pairs]
    return canonicalize(raw, Provenance(generator=kind, seed=seed))


def gen_stable(n: int, m_edges: int, t_snapshots: int, seed: int) -> LinkStream:
    """One G(n, M) graph repeated at times ``0 .. t_snapshots - 1``."""
    _check(n, m_edges, t_snapshots)
    rng = np.random.default_rng(seed)
    pairs = sample_gnm(n, m_edges, rng).tolist()
    return _stream(((t, pairs) for t in range(t_snapshots)), seed, "stable")


def gen_independent(n: int, m_per_snapshot: int, t_snapshots: int, seed: int) -> LinkStream:
    """A fresh, independent G(n, M) graph at each time ``0 .. t_snapshots - 1``."""
    _check(n, m_per_snapshot, t_snapshots)
    rng = np.random.default_rng(seed)
    snaps = [(t, sample_gnm(n, m_per_snapshot, rng).tolist()) for t in range(t_snapshots)]
    return _stream(snaps, seed, "independent")
