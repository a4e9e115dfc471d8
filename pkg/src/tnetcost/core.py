"""Canonical in-memory types for discrete-time dynamic networks.

A :class:`LinkStream` is the canonical form: a deduplicated, sorted set of
``(time, u, v)`` events over a node dictionary and a time dictionary. Node ids
are dense integers assigned in sorted label order and every pair is stored with
``u < v``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np


class SelfLoopError(ValueError):
    """Raised when an event connects a node to itself."""


def unique_rows(arr: np.ndarray) -> np.ndarray:
    """Lexicographically sorted distinct rows of a 2-D integer array."""
    if len(arr) < 2:
        return arr
    order = np.lexsort(arr.T[::-1])
    arr = arr[order]
    keep = np.ones(len(arr), dtype=bool)
    keep[1:] = np.any(arr[1:] != arr[:-1], axis=1)
    return arr[keep]


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class NodeDictionary:
    """Bijection between opaque string labels and ids ``0 .. n-1``."""

    labels: tuple[str, ...] = ()

    def __post_init__(self):
        labels = tuple(self.labels)
        if len(set(labels)) != len(labels):
            raise ValueError("node labels must be distinct")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", {lab: k for k, lab in enumerate(labels)})

    @property
    def index(self) -> Mapping[str, int]:
        return self._index

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def __getitem__(self, label: str) -> int:
        return self._index[label]


@dataclass(frozen=True)
class Event:
    time: int
    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise SelfLoopError(f"self-loop on node id {self.u}")
        if self.u > self.v:
            raise ValueError("events are stored with u < v")


@dataclass(frozen=True)
class Provenance:
    """Where a stream came from. Never part of stream equality."""

    source: str | None = None
    window: int | None = None
    merged_duplicates: int = 0
    generator: str | None = None
    seed: int | None = None


class LinkStream:
    """Deduplicated set of ``(time, u, v)`` events.

    Parameters
    ----------
    nodes : NodeDictionary
    times : array of int
        Sorted distinct occupied timestamps (raw values).
    events : (e, 3) int array
        Rows ``(time, u, v)`` sorted lexicographically, ``u < v``, no duplicates.
        ``time`` holds raw timestamp values, not indices into ``times``.
    provenance : Provenance, optional

    Use :func:`canonicalize` to build one from raw labelled triples; the
    constructor only validates.
    """

    __slots__ = ("nodes", "times", "events", "provenance", "_edges")

    def __init__(self, nodes: NodeDictionary, times, events, provenance: Provenance | None = None):
        times = np.asarray(times, dtype=np.int64).reshape(-1)
        events = np.asarray(events, dtype=np.int64).reshape(-1, 3)
        if len(events):
            if np.any(events[:, 1] >= events[:, 2]):
                raise ValueError("events must satisfy u < v")
            if events[:, 1].min() < 0 or events[:, 2].max() >= nodes.n:
                raise ValueError("event node id outside the node dictionary")
            d = np.diff(events, axis=0)
            # lexicographic strict increase of consecutive rows
            first = np.where(d != 0, np.arange(3), 3).min(axis=1)
            ok = first < 3
            ok[ok] = d[ok, first[ok]] > 0
            if not ok.all():
                raise ValueError("events must be sorted and free of duplicates")
        if len(times) > 1 and np.any(np.diff(times) <= 0):
            raise ValueError("time dictionary must be strictly increasing")
        occupied = events[:, 0]
        if len(occupied):
            occupied = occupied[np.r_[True, occupied[1:] != occupied[:-1]]]
        if not np.array_equal(occupied, times):
            raise ValueError("time dictionary must equal the set of occupied times")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "times", _frozen(times))
        object.__setattr__(self, "events", _frozen(events))
        object.__setattr__(self, "provenance", provenance or Provenance())
        object.__setattr__(self, "_edges", None)

    def __setattr__(self, name, value):
        raise AttributeError("LinkStream is immutable")

    @property
    def n(self) -> int:
        return self.nodes.n

    @property
    def e(self) -> int:
        return len(self.events)

    @property
    def t(self) -> int:
        return len(self.times)

    @property
    def m(self) -> int:
        return len(self.edges())

    def edges(self) -> np.ndarray:
        """Distinct node pairs, as a sorted ``(m, 2)`` array."""
        if self._edges is None:
            n = max(self.n, 1)
            keys = np.unique(self.events[:, 1] * n + self.events[:, 2])
            edges = np.column_stack([keys // n, keys % n]) if len(keys) else np.empty((0, 2), dtype=np.int64)
            object.__setattr__(self, "_edges", _frozen(edges))
        return self._edges

    def triples(self) -> list[tuple[int, str, str]]:
        labels = self.nodes.labels
        return [(int(t), labels[u], labels[v]) for t, u, v in self.events]

    def __len__(self):
        return self.e

    def __eq__(self, other):
        if not isinstance(other, LinkStream):
            return NotImplemented
        return (
            self.nodes.labels == other.nodes.labels
            and np.array_equal(self.times, other.times)
            and np.array_equal(self.events, other.events)
        )

    def __hash__(self):
        return hash((self.nodes.labels, self.events.tobytes()))

    def __repr__(self):
        return f"LinkStream(n={self.n}, m={self.m}, e={self.e}, t={self.t})"


@dataclass(frozen=True)
class StatsSummary:
    """Summary columns of a link stream. Ratio fields are None when undefined."""

    n: int
    m: int
    e: int
    t: int
    e_per_t: float | None
    e_per_m: float | None
    e_per_m_per_t_pct: float | None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "e": self.e,
            "t": self.t,
            "e_per_t": self.e_per_t,
            "e_per_m": self.e_per_m,
            "e_per_m_per_t_pct": self.e_per_m_per_t_pct,
        }


@dataclass(frozen=True)
class IntervalGraph:
    """Per-edge disjoint half-open intervals ``[start, end)`` on a time grid.

    ``edges`` has one row per distinct pair; ``interval_edge[k]`` indexes into
    ``edges`` and ``starts``/``ends`` hold raw time values. Intervals are sorted
    by edge, then start.
    """

    nodes: NodeDictionary
    step: int
    edges: np.ndarray
    interval_edge: np.ndarray
    starts: np.ndarray
    ends: np.ndarray
    endpoints: np.ndarray = field(init=False)

    def __post_init__(self):
        for name in ("edges", "interval_edge", "starts", "ends"):
            object.__setattr__(self, name, _frozen(np.asarray(getattr(self, name), dtype=np.int64)))
        ends = np.concatenate([self.starts, self.ends])
        object.__setattr__(self, "endpoints", _frozen(np.unique(ends)))

    @property
    def i(self) -> int:
        return len(self.starts)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def t_prime(self) -> int:
        return len(self.endpoints)

    @property
    def intervals(self) -> dict[tuple[int, int], list[tuple[int, int]]]:
        out: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for k, s, e in zip(self.interval_edge, self.starts, self.ends):
            u, v = self.edges[k]
            out.setdefault((int(u), int(v)), []).append((int(s), int(e)))
        return out


def canonicalize(
    raw_events: Iterable[Sequence],
    provenance: Provenance | None = None,
) -> LinkStream:
    """Build a :class:`LinkStream` from ``(time, labelA, labelB)`` triples.

    Pairs are put in canonical order, exact duplicates are merged (the merge
    count lands in ``provenance.merged_duplicates``) and events are sorted.

    Raises
    ------
    SelfLoopError
        If a triple has ``labelA == labelB``; the message names its position.
    """
    raw = []
    for k, (time, a, b) in enumerate(raw_events):
        a, b = str(a), str(b)
        if a == b:
            raise SelfLoopError(f"self-loop in triple {k} ({time!r}, {a!r}, {b!r})")
        raw.append((int(time), a, b))

    labels = sorted({lab for _, a, b in raw for lab in (a, b)})
    nodes = NodeDictionary(tuple(labels))
    index = nodes.index
    if raw:
        arr = np.array([(t, index[a], index[b]) for t, a, b in raw], dtype=np.int64)
        lo = np.minimum(arr[:, 1], arr[:, 2])
        hi = np.maximum(arr[:, 1], arr[:, 2])
        arr = unique_rows(np.column_stack([arr[:, 0], lo, hi]))
    else:
        arr = np.empty((0, 3), dtype=np.int64)
    merged = len(raw) - len(arr)

    prov = provenance or Provenance()
    prov = Provenance(
        source=prov.source,
        window=prov.window,
        merged_duplicates=prov.merged_duplicates + merged,
        generator=prov.generator,
        seed=prov.seed,
    )
    return LinkStream(nodes, np.unique(arr[:, 0]), arr, prov)


def stats(ls: LinkStream) -> StatsSummary:
    n, m, e, t = ls.n, ls.m, ls.e, ls.t
    return StatsSummary(
        n=n,
        m=m,
        e=e,
        t=t,
        e_per_t=e / t if t else None,
        e_per_m=e / m if m else None,
        e_per_m_per_t_pct=100.0 * e / (m * t) if m and t else None,
    )
