"""Lossless fixed-width serialization in each of the four representations.

Blob layout (all integers little-endian)::

    b"TNC1"                          magic
    u8                               representation tag (0=LS, 1=SN_M, 2=SN_E, 3=IG)
    u64 x 8                          n, t, m, e, i, step, t_prime, payload_bit_length
    n x (u64 length, UTF-8 bytes)    node dictionary
    t x i64                          time dictionary (raw timestamps)
    t_prime x i64                    interval endpoint dictionary (IG only)
    ceil(bits / 8) bytes             payload, MSB-first, zero-padded

Field widths inside the payload:

* node id: ``W_n = ceil(log2(n + 1))``, the code ``n`` being the node STOP;
* time index: ``W_t = ceil(log2(t + 1))``, the code ``t`` being the time STOP;
* endpoint index (IG): ``W_tp = ceil(log2(t_prime + 1))``, code ``t_prime`` is STOP.

Payload per representation:

* LS: per edge, ``u v`` then its time indices then a time STOP.
* SN_M: ``m`` edge pairs, ``t`` time indices, then the ``m x t`` presence
  matrix row-major (one row per edge).
* SN_E: per snapshot, its time index, its ``u v`` pairs, then a node STOP.
* IG: per edge, ``u v`` then ``start end`` endpoint indices per interval, then
  an endpoint STOP.
"""
from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from .bitstream import BitReader, BitWriter
from .core import IntervalGraph, LinkStream, NodeDictionary
from .costmodel import CostParams, Repr
from .transform import build_intervals, infer_step, intervals_to_stream

MAGIC = b"TNC1"
TAG_CODES = {Repr.LS: 0, Repr.SN_M: 1, Repr.SN_E: 2, Repr.IG: 3}
CODE_TAGS = {v: k for k, v in TAG_CODES.items()}
_COUNTS = struct.Struct("<8Q")


class BlobDecodeError(ValueError):
    """Malformed blob. ``section`` names the part that failed to decode."""

    def __init__(self, section: str, message: str):
        self.section = section
        super().__init__(message)


def width(alphabet: int) -> int:
    """Bits of a fixed-width code for ``alphabet`` symbols: ``ceil(log2(alphabet))``."""
    return max(alphabet - 1, 0).bit_length()


@dataclass(frozen=True)
class EncodedBlob:
    repr_tag: Repr
    nodes: tuple[str, ...]
    times: tuple[int, ...]
    m: int
    e: int
    i: int
    step: int
    endpoints: tuple[int, ...]
    payload: bytes
    payload_bit_length: int

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def t(self) -> int:
        return len(self.times)

    @property
    def t_prime(self) -> int:
        return len(self.endpoints)

    def header_size(self) -> int:
        return len(self.to_bytes()) - len(self.payload)

    def to_bytes(self) -> bytes:
        parts = [
            MAGIC,
            bytes([TAG_CODES[self.repr_tag]]),
            _COUNTS.pack(
                self.n, self.t, self.m, self.e, self.i, self.step,
                self.t_prime, self.payload_bit_length,
            ),
        ]
        for label in self.nodes:
            raw = label.encode("utf-8")
            parts.append(struct.pack("<Q", len(raw)))
            parts.append(raw)
        parts.append(np.asarray(self.times, dtype="<i8").tobytes())
        parts.append(np.asarray(self.endpoints, dtype="<i8").tobytes())
        parts.append(self.payload)
        return b"".join(parts)

    @classmethod
    def from_bytes(cls, data: bytes) -> "EncodedBlob":
        if data[:4] != MAGIC:
            raise BlobDecodeError("magic", "bad magic")
        if len(data) < 5 or data[4] not in CODE_TAGS:
            raise BlobDecodeError("tag", "bad representation tag")
        rep = CODE_TAGS[data[4]]
        pos = 5
        if len(data) < pos + _COUNTS.size:
            raise BlobDecodeError("header", "truncated header")
        n, t, m, e, i, step, tp, nbits = _COUNTS.unpack_from(data, pos)
        pos += _COUNTS.size
        labels = []
        try:
            for _ in range(n):
                (size,) = struct.unpack_from("<Q", data, pos)
                pos += 8
                if pos + size > len(data):
                    raise struct.error("label past end")
                labels.append(data[pos:pos + size].decode("utf-8"))
                pos += size
        except (struct.error, UnicodeDecodeError) as exc:
            raise BlobDecodeError("nodes", f"bad node dictionary: {exc}") from None
        if pos + 8 * t > len(data):
            raise BlobDecodeError("times", "truncated time dictionary")
        times = np.frombuffer(data, dtype="<i8", count=t, offset=pos)
        pos += 8 * t
        if pos + 8 * tp > len(data):
            raise BlobDecodeError("endpoints", "truncated endpoint dictionary")
        endpoints = np.frombuffer(data, dtype="<i8", count=tp, offset=pos)
        pos += 8 * tp
        payload = data[pos:]
        if len(payload) != (nbits + 7) // 8:
            raise BlobDecodeError("payload", "payload size does not match its bit length")
        return cls(
            rep, tuple(labels), tuple(int(x) for x in times), m, e, i, step,
            tuple(int(x) for x in endpoints), payload, nbits,
        )


def realized_length(p: CostParams, rep: Repr | str) -> int:
    """Exact payload length in bits of :func:`encode` for these counts."""
    rep = Repr(rep)
    if p.e == 0:
        return 0
    wn, wt, wtp = width(p.n + 1), width(p.t + 1), width(p.t_prime + 1)
    if rep is Repr.LS:
        return p.m * 2 * wn + p.e * wt + p.m * wt
    if rep is Repr.SN_M:
        return p.m * 2 * wn + p.t * wt + p.t * p.m
    if rep is Repr.SN_E:
        return p.e * 2 * wn + p.t * wt + p.t * wn
    return p.m * 2 * wn + 2 * p.i * wtp + p.m * wtp


def _lists_with_headers(group_start, heads, items, stop, head_width, item_width, stop_width, w):
    """Write ``heads[k]..., items of group k..., stop`` for every group k.

    ``heads`` is ``(g, h)``; ``group_start`` gives the offset of each group's
    first item in ``items`` (length ``g + 1``).
    """
    g, h = heads.shape
    sizes = np.diff(group_start)
    block = h + sizes + 1
    base = np.cumsum(block) - block
    total = int(block.sum())
    values = np.empty(total, dtype=np.int64)
    widths = np.full(total, item_width, dtype=np.int64)
    for j in range(h):
        values[base + j] = heads[:, j]
        widths[base + j] = head_width
    owner = np.repeat(np.arange(g), sizes)
    pos = base[owner] + h + (np.arange(len(items)) - group_start[:-1][owner])
    values[pos] = items
    values[base + h + sizes] = stop
    widths[base + h + sizes] = stop_width
    w.write_fields(values, widths)


def _encode_ls(ls: LinkStream, w: BitWriter):
    wn, wt = width(ls.n + 1), width(ls.t + 1)
    ev = ls.events
    order = np.lexsort((ev[:, 0], ev[:, 2], ev[:, 1]))
    tidx = np.searchsorted(ls.times, ev[order, 0])
    u, v = ev[order, 1], ev[order, 2]
    first = np.flatnonzero(np.r_[True, (u[1:] != u[:-1]) | (v[1:] != v[:-1])])
    heads = np.column_stack([u[first], v[first]])
    _lists_with_headers(np.append(first, len(ev)), heads, tidx, ls.t, wn, wt, wt, w)


def _encode_snm(ls: LinkStream, w: BitWriter):
    wn, wt = width(ls.n + 1), width(ls.t + 1)
    edges = ls.edges()
    w.write_many(edges.reshape(-1), wn)
    w.write_many(np.arange(ls.t), wt)
    row = np.searchsorted(edges[:, 0] * ls.n + edges[:, 1], ls.events[:, 1] * ls.n + ls.events[:, 2])
    col = np.searchsorted(ls.times, ls.events[:, 0])
    matrix = np.zeros((len(edges), ls.t), dtype=np.uint64)
    matrix[row, col] = 1
    w.write_many(matrix.reshape(-1), 1)


def _encode_sne(ls: LinkStream, w: BitWriter):
    wn, wt = width(ls.n + 1), width(ls.t + 1)
    ev = ls.events
    # node ids are the list items; each snapshot holds twice its event count
    group_start = 2 * np.append(np.searchsorted(ev[:, 0], ls.times), len(ev))
    heads = np.arange(ls.t).reshape(-1, 1)
    _lists_with_headers(group_start, heads, ev[:, 1:].reshape(-1), ls.n, wt, wn, wn, w)


def _encode_ig(ig: IntervalGraph, w: BitWriter):
    wn, wtp = width(ig.nodes.n + 1), width(ig.t_prime + 1)
    s_idx = np.searchsorted(ig.endpoints, ig.starts)
    e_idx = np.searchsorted(ig.endpoints, ig.ends)
    items = np.column_stack([s_idx, e_idx]).reshape(-1)
    group_start = 2 * np.searchsorted(ig.interval_edge, np.arange(ig.m + 1))
    _lists_with_headers(group_start, ig.edges, items, ig.t_prime, wn, wtp, wtp, w)


def encode(
    ls: LinkStream,
    repr_tag: Repr | str,
    step: int | None = None,
    writer: BitWriter | None = None,
) -> EncodedBlob:
    """Serialize ``ls`` in representation ``repr_tag``.

    ``step`` is the interval grid step for IG (inferred when omitted). A
    caller-supplied ``writer`` receives every payload field, which lets tests
    tally widths independently of :func:`realized_length`.
    """
    try:
        rep = Repr(repr_tag)
    except ValueError:
        raise ValueError(f"unsupported representation {repr_tag!r}") from None
    w = writer if writer is not None else BitWriter()
    if step is None:
        step = infer_step(ls) if ls.t >= 2 else 1
    i, endpoints = 0, ()
    if rep is Repr.IG:
        ig = build_intervals(ls, step)
        i, endpoints = ig.i, tuple(int(x) for x in ig.endpoints)
    if ls.e:
        if rep is Repr.LS:
            _encode_ls(ls, w)
        elif rep is Repr.SN_M:
            _encode_snm(ls, w)
        elif rep is Repr.SN_E:
            _encode_sne(ls, w)
        else:
            _encode_ig(ig, w)
    payload, nbits = w.getvalue()
    return EncodedBlob(
        rep, ls.nodes.labels, tuple(int(x) for x in ls.times), ls.m, ls.e, i,
        int(step), endpoints, payload, nbits,
    )


def _read_pair(r: BitReader, n: int, wn: int) -> tuple[int, int]:
    u, v = r.read(wn), r.read(wn)
    if not u < v < n:
        raise BlobDecodeError("payload", f"invalid node pair ({u}, {v})")
    return u, v


def _decode_ls(b: EncodedBlob, r: BitReader) -> list:
    wn, wt = width(b.n + 1), width(b.t + 1)
    out = []
    for _ in range(b.m):
        u, v = _read_pair(r, b.n, wn)
        while (k := r.read(wt)) != b.t:
            if k > b.t:
                raise BlobDecodeError("payload", f"time index {k} out of range")
            out.append((b.times[k], u, v))
    return out


def _decode_snm(b: EncodedBlob, r: BitReader) -> list:
    wn, wt = width(b.n + 1), width(b.t + 1)
    pairs = r.read_many(2 * b.m, wn).reshape(-1, 2)
    if len(pairs) and (np.any(pairs[:, 0] >= pairs[:, 1]) or pairs.max() >= b.n):
        raise BlobDecodeError("payload", "invalid edge directory")
    if not np.array_equal(r.read_many(b.t, wt), np.arange(b.t)):
        raise BlobDecodeError("payload", "bad time directory")
    matrix = r.read_many(b.m * b.t, 1).reshape(b.m, b.t)
    row, col = np.nonzero(matrix)
    times = np.asarray(b.times, dtype=np.int64)
    return np.column_stack([times[col], pairs[row]]).tolist()


def _decode_sne(b: EncodedBlob, r: BitReader) -> list:
    wn, wt = width(b.n + 1), width(b.t + 1)
    out = []
    for _ in range(b.t):
        k = r.read(wt)
        if k >= b.t:
            raise BlobDecodeError("payload", f"time index {k} out of range")
        while (u := r.read(wn)) != b.n:
            v = r.read(wn)
            if not u < v < b.n:
                raise BlobDecodeError("payload", f"invalid node pair ({u}, {v})")
            out.append((b.times[k], u, v))
    return out


def _decode_ig(b: EncodedBlob, r: BitReader, nodes: NodeDictionary) -> list:
    wn, wtp = width(b.n + 1), width(b.t_prime + 1)
    edges, owner, starts, ends = [], [], [], []
    for k in range(b.m):
        edges.append(_read_pair(r, b.n, wn))
        while (s := r.read(wtp)) != b.t_prime:
            f = r.read(wtp)
            if s > b.t_prime or f >= b.t_prime:
                raise BlobDecodeError("payload", "endpoint index out of range")
            start, end = b.endpoints[s], b.endpoints[f]
            if end <= start or (end - start) % b.step:
                raise BlobDecodeError("payload", f"invalid interval [{start}, {end})")
            owner.append(k)
            starts.append(start)
            ends.append(end)
    ig = IntervalGraph(nodes, b.step, np.array(edges, dtype=np.int64).reshape(-1, 2), owner, starts, ends)
    return intervals_to_stream(ig).events.tolist()


def decode(blob: EncodedBlob | bytes) -> LinkStream:
    """Rebuild the :class:`LinkStream` serialized in ``blob``."""
    if isinstance(blob, (bytes, bytearray)):
        blob = EncodedBlob.from_bytes(bytes(blob))
    try:
        nodes = NodeDictionary(blob.nodes)
    except ValueError as exc:
        raise BlobDecodeError("nodes", str(exc)) from None
    if not blob.e:
        if blob.payload_bit_length:
            raise BlobDecodeError("payload", "non-empty payload for an empty stream")
        return LinkStream(nodes, [], np.empty((0, 3), dtype=np.int64))
    try:
        r = BitReader(blob.payload, blob.payload_bit_length)
        if blob.repr_tag is Repr.LS:
            rows = _decode_ls(blob, r)
        elif blob.repr_tag is Repr.SN_M:
            rows = _decode_snm(blob, r)
        elif blob.repr_tag is Repr.SN_E:
            rows = _decode_sne(blob, r)
        else:
            rows = _decode_ig(blob, r, nodes)
    except EOFError:
        raise BlobDecodeError("payload", "truncated payload") from None
    if r.remaining:
        raise BlobDecodeError("payload", f"{r.remaining} trailing payload bits")
    events = np.array(rows, dtype=np.int64).reshape(-1, 3)
    events = events[np.lexsort((events[:, 2], events[:, 1], events[:, 0]))]
    try:
        ls = LinkStream(nodes, blob.times, events)
    except ValueError as exc:
        raise BlobDecodeError("payload", f"inconsistent payload: {exc}") from None
    if ls.e != blob.e or ls.m != blob.m:
        raise BlobDecodeError("payload", "decoded counts differ from the header")
    return ls
