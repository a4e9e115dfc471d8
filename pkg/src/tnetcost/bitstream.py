"""Fixed-width, MSB-first bit packing."""
from __future__ import annotations

import numpy as np


class BitWriter:
    """Accumulate fixed-width unsigned fields and pack them in one pass.

    Every field's width is kept so the emitted length can be checked against
    an independent count (see :meth:`field_widths`).
    """

    def __init__(self):
        self._values: list[np.ndarray] = []
        self._widths: list[np.ndarray] = []
        self._scalars_v: list[int] = []
        self._scalars_w: list[int] = []

    def _flush_scalars(self):
        if self._scalars_v:
            self._values.append(np.array(self._scalars_v, dtype=np.uint64))
            self._widths.append(np.array(self._scalars_w, dtype=np.int64))
            self._scalars_v, self._scalars_w = [], []

    def write(self, value: int, width: int):
        if value < 0 or value >> width:
            raise ValueError(f"value {value} does not fit in {width} bits")
        self._scalars_v.append(int(value))
        self._scalars_w.append(int(width))

    def write_many(self, values, width: int):
        values = np.asarray(values, dtype=np.uint64).reshape(-1)
        if len(values) and int(values.max()) >> width:
            raise ValueError(f"values do not fit in {width} bits")
        self._flush_scalars()
        self._values.append(values)
        self._widths.append(np.full(len(values), width, dtype=np.int64))

    def write_fields(self, values, widths):
        """Append fields of varying widths in one call."""
        values = np.asarray(values, dtype=np.uint64).reshape(-1)
        widths = np.asarray(widths, dtype=np.int64).reshape(-1)
        if len(values) != len(widths):
            raise ValueError("values and widths differ in length")
        if len(values) and np.any(values >> widths.astype(np.uint64)):
            raise ValueError("a value does not fit in its width")
        self._flush_scalars()
        self._values.append(values)
        self._widths.append(widths)

    def field_widths(self) -> np.ndarray:
        self._flush_scalars()
        if not self._widths:
            return np.empty(0, dtype=np.int64)
        return np.concatenate(self._widths)

    def getvalue(self) -> tuple[bytes, int]:
        """Return ``(payload, bit_length)``; the last byte is zero-padded."""
        widths = self.field_widths()
        if not len(widths):
            return b"", 0
        values = np.concatenate(self._values)
        total = int(widths.sum())
        if total == 0:
            return b"", 0
        owner = np.repeat(np.arange(len(widths)), widths)
        starts = np.cumsum(widths) - widths
        pos = np.arange(total) - starts[owner]
        shift = (widths[owner] - 1 - pos).astype(np.uint64)
        bits = ((values[owner] >> shift) & np.uint64(1)).astype(np.uint8)
        return np.packbits(bits).tobytes(), total


class BitReader:
    def __init__(self, payload: bytes, bit_length: int):
        if bit_length > 8 * len(payload):
            raise EOFError("payload shorter than its declared bit length")
        bits = np.unpackbits(np.frombuffer(payload, dtype=np.uint8))[:bit_length]
        self._bits = bits
        self._text = (bits + ord("0")).tobytes().decode("ascii")
        self.pos = 0
        self.bit_length = bit_length

    @property
    def remaining(self) -> int:
        return self.bit_length - self.pos

    def read(self, width: int) -> int:
        if width == 0:
            return 0
        end = self.pos + width
        if end > self.bit_length:
            raise EOFError("read past end of payload")
        value = int(self._text[self.pos:end], 2)
        self.pos = end
        return value

    def read_many(self, count: int, width: int) -> np.ndarray:
        end = self.pos + count * width
        if end > self.bit_length:
            raise EOFError("read past end of payload")
        chunk = self._bits[self.pos:end].reshape(count, width).astype(np.uint64)
        self.pos = end
        if width == 0:
            return np.zeros(count, dtype=np.int64)
        weights = np.uint64(1) << np.arange(width - 1, -1, -1, dtype=np.uint64)
        return (chunk * weights).sum(axis=1).astype(np.int64)
