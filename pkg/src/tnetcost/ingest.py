"""Read and write ``<time, u, v>`` triplet files."""
from __future__ import annotations

import io
import os
from dataclasses import dataclass
from typing import BinaryIO, Union

from .core import LinkStream, Provenance, canonicalize

ROLES = ("time", "u", "v")
_SPLIT = {"whitespace": None, "tab": "\t", "comma": ","}
_JOIN = {"whitespace": " ", "tab": "\t", "comma": ","}


class TripletParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"{message} at line {line}"
        super().__init__(message)


@dataclass(frozen=True)
class TripletFormat:
    delimiter: str = "whitespace"
    column_order: tuple[str, str, str] = ROLES
    header_rows: int = 0
    extra_columns: str = "ignore"

    def __post_init__(self):
        if self.delimiter not in _SPLIT:
            raise ValueError(f"unknown delimiter {self.delimiter!r}")
        if sorted(self.column_order) != sorted(ROLES):
            raise ValueError(f"column_order must be a permutation of {ROLES}")
        if self.header_rows < 0:
            raise ValueError("header_rows must be >= 0")
        if self.extra_columns not in ("ignore", "error"):
            raise ValueError("extra_columns must be 'ignore' or 'error'")
        object.__setattr__(self, "column_order", tuple(self.column_order))


Source = Union[bytes, str, os.PathLike, BinaryIO]


def _open(source: Source):
    if isinstance(source, (bytes, bytearray)):
        return io.BytesIO(source), None
    if isinstance(source, (str, os.PathLike)):
        return open(source, "rb"), str(source)
    return source, getattr(source, "name", None)


def parse_triplets(source: Source, fmt: TripletFormat = TripletFormat()) -> LinkStream:
    """Parse a triplet file into a :class:`LinkStream`.

    ``source`` may be raw bytes, a path, or a binary file object. Lines are
    read in a single pass; blank lines are skipped.
    """
    fh, name = _open(source)
    sep = _SPLIT[fmt.delimiter]
    col = {role: fmt.column_order.index(role) for role in ROLES}
    raw = []
    try:
        for lineno, line in enumerate(fh, start=1):
            if lineno <= fmt.header_rows:
                continue
            try:
                text = line.decode("utf-8")
            except UnicodeDecodeError:
                raise TripletParseError("invalid UTF-8", lineno) from None
            text = text.rstrip("\r\n")
            if not text.strip():
                continue
            fields = text.split(sep) if sep else text.split()
            if sep:
                fields = [f.strip() for f in fields]
            if len(fields) < 3 or (len(fields) > 3 and fmt.extra_columns == "error"):
                raise TripletParseError(f"expected 3 columns, got {len(fields)}", lineno)
            try:
                time = int(fields[col["time"]])
            except ValueError:
                raise TripletParseError("non-integer time", lineno) from None
            a, b = fields[col["u"]], fields[col["v"]]
            if not a or not b:
                raise TripletParseError("empty node label", lineno)
            if a == b:
                raise TripletParseError(f"self-loop on node {a!r}", lineno)
            raw.append((time, a, b))
    finally:
        if name is not None and not hasattr(source, "read"):
            fh.close()
    return canonicalize(raw, Provenance(source=name))


def write_triplets(ls: LinkStream, fmt: TripletFormat = TripletFormat()) -> bytes:
    """Serialize one line per event, in sorted event order."""
    sep = _JOIN[fmt.delimiter]
    out = io.StringIO()
    for _ in range(fmt.header_rows):
        out.write(sep.join(fmt.column_order) + "\n")
    for time, a, b in ls.triples():
        row = {"time": str(time), "u": a, "v": b}
        out.write(sep.join(row[r] for r in fmt.column_order) + "\n")
    return out.getvalue().encode("utf-8")
