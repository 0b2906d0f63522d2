"""Stream files in, feature records out.

A stream file is delimited text with one sample per row: the timestamp, then
the ``d`` channel values.  Commas, tabs or runs of whitespace separate fields.
A single leading header row is allowed.

Feature records carry ``d``, ``level``, ``construction``, the canonical word
list and the parallel values.  JSON holds a list of records; CSV holds one
row per stream under a header of comma-joined words.  Floats are written with
``repr`` so both formats decode bit-for-bit.
"""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Iterable, TextIO

import numpy as np

from .features import FeatureVector
from .paths import DataStream
from .tensor_words import enumerate_words, format_word, parse_word


class StreamFormatError(ValueError):
    pass


def _split(line: str) -> list[str]:
    if "," in line:
        return [field.strip() for field in line.split(",")]
    return line.split()


def _is_number(text: str) -> bool:
    try:
        float(text)
    except ValueError:
        return False
    return True


def parse_stream(text: str, source: str = "<stream>") -> DataStream:
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line:
            rows.append((lineno, _split(line)))
    if rows and not all(_is_number(f) for f in rows[0][1]):
        rows = rows[1:]
    if not rows:
        raise StreamFormatError(f"{source}: no data rows")

    width = len(rows[0][1])
    if width < 2:
        raise StreamFormatError(f"{source}:{rows[0][0]}: need a timestamp and at least one value column")
    data = np.empty((len(rows), width))
    for i, (lineno, fields) in enumerate(rows):
        if len(fields) != width:
            raise StreamFormatError(f"{source}:{lineno}: expected {width} columns, found {len(fields)}")
        try:
            data[i] = [float(f) for f in fields]
        except ValueError:
            raise StreamFormatError(f"{source}:{lineno}: non-numeric field in {fields!r}") from None
        if not np.all(np.isfinite(data[i])):
            raise StreamFormatError(f"{source}:{lineno}: non-finite value")
    steps = np.diff(data[:, 0])
    if np.any(steps <= 0):
        bad = int(np.argmax(steps <= 0)) + 1
        raise StreamFormatError(f"{source}:{rows[bad][0]}: timestamps must be strictly increasing")
    return DataStream(data[:, 0], data[:, 1:])


def read_stream(path: str | Path) -> DataStream:
    path = Path(path)
    return parse_stream(path.read_text(), source=str(path))


def feature_record(fv: FeatureVector) -> dict:
    return {
        "d": fv.dimension,
        "level": fv.level,
        "construction": fv.construction,
        "words": [list(w) for w in fv.words()],
        "values": [float(v) for v in fv.values],
    }


def _check_record(rec: dict) -> FeatureVector:
    fv = FeatureVector(np.array(rec["values"], dtype=np.float64), int(rec["d"]), int(rec["level"]),
                       str(rec["construction"]))
    if [tuple(w) for w in rec["words"]] != fv.words():
        raise ValueError("feature record words are not in canonical order")
    return fv


def write_json(features: Iterable[FeatureVector], out: TextIO) -> None:
    records = [json.dumps(feature_record(fv)) for fv in features]
    out.write("[\n" + ",\n".join(records) + "\n]\n" if records else "[]\n")


def read_json(text: str) -> list[FeatureVector]:
    return [_check_record(rec) for rec in json.loads(text)]


def write_csv(features: Iterable[FeatureVector], out: TextIO) -> None:
    features = list(features)
    if not features:
        return
    words = features[0].words()
    for fv in features[1:]:
        if fv.words() != words:
            raise ValueError("CSV output needs the same dimension and level for every stream")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(format_word(w) for w in words)
    for fv in features:
        writer.writerow(repr(float(v)) for v in fv.values)


def _infer_shape(words: list[tuple[int, ...]]) -> tuple[int, int]:
    d = max((max(w) for w in words if w), default=1)
    level = max((len(w) for w in words), default=0)
    return d, level


def read_csv(text: str, construction: str = "unknown") -> list[FeatureVector]:
    """Decode CSV feature rows.  The header fixes ``d`` and the level; the
    construction is not stored in CSV and must be supplied."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        return []
    words = [parse_word(h) for h in header]
    d, level = _infer_shape(words)
    if words != enumerate_words(d, level)[1:]:
        raise ValueError("CSV header is not a canonical word list")
    return [FeatureVector(np.array([float(x) for x in row]), d, level, construction)
            for row in reader if row]


__all__ = [
    "StreamFormatError",
    "parse_stream",
    "read_stream",
    "feature_record",
    "write_json",
    "read_json",
    "write_csv",
    "read_csv",
]
