"""Signatures of piecewise-linear paths via Chen's identity.

A straight segment with increment ``delta`` has the closed-form signature
``delta[i1] * ... * delta[in] / n!`` on the word ``(i1, ..., in)``.  A
polyline is the ordered product of its segment signatures, where the product
of two truncated signatures sums over every split ``w = uv`` of a word.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .tensor_words import TruncatedSignature, identity_signature, level_offset

__all__ = [
    "segment_signature",
    "chen_concat",
    "signature_of_path",
    "SignatureAccumulator",
]


def _coerce(arr: np.ndarray) -> np.ndarray:
    if arr.dtype == object:
        return np.vectorize(Fraction, otypes=[object])(arr) if arr.size else arr
    return arr.astype(np.float64)


def _as_increment(delta) -> np.ndarray:
    arr = _coerce(np.asarray(delta))
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError(f"segment increment must be a non-empty 1-D vector, got shape {arr.shape}")
    return arr


def _split_levels(sig: TruncatedSignature) -> list[np.ndarray]:
    d = sig.dimension
    c = sig.coefficients
    return [c[level_offset(d, n):level_offset(d, n + 1)] for n in range(sig.level + 1)]


def _join_levels(d: int, levels: list[np.ndarray]) -> TruncatedSignature:
    return TruncatedSignature(d, len(levels) - 1, np.concatenate(levels))


def _exp_levels(delta: np.ndarray, level: int) -> list[np.ndarray]:
    one = delta[:1] * 0 + 1
    levels = [one]
    for n in range(1, level + 1):
        levels.append(np.multiply.outer(levels[-1], delta).ravel() / n)
    return levels


def _concat_levels(left: list[np.ndarray], right: list[np.ndarray]) -> list[np.ndarray]:
    # out_n = sum_k left_k (x) right_{n-k}; the k = 0 and k = n terms are copies
    out = [left[0] * right[0]]
    for n in range(1, len(left)):
        acc = left[n] + right[n]
        for k in range(1, n):
            acc = acc + np.multiply.outer(left[k], right[n - k]).ravel()
        out.append(acc)
    return out


def _extend_by_segment(levels: list[np.ndarray], delta: np.ndarray) -> list[np.ndarray]:
    # Horner form of levels (x) exp(delta): fewer temporaries than building exp first
    top = len(levels) - 1
    out = [levels[0]]
    for n in range(1, top + 1):
        acc = levels[0] * delta / n
        for k in range(1, n):
            acc = np.multiply.outer(acc + levels[k], delta).ravel() / (n - k)
        out.append(acc + levels[n])
    return out


def _batch_exp(deltas: np.ndarray, level: int) -> list[np.ndarray]:
    m = deltas.shape[0]
    levels = [deltas[:, :1] * 0 + 1]
    for n in range(1, level + 1):
        levels.append((levels[-1][:, :, None] * deltas[:, None, :]).reshape(m, -1) / n)
    return levels


def _batch_concat(left: list[np.ndarray], right: list[np.ndarray]) -> list[np.ndarray]:
    m = left[0].shape[0]
    out = [left[0] * right[0]]
    for n in range(1, len(left)):
        acc = left[n] + right[n]
        for k in range(1, n):
            acc = acc + (left[k][:, :, None] * right[n - k][:, None, :]).reshape(m, -1)
        out.append(acc)
    return out


def _ordered_reduce(levels: list[np.ndarray]) -> list[np.ndarray]:
    # pairwise (0,1), (2,3), ... keeps the left-to-right order of the product
    while levels[0].shape[0] > 1:
        m = levels[0].shape[0]
        even = m - m % 2
        merged = _batch_concat([x[0:even:2] for x in levels], [x[1:even:2] for x in levels])
        if m % 2:
            merged = [np.concatenate([x, y[-1:]]) for x, y in zip(merged, levels)]
        levels = merged
    return [x[0] for x in levels]


def segment_signature(delta, level: int) -> TruncatedSignature:
    """Signature of the straight segment with increment ``delta``.

    Integer or :class:`~fractions.Fraction` increments given as an ``object``
    array produce an exact signature.
    """
    delta = _as_increment(delta)
    if level < 0:
        raise ValueError(f"level must be non-negative, got {level}")
    return _join_levels(delta.size, _exp_levels(delta, level))


def chen_concat(left: TruncatedSignature, right: TruncatedSignature) -> TruncatedSignature:
    """Signature of the path that runs ``left`` then ``right``."""
    if left.dimension != right.dimension:
        raise ValueError(f"dimension mismatch: {left.dimension} vs {right.dimension}")
    if left.level != right.level:
        raise ValueError(f"level mismatch: {left.level} vs {right.level}")
    levels = _concat_levels(_split_levels(left), _split_levels(right))
    return _join_levels(left.dimension, levels)


def _vertex_array(path) -> np.ndarray:
    vertices = getattr(path, "vertices", path)
    arr = _coerce(np.asarray(vertices))
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise ValueError(f"vertices must form a 2-D array (points x dimension), got shape {arr.shape}")
    if arr.shape[0] == 0:
        raise ValueError("path has no vertices")
    if arr.shape[1] == 0:
        raise ValueError("path vertices have dimension 0")
    return arr


def signature_of_path(path, level: int) -> TruncatedSignature:
    """Signature of the polyline through the given vertices.

    ``path`` is a :class:`~sigstream.paths.SampledPath` or anything convertible
    to an ``(m, d)`` array.  A single vertex gives the identity.

    All segment signatures are built at once and multiplied in adjacent pairs
    until one remains.  Pairing never reorders factors, so the result is the
    left-to-right product up to floating-point reassociation.
    """
    vertices = _vertex_array(path)
    d = vertices.shape[1]
    if level < 0:
        raise ValueError(f"level must be non-negative, got {level}")
    if vertices.shape[0] == 1:
        return identity_signature(d, level, exact=vertices.dtype == object)
    levels = _ordered_reduce(_batch_exp(np.diff(vertices, axis=0), level))
    return _join_levels(d, levels)


class SignatureAccumulator:
    """Running signature of a stream that arrives one segment at a time.

    >>> acc = SignatureAccumulator(dimension=2, level=2)
    >>> acc.push([1.0, 0.0]).push([0.0, 1.0]).current[(1, 2)]
    1.0
    """

    def __init__(self, dimension: int, level: int, exact: bool = False):
        self.dimension = dimension
        self.level = level
        self.segments_consumed = 0
        self._exact = exact
        self._levels = _split_levels(identity_signature(dimension, level, exact=exact))

    @property
    def current(self) -> TruncatedSignature:
        return _join_levels(self.dimension, self._levels)

    def push(self, delta) -> SignatureAccumulator:
        delta = _as_increment(delta)
        if delta.size != self.dimension:
            raise ValueError(f"segment has dimension {delta.size}, accumulator expects {self.dimension}")
        self._levels = _extend_by_segment(self._levels, delta)
        self.segments_consumed += 1
        return self

    def extend(self, deltas: Iterable[Sequence[float]]) -> SignatureAccumulator:
        for delta in deltas:
            self.push(delta)
        return self
