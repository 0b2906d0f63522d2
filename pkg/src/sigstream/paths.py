"""Path constructions that turn a discrete data stream into a polyline."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "DataStream",
    "SampledPath",
    "build_linear",
    "build_time_augmented",
    "build_piecewise_constant",
    "lead_lag_transform",
    "CONSTRUCTIONS",
    "build_path",
]


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=np.float64)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class DataStream:
    """Samples ``(t_i, D(t_i))`` with strictly increasing timestamps.

    ``values`` has shape ``(n_samples, d)``; a 1-D sequence is read as a
    single channel.
    """

    times: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        times = np.asarray(self.times, dtype=np.float64)
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim == 1:
            values = values.reshape(-1, 1)
        if times.ndim != 1 or values.ndim != 2:
            raise ValueError("times must be 1-D and values 2-D (samples x channels)")
        if times.size == 0:
            raise ValueError("a data stream needs at least one sample")
        if values.shape[0] != times.size:
            raise ValueError(f"{times.size} timestamps but {values.shape[0]} value rows")
        if values.shape[1] == 0:
            raise ValueError("data stream has zero channels")
        if not (np.all(np.isfinite(times)) and np.all(np.isfinite(values))):
            raise ValueError("data stream contains non-finite entries")
        steps = np.diff(times)
        if np.any(steps <= 0):
            bad = int(np.argmax(steps <= 0)) + 1
            raise ValueError(
                f"timestamps must be strictly increasing; sample {bad} has t={times[bad]!r} "
                f"after t={times[bad - 1]!r}"
            )
        object.__setattr__(self, "times", _frozen(times))
        object.__setattr__(self, "values", _frozen(values))

    @classmethod
    def from_values(cls, values, start: float = 0.0, step: float = 1.0) -> DataStream:
        """Stream on the uniform clock ``start, start + step, ...``."""
        values = np.asarray(values, dtype=np.float64)
        n = values.shape[0] if values.ndim else 0
        return cls(start + step * np.arange(n), values)

    @property
    def dimension(self) -> int:
        return self.values.shape[1]

    def __len__(self) -> int:
        return self.times.size


@dataclass(frozen=True, eq=False)
class SampledPath:
    vertices: np.ndarray

    def __post_init__(self):
        vertices = np.asarray(self.vertices, dtype=np.float64)
        if vertices.ndim == 1:
            vertices = vertices.reshape(-1, 1)
        if vertices.ndim != 2 or vertices.shape[0] == 0 or vertices.shape[1] == 0:
            raise ValueError(f"a path needs at least one vertex of positive dimension, got shape {vertices.shape}")
        object.__setattr__(self, "vertices", _frozen(vertices))

    @property
    def dimension(self) -> int:
        return self.vertices.shape[1]

    def __len__(self) -> int:
        return self.vertices.shape[0]

    def increments(self) -> np.ndarray:
        return np.diff(self.vertices, axis=0)


def build_linear(stream: DataStream) -> SampledPath:
    """Linear interpolation of the values; timestamps are not used."""
    return SampledPath(stream.values)


def build_time_augmented(stream: DataStream) -> SampledPath:
    """Linear interpolation of ``(t, D(t))`` with time as the first coordinate."""
    return SampledPath(np.column_stack([stream.times, stream.values]))


def build_piecewise_constant(stream: DataStream) -> SampledPath:
    """Time-augmented staircase: each step moves in time first, then in value.

    Only the vertices are emitted.  The parameter speed along each leg does
    not affect the signature, so the half-interval timing of the continuous
    construction is dropped.
    """
    t, v = stream.times, stream.values
    n = t.size
    out = np.empty((2 * n - 1, 1 + stream.dimension))
    out[0::2, 0] = t
    out[0::2, 1:] = v
    out[1::2, 0] = t[1:]
    out[1::2, 1:] = v[:-1]
    return SampledPath(out)


def lead_lag_transform(stream: DataStream) -> DataStream:
    """Double the channels into a lagging copy followed by a leading copy.

    Sample ``2i`` is ``(D_i, D_i)`` and sample ``2i + 1`` is ``(D_i, D_{i+1})``,
    so the lead block moves one step before the lag block catches up.  The
    ``n`` input samples give ``2n - 1`` output samples on the synthetic clock
    ``0, 1, ..., 2n - 2``.
    """
    v = stream.values
    n = v.shape[0]
    out = np.empty((2 * n - 1, 2 * stream.dimension))
    d = stream.dimension
    out[0::2, :d] = v
    out[0::2, d:] = v
    out[1::2, :d] = v[:-1]
    out[1::2, d:] = v[1:]
    return DataStream(np.arange(2 * n - 1, dtype=np.float64), out)


def _leadlag_linear(stream: DataStream) -> SampledPath:
    return build_linear(lead_lag_transform(stream))


CONSTRUCTIONS = {
    "linear": build_linear,
    "time_aug": build_time_augmented,
    "piecewise_const": build_piecewise_constant,
    "leadlag_linear": _leadlag_linear,
}


def build_path(stream: DataStream, construction: str) -> SampledPath:
    try:
        builder = CONSTRUCTIONS[construction]
    except KeyError:
        raise ValueError(
            f"unknown construction {construction!r}; choose from {', '.join(CONSTRUCTIONS)}"
        ) from None
    return builder(stream)
