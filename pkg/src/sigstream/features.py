"""Signature feature vectors and a nearest-centroid demo classifier."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .chen import signature_of_path
from .paths import DataStream, build_path
from .tensor_words import Word, enumerate_words, signature_size

__all__ = [
    "FeatureVector",
    "feature_length",
    "extract_features",
    "CentroidModel",
    "fit_centroids",
    "predict",
    "accuracy",
]


def feature_length(d: int, level: int) -> int:
    return signature_size(d, level) - 1


@dataclass(frozen=True, eq=False)
class FeatureVector:
    """Signature coefficients without the constant empty-word entry."""

    values: np.ndarray
    dimension: int
    level: int
    construction: str

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 1 or values.size != feature_length(self.dimension, self.level):
            raise ValueError(
                f"d={self.dimension}, N={self.level} needs {feature_length(self.dimension, self.level)} "
                f"values, got shape {values.shape}"
            )
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @property
    def meta(self) -> tuple[int, int, str]:
        return self.dimension, self.level, self.construction

    def words(self) -> list[Word]:
        return enumerate_words(self.dimension, self.level)[1:]

    def __len__(self) -> int:
        return self.values.size


def extract_features(stream: DataStream, construction: str, level: int) -> FeatureVector:
    """Build the named path from ``stream`` and return its level-``level`` features."""
    if level < 1:
        raise ValueError(f"feature level must be at least 1, got {level}")
    path = build_path(stream, construction)
    sig = signature_of_path(path, level)
    return FeatureVector(sig.coefficients[1:], sig.dimension, level, construction)


@dataclass(frozen=True, eq=False)
class CentroidModel:
    labels: tuple[str, ...]
    centroids: np.ndarray  # standardized, one row per label
    mean: np.ndarray
    scale: np.ndarray
    meta: tuple[int, int, str]

    def standardize(self, values: np.ndarray) -> np.ndarray:
        return (np.asarray(values, dtype=np.float64) - self.mean) / self.scale


def fit_centroids(corpus: Iterable[tuple[FeatureVector, str]]) -> CentroidModel:
    """Per-class means of the standardized features.

    Each coordinate is centred and divided by its population standard
    deviation over the corpus.  Coordinates with zero spread keep scale 1.
    """
    items = list(corpus)
    if not items:
        raise ValueError("empty corpus")
    meta = items[0][0].meta
    for fv, _ in items:
        if fv.meta != meta:
            raise ValueError(f"inconsistent feature metadata: {fv.meta} vs {meta}")
    labels = tuple(sorted({str(label) for _, label in items}))
    if len(labels) < 2:
        raise ValueError(f"need at least two classes, got {list(labels)}")

    x = np.stack([fv.values for fv, _ in items])
    y = np.array([str(label) for _, label in items])
    mean = x.mean(axis=0)
    scale = x.std(axis=0)
    scale[scale == 0] = 1.0
    z = (x - mean) / scale
    centroids = np.stack([z[y == label].mean(axis=0) for label in labels])
    return CentroidModel(labels, centroids, mean, scale, meta)


def predict(model: CentroidModel, fv: FeatureVector) -> str:
    """Label of the nearest centroid; exact-distance ties go to the smaller label."""
    if fv.meta != model.meta:
        raise ValueError(f"feature metadata {fv.meta} does not match model {model.meta}")
    z = model.standardize(fv.values)
    dist = np.sum((model.centroids - z) ** 2, axis=1)
    best = dist.min()
    tied = np.isclose(dist, best, rtol=1e-12, atol=0.0)
    # labels are stored sorted, so the first tied entry is the smallest
    return model.labels[int(np.argmax(tied))]


def accuracy(model: CentroidModel, corpus: Sequence[tuple[FeatureVector, str]]) -> float:
    if not corpus:
        raise ValueError("cannot score an empty corpus")
    hits = sum(predict(model, fv) == str(label) for fv, label in corpus)
    return hits / len(corpus)
