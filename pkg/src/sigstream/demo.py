"""Synthetic smooth-versus-wiggly corpus for the end-to-end classification demo."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .features import CentroidModel, accuracy, extract_features, fit_centroids
from .paths import DataStream

POINTS = 200
LEVEL = 4
CONSTRUCTION = "time_aug"
TRAIN_FRACTION = 0.8
MIN_SAMPLES = 20

# smooth: A sin(2 pi f t) + s t, under one oscillation, rising on average
SMOOTH_FREQ = (0.25, 0.75)
SMOOTH_SLOPE = (0.2, 0.6)
# wiggly: A sin(pi t) sin(2 pi f t + phase); the taper pins both ends near zero
WIGGLY_FREQ = (8.0, 16.0)
AMPLITUDE = (0.8, 1.2)


def generate_corpus(n_samples: int, seed: int) -> list[tuple[DataStream, str]]:
    """``n_samples`` labelled streams on ``[0, 1]``, alternating classes, then shuffled."""
    if n_samples < MIN_SAMPLES:
        raise ValueError(f"need at least {MIN_SAMPLES} samples, got {n_samples}")
    rng = np.random.default_rng(seed)
    t = np.linspace(0.0, 1.0, POINTS)
    corpus = []
    for k in range(n_samples):
        amp = rng.uniform(*AMPLITUDE)
        if k % 2 == 0:
            freq = rng.uniform(*SMOOTH_FREQ)
            slope = rng.uniform(*SMOOTH_SLOPE)
            x = amp * np.sin(2 * np.pi * freq * t) + slope * t
            label = "smooth"
        else:
            freq = rng.uniform(*WIGGLY_FREQ)
            phase = rng.uniform(0.0, 2 * np.pi)
            x = amp * np.sin(np.pi * t) * np.sin(2 * np.pi * freq * t + phase)
            label = "wiggly"
        corpus.append((DataStream(t, x), label))
    order = rng.permutation(n_samples)
    return [corpus[i] for i in order]


@dataclass(frozen=True)
class DemoResult:
    n_train: int
    n_holdout: int
    accuracy: float
    model: CentroidModel


def run_demo(n_samples: int, seed: int) -> DemoResult:
    corpus = generate_corpus(n_samples, seed)
    labelled = [(extract_features(s, CONSTRUCTION, LEVEL), label) for s, label in corpus]
    n_train = int(round(TRAIN_FRACTION * n_samples))
    train, holdout = labelled[:n_train], labelled[n_train:]
    model = fit_centroids(train)
    return DemoResult(len(train), len(holdout), accuracy(model, holdout), model)
