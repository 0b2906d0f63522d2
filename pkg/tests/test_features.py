from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sigstream.demo import generate_corpus, run_demo
from sigstream.features import (
    FeatureVector,
    accuracy,
    extract_features,
    feature_length,
    fit_centroids,
    predict,
)
from sigstream.paths import CONSTRUCTIONS, DataStream

CUBIC_LEVEL3 = [1, 0, Fraction(1, 2), Fraction(4, 15), Fraction(-4, 15), 0, Fraction(1, 6),
                Fraction(4, 35), Fraction(4, 105), Fraction(1, 24), Fraction(-16, 105),
                Fraction(-1, 12), Fraction(1, 24), 0]


def _fv(values, construction="linear"):
    values = np.asarray(values, dtype=float)
    return FeatureVector(values, len(values), 1, construction)


class TestExtract:
    def test_reference_series_linear(self, sample_stream_values):
        fv = extract_features(DataStream.from_values(sample_stream_values), "linear", 2)
        assert fv.values.tolist() == [-2.0, 2.0]
        assert fv.meta == (1, 2, "linear")

    @pytest.mark.parametrize("construction", sorted(CONSTRUCTIONS))
    def test_constant_stream(self, construction):
        s = DataStream([0.0, 0.5, 2.0], [[1.0, 1.0]] * 3)
        fv = extract_features(s, construction, 3)
        if construction in ("time_aug", "piecewise_const"):
            # only pure-time words survive: 2^n / n! on (1,)*n
            for w, v in zip(fv.words(), fv.values):
                assert v == (pytest.approx(2.0 ** len(w) / np.prod(range(1, len(w) + 1)))
                             if set(w) == {1} else 0.0)
        else:
            assert np.all(fv.values == 0.0)

    def test_reference_cubic_linear(self):
        t = np.linspace(0, 1, 10_000)
        fv = extract_features(DataStream(t, np.column_stack([t ** 2, t ** 3 - t])), "linear", 3)
        assert len(fv) == 14
        assert np.allclose(fv.values, np.array(CUBIC_LEVEL3, dtype=float), atol=1e-4, rtol=0)

    def test_rejects_level_zero(self):
        with pytest.raises(ValueError):
            extract_features(DataStream.from_values([1.0, 2.0]), "linear", 0)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(1, 3), st.integers(1, 4), st.sampled_from(sorted(CONSTRUCTIONS)))
    def test_length_formula(self, channels, level, construction):
        s = DataStream.from_values(np.arange(4 * channels, dtype=float).reshape(4, channels) ** 2)
        fv = extract_features(s, construction, level)
        assert len(fv) == feature_length(fv.dimension, level)

    @given(st.floats(0.01, 50))
    def test_linear_ignores_clock(self, factor):
        rng = np.random.default_rng(3)
        s = DataStream(np.arange(10.0), rng.normal(size=(10, 2)))
        r = DataStream(np.arange(10.0) * factor, s.values)
        assert np.array_equal(extract_features(s, "linear", 3).values, extract_features(r, "linear", 3).values)


class TestCentroids:
    def test_two_points_standardize_to_opposite_signs(self):
        a, b = _fv([1.0, 5.0, 2.0]), _fv([3.0, 5.0, -4.0])
        model = fit_centroids([(a, "a"), (b, "b")])
        ca, cb = model.centroids
        assert ca[1] == cb[1] == 0.0
        assert np.all(np.sign(ca[[0, 2]]) == -np.sign(cb[[0, 2]]))

    def test_single_class_rejected(self):
        with pytest.raises(ValueError):
            fit_centroids([(_fv([1.0]), "x"), (_fv([2.0]), "x")])

    def test_inconsistent_metadata(self):
        with pytest.raises(ValueError):
            fit_centroids([(_fv([1.0]), "x"), (_fv([2.0], "time_aug"), "y")])

    def test_predict_centroid_roundtrip(self):
        corpus = [(_fv([0.0, 1.0]), "left"), (_fv([0.2, 1.1]), "left"),
                  (_fv([5.0, -3.0]), "right"), (_fv([5.4, -2.0]), "right")]
        model = fit_centroids(corpus)
        for row, label in zip(model.centroids, model.labels):
            raw = row * model.scale + model.mean
            assert predict(model, _fv(raw)) == label

    def test_tie_goes_to_smaller_label(self):
        model = fit_centroids([(_fv([1.0]), "zeta"), (_fv([-1.0]), "alpha")])
        assert predict(model, _fv([0.0])) == "alpha"

    def test_metadata_mismatch(self):
        model = fit_centroids([(_fv([1.0]), "a"), (_fv([-1.0]), "b")])
        with pytest.raises(ValueError):
            predict(model, _fv([0.0], "time_aug"))

    @settings(max_examples=50, deadline=None)
    @given(st.floats(1e-3, 1e3), st.integers(0, 10_000))
    def test_positive_rescaling_keeps_predictions(self, factor, seed):
        rng = np.random.default_rng(seed)
        x = rng.normal(size=(12, 4))
        labels = ["a", "b", "c"] * 4
        query = rng.normal(size=(6, 4))
        base = fit_centroids([(_fv(r), l) for r, l in zip(x, labels)])
        scaled = fit_centroids([(_fv(r * factor), l) for r, l in zip(x, labels)])
        assert [predict(base, _fv(q)) for q in query] == [predict(scaled, _fv(q * factor)) for q in query]


class TestDemo:
    def test_corpus_is_balanced_and_deterministic(self):
        a = generate_corpus(40, 7)
        b = generate_corpus(40, 7)
        assert [l for _, l in a].count("smooth") == 20
        assert all(np.array_equal(x.values, y.values) for (x, _), (y, _) in zip(a, b))

    def test_rejects_tiny_corpus(self):
        with pytest.raises(ValueError):
            generate_corpus(10, 1)

    def test_holdout_wiggly_sample_is_recognised(self):
        result = run_demo(200, 1)
        corpus = generate_corpus(200, 1)[160:]
        wiggly = next(s for s, label in corpus if label == "wiggly")
        assert predict(result.model, extract_features(wiggly, "time_aug", 4)) == "wiggly"

    def test_accuracy_helper(self):
        model = fit_centroids([(_fv([1.0]), "a"), (_fv([-1.0]), "b")])
        assert accuracy(model, [(_fv([2.0]), "a"), (_fv([2.0]), "b")]) == 0.5
