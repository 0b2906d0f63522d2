"""Truncated path-signature features for discrete data streams."""
from .chen import SignatureAccumulator, chen_concat, segment_signature, signature_of_path
from .features import FeatureVector, extract_features, fit_centroids, predict
from .oracle import PolyPath, QuadratureConfig, area_under_path, iterated_rs, poly_signature, rs_integral
from .paths import (
    DataStream,
    SampledPath,
    build_linear,
    build_piecewise_constant,
    build_time_augmented,
    lead_lag_transform,
)
from .tensor_words import TruncatedSignature, enumerate_words, identity_signature, word_index

__version__ = "0.1.0"
