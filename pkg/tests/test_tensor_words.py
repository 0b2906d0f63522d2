from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sigstream.chen import chen_concat, signature_of_path
from sigstream.tensor_words import (
    StreamMeta,
    TruncatedSignature,
    enumerate_words,
    format_word,
    identity_signature,
    parse_word,
    signature_size,
    word_index,
)


def test_enumerate_d2_n3_listing():
    assert enumerate_words(2, 3) == [
        (), (1,), (2,), (1, 1), (1, 2), (2, 1), (2, 2),
        (1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2),
        (2, 1, 1), (2, 1, 2), (2, 2, 1), (2, 2, 2),
    ]


def test_enumerate_single_letter():
    assert enumerate_words(1, 4) == [(), (1,), (1, 1), (1, 1, 1), (1, 1, 1, 1)]


def test_enumerate_d3_n2_count():
    assert len(enumerate_words(3, 2)) == 13 == (3 ** 3 - 1) // 2


def test_enumerate_rejects_zero_dimension():
    with pytest.raises(ValueError):
        enumerate_words(0, 2)


def test_enumerate_is_stable_across_calls():
    a = enumerate_words(3, 3)
    a.append((9,))
    assert enumerate_words(3, 3)[-1] == (3, 3, 3)


@pytest.mark.parametrize("word, expected", [((), 0), ((2, 1, 2), 12), ((1, 2), 4)])
def test_word_index_examples(word, expected):
    assert word_index(word, 2, 3) == expected


@pytest.mark.parametrize("word", [(3,), (0, 1), (1, 1, 1, 1)])
def test_word_index_rejects(word):
    with pytest.raises(ValueError):
        word_index(word, 2, 3)


@given(st.integers(1, 4), st.integers(0, 4))
def test_index_inverts_enumeration(d, n):
    words = enumerate_words(d, n)
    assert [word_index(w, d, n) for w in words] == list(range(len(words)))


@given(st.integers(2, 5), st.integers(0, 5))
def test_count_formula(d, n):
    assert len(enumerate_words(d, n)) == (d ** (n + 1) - 1) // (d - 1) == signature_size(d, n)


@given(st.integers(1, 4), st.integers(1, 4))
def test_each_level_is_lexicographic(d, n):
    words = enumerate_words(d, n)
    for k in range(n + 1):
        level = [w for w in words if len(w) == k]
        assert level == sorted(level)


def test_identity_examples():
    assert list(identity_signature(2, 2).coefficients) == [1, 0, 0, 0, 0, 0, 0]
    assert list(identity_signature(1, 0).coefficients) == [1]


def test_identity_is_neutral(rng):
    s = signature_of_path(rng.normal(size=(6, 3)), 3)
    e = identity_signature(3, 3)
    assert chen_concat(e, s) == s
    assert chen_concat(s, e) == s


def test_exact_identity_holds_fractions():
    e = identity_signature(2, 2, exact=True)
    assert e.exact and all(isinstance(c, Fraction) for c in e.coefficients)


def test_container_validation():
    with pytest.raises(ValueError):
        TruncatedSignature(2, 2, np.zeros(7))
    with pytest.raises(ValueError):
        TruncatedSignature(2, 2, np.ones(6))


def test_container_is_immutable():
    src = np.array([1.0, 2.0, 3.0])
    s = TruncatedSignature(2, 1, src)
    src[1] = 99.0
    assert s[(1,)] == 2.0
    with pytest.raises(ValueError):
        s.coefficients[1] = 5.0


def test_level_slice_and_lookup():
    s = signature_of_path([[0, 0], [2, 3]], 2)
    assert list(s.level_slice(2)) == [2.0, 3.0, 3.0, 4.5]
    assert s[(2, 2)] == 4.5


def test_word_text_roundtrip():
    assert parse_word(format_word((12, 1, 3))) == (12, 1, 3)
    assert parse_word("") == ()
    with pytest.raises(ValueError):
        parse_word("1;2")


def test_stream_meta_requires_ordered_interval():
    StreamMeta(0.0, 1.0, 2)
    with pytest.raises(ValueError):
        StreamMeta(1.0, 1.0, 2)
