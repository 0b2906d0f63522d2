"""Words over the alphabet {1..d} and the dense truncated-signature container.

Coefficients are stored level-major: the empty word first, then the ``d``
words of length one, then the ``d**2`` words of length two, and so on.  Within
a level words are lexicographic with ``1 < 2 < ... < d``.  This order is the
serialization contract for every feature vector the package emits.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence

import numpy as np

Word = tuple[int, ...]


def signature_size(d: int, level: int) -> int:
    """Number of words of length ``0..level`` over ``d`` letters."""
    _check_shape(d, level)
    if d == 1:
        return level + 1
    return (d ** (level + 1) - 1) // (d - 1)


def level_offset(d: int, n: int) -> int:
    """Position of the first word of length ``n`` in canonical order."""
    if d == 1:
        return n
    return (d ** n - 1) // (d - 1)


def _check_shape(d: int, level: int) -> None:
    if int(d) != d or d < 1:
        raise ValueError(f"dimension must be a positive integer, got {d!r}")
    if int(level) != level or level < 0:
        raise ValueError(f"level must be a non-negative integer, got {level!r}")


@lru_cache(maxsize=None)
def _words(d: int, level: int) -> tuple[Word, ...]:
    out: list[Word] = []
    for n in range(level + 1):
        out.extend(product(range(1, d + 1), repeat=n))
    return tuple(out)


def enumerate_words(d: int, level: int) -> list[Word]:
    """All words of length ``0..level`` over ``{1..d}`` in canonical order.

    >>> enumerate_words(2, 2)
    [(), (1,), (2,), (1, 1), (1, 2), (2, 1), (2, 2)]
    """
    _check_shape(d, level)
    return list(_words(int(d), int(level)))


def validate_word(word: Sequence[int], d: int, level: int | None = None) -> Word:
    w = tuple(int(i) for i in word)
    for letter, raw in zip(w, word):
        if letter != raw or not 1 <= letter <= d:
            raise ValueError(f"letter {raw!r} outside alphabet 1..{d}")
    if level is not None and len(w) > level:
        raise ValueError(f"word {w} longer than truncation level {level}")
    return w


def word_index(word: Sequence[int], d: int, level: int) -> int:
    """Position of ``word`` in ``enumerate_words(d, level)``."""
    _check_shape(d, level)
    w = validate_word(word, d, level)
    pos = 0
    for letter in w:
        pos = pos * d + (letter - 1)
    return level_offset(d, len(w)) + pos


def format_word(word: Sequence[int]) -> str:
    return ",".join(str(i) for i in word)


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse word {text!r}; expected comma-separated letters") from None


@dataclass(frozen=True)
class StreamMeta:
    start: float
    end: float
    dimension: int

    def __post_init__(self):
        if not self.start < self.end:
            raise ValueError(f"interval requires start < end, got [{self.start}, {self.end}]")
        _check_shape(self.dimension, 0)


@dataclass(frozen=True, eq=False)
class TruncatedSignature:
    """Signature coefficients for all words of length at most ``level``.

    ``coefficients`` is a 1-D array in canonical word order.  Float signatures
    use ``float64``; exact ones hold :class:`fractions.Fraction` objects in an
    ``object`` array, and every operation in :mod:`sigstream.chen` preserves
    that dtype.
    """

    dimension: int
    level: int
    coefficients: np.ndarray

    def __post_init__(self):
        _check_shape(self.dimension, self.level)
        coeffs = np.asarray(self.coefficients)
        if coeffs.dtype != object:
            coeffs = coeffs.astype(np.float64)
        if coeffs.ndim != 1 or coeffs.size != signature_size(self.dimension, self.level):
            raise ValueError(
                f"expected {signature_size(self.dimension, self.level)} coefficients for "
                f"d={self.dimension}, N={self.level}, got shape {coeffs.shape}"
            )
        if coeffs[0] != 1:
            raise ValueError(f"empty-word coefficient must be 1, got {coeffs[0]!r}")
        if coeffs is self.coefficients:
            coeffs = coeffs.copy()
        coeffs.flags.writeable = False
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def exact(self) -> bool:
        return self.coefficients.dtype == object

    def words(self) -> list[Word]:
        return enumerate_words(self.dimension, self.level)

    def level_slice(self, n: int) -> np.ndarray:
        """Coefficients of the ``d**n`` words of length ``n``."""
        if not 0 <= n <= self.level:
            raise IndexError(f"level {n} outside 0..{self.level}")
        lo = level_offset(self.dimension, n)
        return self.coefficients[lo:lo + self.dimension ** n]

    def __getitem__(self, word: Sequence[int]):
        return self.coefficients[word_index(word, self.dimension, self.level)]

    def __len__(self) -> int:
        return self.coefficients.size

    def __eq__(self, other):
        if not isinstance(other, TruncatedSignature):
            return NotImplemented
        return (
            self.dimension == other.dimension
            and self.level == other.level
            and bool(np.all(self.coefficients == other.coefficients))
        )

    __hash__ = None

    def as_floats(self) -> TruncatedSignature:
        if not self.exact:
            return self
        return TruncatedSignature(self.dimension, self.level, self.coefficients.astype(np.float64))

    def __repr__(self) -> str:
        kind = "exact" if self.exact else "float"
        return f"TruncatedSignature(d={self.dimension}, N={self.level}, {kind}, {len(self)} coefficients)"


def identity_signature(d: int, level: int, exact: bool = False) -> TruncatedSignature:
    """Neutral element of concatenation: 1 on the empty word, 0 elsewhere."""
    size = signature_size(d, level)
    if exact:
        from fractions import Fraction

        coeffs = np.array([Fraction(0)] * size, dtype=object)
        coeffs[0] = Fraction(1)
    else:
        coeffs = np.zeros(size)
        coeffs[0] = 1.0
    return TruncatedSignature(d, level, coeffs)
