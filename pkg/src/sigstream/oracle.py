"""Independent checks for the signature engine.

Three routes that share no code with :mod:`sigstream.chen`:

* Riemann-Stieltjes sums of iterated integrals over a sampled mesh,
* exact iterated integration of polynomial paths over the rationals,
* trapezoid areas of monotone planar polylines.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .tensor_words import TruncatedSignature, validate_word

__all__ = [
    "Polynomial",
    "PolyPath",
    "parse_poly_spec",
    "poly_signature",
    "poly_iterated_integral",
    "QuadratureConfig",
    "rs_integral",
    "iterated_rs",
    "resample_polyline",
    "area_under_path",
    "format_rational",
]


class Polynomial:
    """Univariate polynomial with :class:`Fraction` coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def constant(cls, value) -> Polynomial:
        return cls([value])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> Polynomial:
        return Polynomial([-x for x in self.coeffs])

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Polynomial(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def antiderivative(self, lower) -> Polynomial:
        """Antiderivative vanishing at ``lower``."""
        raw = Polynomial([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])
        return raw - Polynomial.constant(raw(Fraction(lower)))

    def compose(self, inner: Polynomial) -> Polynomial:
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + Polynomial.constant(c)
        return acc

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Polynomial(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" + ("" if k == 0 else "*t" if k == 1 else f"*t^{k}"))
        return "Polynomial(" + " + ".join(terms) + ")"


@dataclass(frozen=True)
class PolyPath:
    components: tuple[Polynomial, ...]
    start: Fraction = Fraction(0)
    end: Fraction = Fraction(1)

    def __post_init__(self):
        if not self.components:
            raise ValueError("a polynomial path needs at least one component")
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "start", Fraction(self.start))
        object.__setattr__(self, "end", Fraction(self.end))
        if not self.start < self.end:
            raise ValueError(f"domain requires start < end, got [{self.start}, {self.end}]")

    @property
    def dimension(self) -> int:
        return len(self.components)

    def reparameterize(self, phi: Polynomial) -> PolyPath:
        """``t -> X(phi(t))``; ``phi`` must map the domain onto itself monotonically."""
        if phi(self.start) != self.start or phi(self.end) != self.end:
            raise ValueError("reparameterization must fix both domain endpoints")
        return PolyPath(tuple(c.compose(phi) for c in self.components), self.start, self.end)

    def sample(self, n_points: int) -> np.ndarray:
        """Float vertices at ``n_points`` uniform parameter values."""
        t = np.linspace(float(self.start), float(self.end), n_points)
        cols = [np.polynomial.polynomial.polyval(t, [float(c) for c in p.coeffs] or [0.0])
                for p in self.components]
        return np.column_stack(cols)


def poly_iterated_integral(path: PolyPath, word: Sequence[int]) -> Fraction:
    """Exact iterated integral of ``path`` along ``word``."""
    w = validate_word(word, path.dimension)
    derivs = [c.derivative() for c in path.components]
    running = Polynomial.constant(1)
    for letter in w:
        running = (running * derivs[letter - 1]).antiderivative(path.start)
    return running(path.end)


def poly_signature(path: PolyPath, level: int) -> TruncatedSignature:
    """Exact truncated signature of a polynomial path.

    Each layer multiplies the running polynomial by the derivative of the next
    integrator and integrates from the domain start.  Prefixes are shared, so
    the level-``n`` polynomials are built from the level ``n - 1`` ones.
    """
    if level < 0:
        raise ValueError(f"level must be non-negative, got {level}")
    derivs = [c.derivative() for c in path.components]
    layer = [Polynomial.constant(1)]
    values: list[Fraction] = [Fraction(1)]
    for _ in range(level):
        layer = [(p * dx).antiderivative(path.start) for p in layer for dx in derivs]
        values.extend(p(path.end) for p in layer)
    return TruncatedSignature(path.dimension, level, np.array(values, dtype=object))


_RATIONAL = r"[+-]?\s*\d+(?:\s*/\s*\d+)?"
_TERM = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)?\s*\*?\s*(?P<var>t(?:\s*\^\s*(?P<exp>\d+))?)?$"
)


def _parse_rational(text: str) -> Fraction:
    text = text.replace(" ", "")
    if not re.fullmatch(r"[+-]?\d+(?:/\d+)?", text):
        raise ValueError(f"not an integer or rational: {text!r}")
    return Fraction(text)


def _parse_polynomial(text: str) -> Polynomial:
    body = text.replace(" ", "").replace("**", "^")
    if not body:
        raise ValueError("empty polynomial")
    pieces = re.findall(r"[+-]?[^+-]+", body)
    if "".join(pieces) != body:
        raise ValueError(f"cannot parse polynomial {text!r}")
    acc = Polynomial()
    for piece in pieces:
        sign = -1 if piece[0] == "-" else 1
        term = piece.lstrip("+-")
        m = _TERM.match(term)
        if not term or term.endswith("*") or m is None or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"cannot parse term {piece!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("var") is None:
            power = 0
        else:
            power = int(m.group("exp")) if m.group("exp") else 1
        acc = acc + Polynomial([0] * power + [sign * coef])
    return acc


def parse_poly_spec(text: str) -> PolyPath:
    """Parse ``"x1=t^2; x2=t^3-t; domain=[0,1]"`` into a :class:`PolyPath`.

    Coefficients are integers or ``p/q`` rationals; ``domain`` defaults to
    ``[0,1]``.  Components must be named ``x1..xd`` without gaps.
    """
    components: dict[int, Polynomial] = {}
    start, end = Fraction(0), Fraction(1)
    for clause in filter(None, (c.strip() for c in text.split(";"))):
        if "=" not in clause:
            raise ValueError(f"expected name=value, got {clause!r}")
        name, value = (s.strip() for s in clause.split("=", 1))
        if name == "domain":
            m = re.fullmatch(rf"\[\s*({_RATIONAL})\s*,\s*({_RATIONAL})\s*\]", value)
            if m is None:
                raise ValueError(f"domain must look like [a,b], got {value!r}")
            start, end = _parse_rational(m.group(1)), _parse_rational(m.group(2))
            continue
        m = re.fullmatch(r"x(\d+)", name)
        if m is None or int(m.group(1)) < 1:
            raise ValueError(f"component names are x1, x2, ...; got {name!r}")
        index = int(m.group(1))
        if index in components:
            raise ValueError(f"component {name} given twice")
        components[index] = _parse_polynomial(value)
    if not components:
        raise ValueError("no components given")
    d = max(components)
    missing = sorted(set(range(1, d + 1)) - set(components))
    if missing:
        raise ValueError(f"missing components: {', '.join(f'x{i}' for i in missing)}")
    return PolyPath(tuple(components[i] for i in range(1, d + 1)), start, end)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class QuadratureConfig:
    """Uniform mesh with ``subdivisions`` cells; ``tag`` picks the cell endpoint
    at which the integrand is evaluated."""

    subdivisions: int = 10_000
    tag: str = "left"

    def __post_init__(self):
        if int(self.subdivisions) != self.subdivisions or self.subdivisions < 1:
            raise ValueError(f"subdivisions must be a positive integer, got {self.subdivisions!r}")
        if self.tag not in ("left", "right"):
            raise ValueError(f"tag must be 'left' or 'right', got {self.tag!r}")


def rs_integral(f_samples, g_samples, tag: str = "left") -> float:
    """Riemann-Stieltjes sum of ``f dg`` over the common sample mesh."""
    f = np.asarray(f_samples, dtype=np.float64)
    g = np.asarray(g_samples, dtype=np.float64)
    if f.ndim != 1 or g.ndim != 1 or f.size != g.size:
        raise ValueError(f"f and g need equal 1-D sample counts, got {f.shape} and {g.shape}")
    if f.size < 2:
        raise ValueError("need at least two mesh points")
    tags = f[:-1] if tag == "left" else f[1:]
    if np.all(tags == tags[0]):
        # constant integrand: the sum telescopes, evaluate it without roundoff
        return float(tags[0] * (g[-1] - g[0]))
    return float(np.dot(tags, np.diff(g)))


def resample_polyline(vertices, subdivisions: int) -> np.ndarray:
    """Points of the polyline at ``subdivisions + 1`` uniform parameter values.

    Vertex ``j`` of ``m`` sits at parameter ``j / (m - 1)``.
    """
    v = np.asarray(getattr(vertices, "vertices", vertices), dtype=np.float64)
    if v.ndim == 1:
        v = v.reshape(-1, 1)
    if v.shape[0] < 2:
        return np.repeat(v[:1], subdivisions + 1, axis=0)
    knots = np.linspace(0.0, 1.0, v.shape[0])
    s = np.linspace(0.0, 1.0, subdivisions + 1)
    return np.column_stack([np.interp(s, knots, v[:, i]) for i in range(v.shape[1])])


def iterated_rs(samples, word: Sequence[int], cfg: QuadratureConfig | None = None) -> float:
    """Iterated Riemann-Stieltjes sum of ``word`` over a sampled path.

    ``samples`` is an ``(M + 1, d)`` array (or :class:`SampledPath`) of mesh
    values.  With ``cfg`` the samples are taken as polyline vertices and first
    resampled onto ``cfg.subdivisions`` uniform cells.  All partial integrals
    ``J_k(t) = int_a^t J_{k-1} dX^{i_k}`` are carried on the mesh in one sweep.
    """
    x = np.asarray(getattr(samples, "vertices", samples), dtype=np.float64)
    if x.ndim == 1:
        x = x.reshape(-1, 1)
    w = validate_word(word, x.shape[1])
    if not w:
        raise ValueError("word must be non-empty")
    tag = "left"
    if cfg is not None:
        x = resample_polyline(x, cfg.subdivisions)
        tag = cfg.tag
    if x.shape[0] < 2:
        raise ValueError("need at least two mesh points")
    dx = np.diff(x, axis=0)
    # J_1 telescopes to X - X_a for either tag
    running = x[:, w[0] - 1] - x[0, w[0] - 1]
    for letter in w[1:]:
        weights = running[:-1] if tag == "left" else running[1:]
        running = np.concatenate([[0.0], np.cumsum(weights * dx[:, letter - 1])])
    return float(running[-1])


def area_under_path(vertices) -> tuple[float, float]:
    """Signed areas cut from the bounding rectangle of a monotone planar polyline.

    Returns ``(under, left)``: the area between the curve and the horizontal
    line through its start, and the area between the curve and the vertical
    line through its start.  Both components must be non-decreasing.
    """
    v = np.asarray(getattr(vertices, "vertices", vertices), dtype=np.float64)
    if v.ndim != 2 or v.shape[1] != 2:
        raise ValueError(f"expected a 2-D path, got shape {v.shape}")
    steps = np.diff(v, axis=0)
    if np.any(steps < 0):
        raise ValueError("area interpretation needs both components non-decreasing")
    x = v[:, 0] - v[0, 0]
    y = v[:, 1] - v[0, 1]
    under = float(np.sum(steps[:, 0] * (y[:-1] + y[1:]) / 2))
    left = float(np.sum(steps[:, 1] * (x[:-1] + x[1:]) / 2))
    return under, left
