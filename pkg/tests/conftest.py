import numpy as np
import pytest
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp


def rel_close(a, b, tol):
    """Per-coefficient ``|a - b| <= tol * max(1, |a|, |b|)``."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    scale = np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))
    return bool(np.all(np.abs(a - b) <= tol * scale))


@st.composite
def polylines(draw, max_dim=3, max_vertices=20, min_vertices=1, min_dim=1):
    d = draw(st.integers(min_dim, max_dim))
    m = draw(st.integers(min_vertices, max_vertices))
    elems = st.floats(-2.0, 2.0, allow_nan=False, allow_infinity=False)
    return draw(hnp.arrays(np.float64, (m, d), elements=elems))


def random_polyline(rng, d, m, scale=1.0):
    steps = rng.uniform(-scale, scale, size=(m - 1, d))
    return np.vstack([rng.uniform(-1, 1, size=(1, d)), steps]).cumsum(axis=0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def sample_stream_values():
    return [3.0, 2.0, 2.0, 5.0, 5.0, 4.0, 1.0]


ACCEPTANCE: list[tuple[str, bool, str]] = []


def record(criterion: str, ok: bool, detail: str = "") -> bool:
    ACCEPTANCE.append((criterion, bool(ok), detail))
    return bool(ok)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {criterion}  {detail}")
