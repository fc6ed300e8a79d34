import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from fcakit import FormalContext, load_crime_events  # noqa: E402


def make_context(inc) -> FormalContext:
    inc = np.asarray(inc, dtype=bool)
    n_obj, n_att = inc.shape
    return FormalContext(
        [f"g{i + 1}" for i in range(n_obj)], [f"m{j + 1}" for j in range(n_att)], inc
    )


@st.composite
def incidences(draw, max_objects=8, max_attributes=8, min_size=0):
    n_obj = draw(st.integers(min_size, max_objects))
    n_att = draw(st.integers(min_size, max_attributes))
    flat = draw(st.lists(st.booleans(), min_size=n_obj * n_att, max_size=n_obj * n_att))
    return np.array(flat, dtype=bool).reshape(n_obj, n_att)


@pytest.fixture(scope="session")
def crime():
    return load_crime_events()


@pytest.fixture
def diagonal():
    return make_context(np.eye(2, dtype=bool))


@pytest.fixture
def single_full():
    return FormalContext(["1"], ["a", "b"], [[True, True]])


@pytest.fixture
def rng():
    return np.random.default_rng(20131)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, elapsed, budget in RESULTS:
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {label} ({elapsed:.2f}s / {budget:g}s)")
