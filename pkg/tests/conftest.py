import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from setsol import ThetaFamily, all_semigroups, idempotent_endomorphisms

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def semigroups(draw, min_order=1, max_order=3):
    n = draw(st.integers(min_order, max_order))
    pool = all_semigroups(n)
    return pool[draw(st.integers(0, len(pool) - 1))]


@st.composite
def theta_for(draw, sg, structured=0.5):
    """Random theta, biased towards constant-row families from idempotent
    endomorphisms so that positives show up."""
    n = sg.order
    if draw(st.floats(0, 1)) < structured:
        endos = idempotent_endomorphisms(sg)
        g = endos[draw(st.integers(0, len(endos) - 1))]
        return ThetaFamily.constant_rows(n, g.image)
    rows = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
                         min_size=n, max_size=n))
    return ThetaFamily(rows)


@st.composite
def semigroup_and_theta(draw, max_order=3):
    sg = draw(semigroups(max_order=max_order))
    return sg, draw(theta_for(sg))


@st.composite
def pair_maps(draw, max_order=3):
    from setsol import PairMap

    n = draw(st.integers(1, max_order))
    cell = st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n)
    return PairMap(draw(cell), draw(cell))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
