import os
import sys
import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from linfield.finite_field import binary_tower, gf4, gf8, gf9, gf16_over_gf4
from linfield.linearized import LinPoly

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

TOWERS = {
    "gf4": gf4(),
    "gf8": gf8(),
    "gf9": gf9(),
    "gf16_4": gf16_over_gf4(),
    "gf64": binary_tower(6),
}

W = 2  # w in GF(4), with w^2 = w + 1
W1 = 3  # w + 1


@pytest.fixture
def F4():
    return TOWERS["gf4"]


@pytest.fixture
def L_a(F4):
    return LinPoly(F4, (W, 1))


@pytest.fixture
def rng():
    return random.Random(1234)


towers = st.sampled_from(list(TOWERS.values()))


def elems(F, nonzero=False):
    return st.integers(1 if nonzero else 0, F.order - 1)


def linpolys(F):
    return st.tuples(*[elems(F)] * F.n).map(lambda cs: LinPoly(F, cs))


@st.composite
def tower_and_polys(draw, k=1):
    F = draw(towers)
    return (F, *[draw(linpolys(F)) for _ in range(k)])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
