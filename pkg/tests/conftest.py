import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from torsemotion.dq import DualQuatPoly, QuatPoly
from torsemotion.random_motions import random_motion_polynomial
from torsemotion.ring import RPoly

settings.register_profile(
    "repo", derandomize=True, deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

fractions = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def rpolys(max_degree=3, min_size=0):
    return st.lists(fractions, min_size=min_size, max_size=max_degree + 1).map(RPoly)


def nonzero_rpolys(max_degree=3):
    return rpolys(max_degree, min_size=1).filter(lambda p: not p.is_zero())


def quat_polys(max_degree=3):
    return st.tuples(*[rpolys(max_degree)] * 4).map(lambda c: QuatPoly(*c))


def dq_polys(max_degree=3):
    return st.tuples(quat_polys(max_degree), quat_polys(max_degree)).map(lambda pd: DualQuatPoly(*pd))


def motions(max_degree=3):
    return st.tuples(st.integers(0, 2**32), st.integers(1, max_degree), st.integers(0, 2)).map(
        lambda a: random_motion_polynomial(random.Random(a[0]), a[1], a[2])
    )


_ACCEPTANCE = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion and assert it."""

    def record(number, title, checks):
        failed = [name for name, ok in checks if not ok]
        status = "PASS" if not failed else "FAIL"
        line = f"[{status}] criterion {number}: {title}"
        if failed:
            line += " (failed: " + "; ".join(failed) + ")"
        _ACCEPTANCE.append(line)
        print(line)
        assert not failed, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
