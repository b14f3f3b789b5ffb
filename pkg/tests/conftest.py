import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from partpoly.rootsys import RSType
from partpoly.weyl import ParabolicK

settings.register_profile(
    "partpoly", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("partpoly")

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def golden():
    with open(DATA / "golden.json") as fh:
        return json.load(fh)


def rstypes(max_a=5, max_bcd=3):
    pairs = [("A", n) for n in range(2, max_a + 1)]
    pairs += [(f, n) for f in "BCD" for n in range(2, max_bcd + 1)]
    return st.sampled_from(pairs).map(lambda p: RSType(*p))


@st.composite
def parabolics(draw, max_a=5, max_bcd=3):
    rt = draw(rstypes(max_a, max_bcd))
    K = draw(st.sets(st.integers(1, rt.rank)))
    return ParabolicK(rt, tuple(K))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
