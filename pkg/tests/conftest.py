import sys
import warnings
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from osculant.catalog import catalog_get, catalog_names  # noqa: E402
from osculant.errors import NotImmersionWarning  # noqa: E402
from osculant.jets import Parametrization  # noqa: E402
from osculant.parser import parse_expression  # noqa: E402

settings.register_profile("ci", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ci")

CATALOG = catalog_names()


def variety(name):
    return catalog_get(name).parametrization


def from_strings(name, k, coords):
    return Parametrization.from_polys(name, k, [parse_expression(c, k) for c in coords])


@pytest.fixture
def harmonic_surface():
    # degree-3 harmonic patch: its raw third form is not closed under partials
    return from_strings("harmonic", 2, ["u1", "u2", "u1^2 - u2^2", "u1*u2",
                                        "u1^3 - 3*u1*u2^2", "3*u1^2*u2 - u2^3"])


@pytest.fixture(autouse=True)
def _quiet_immersion():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NotImmersionWarning)
        yield


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
