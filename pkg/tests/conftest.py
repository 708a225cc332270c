import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from simphopf.fixtures import boundary_sphere, cyclic_polygon, hopf_fixture, join


@pytest.fixture(scope="session")
def s2():
    return boundary_sphere(2)


@pytest.fixture(scope="session")
def s3():
    return boundary_sphere(3)


@pytest.fixture(scope="session")
def join_s3():
    return join(cyclic_polygon(3), cyclic_polygon(3))


@pytest.fixture(scope="session")
def hopf():
    return hopf_fixture()


# 6-vertex real projective plane
RP2 = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
    (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3),
]


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    criterion = dict(report.user_properties).get("acceptance")
    if criterion is None:
        return
    k, text = criterion
    if report.when == "call" or report.outcome != "passed":
        ok = report.outcome == "passed" and _ACCEPTANCE.get(k, (True,))[0]
        _ACCEPTANCE[k] = (ok, text)


@pytest.fixture(autouse=True)
def _acceptance_property(request):
    marker = request.node.get_closest_marker("acceptance")
    if marker is not None:
        request.node.user_properties.append(("acceptance", marker.args))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_ACCEPTANCE):
        ok, text = _ACCEPTANCE[k]
        terminalreporter.write_line(f"ACCEPTANCE {k:2d} {'PASS' if ok else 'FAIL'}  {text}")
