from fractions import Fraction as F

import pytest

from bigjacobi.dunkl import FamilyParams

# the standard rational grid: two sets on 0 < c < 1, one on c > 1
GRID = [
    (F(0), F(0), F(1, 2)),
    (F(1, 2), F(3, 2), F(1, 4)),
    (F(2), F(1), F(3)),
]


def grid_params():
    return [FamilyParams(*t) for t in GRID]


@pytest.fixture(params=GRID, ids=lambda t: "a={},b={},c={}".format(*t))
def params(request):
    return FamilyParams(*request.param)


@pytest.fixture
def base():
    return FamilyParams(F(0), F(0), F(1, 2))


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
