import numpy as np
import pytest

from iga_plate import galerkin
from iga_plate.materials import bending_stiffness, cross_ply_layup, homogenize
from iga_plate.splines import DiscreteSpace

# filled by tests/test_acceptance.py, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def layup11():
    return cross_ply_layup(11)


@pytest.fixture(scope="session")
def layup34():
    return cross_ply_layup(34)


@pytest.fixture(scope="session")
def D11(layup11):
    return bending_stiffness(homogenize(layup11), layup11.thickness)


@pytest.fixture(scope="session")
def D34(layup34):
    return bending_stiffness(homogenize(layup34), layup34.thickness)


@pytest.fixture(scope="session")
def bench_space(layup11):
    return DiscreteSpace.uniform(6, 7, 20 * layup11.thickness)


@pytest.fixture(scope="session")
def bench_field(bench_space, D11):
    return galerkin.solve_plate(bench_space, D11, 1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
