import pytest

from kadjoint.arrangement import boolean_arrangement, build_arrangement, build_lattice
from kadjoint.grassmann import Subspace

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def b4():
    return boolean_arrangement(4)


@pytest.fixture(scope="session")
def b4_lattice(b4):
    return build_lattice(b4)


@pytest.fixture(scope="session")
def a3():
    return build_arrangement([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])


@pytest.fixture(scope="session")
def a3_lattice(a3):
    return build_lattice(a3)


@pytest.fixture
def u_diag():
    """rowspace{(1,0,1,0), (0,1,0,1)}: two parallel pairs in B_4."""
    return Subspace.from_rows([[1, 0, 1, 0], [0, 1, 0, 1]])


@pytest.fixture
def u_coord():
    return Subspace.from_rows([[1, 0, 0, 0], [0, 1, 0, 0]])


@pytest.fixture
def u_generic():
    return Subspace.from_rows([[1, 0, 1, 2], [0, 1, 1, 1]])


@pytest.fixture
def acceptance_line():
    def record(criterion: int, passed: bool, detail: str):
        ACCEPTANCE_LINES.append(f"criterion {criterion:>2}: {'PASS' if passed else 'FAIL'}  {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split(":")[0].split()[1])):
            terminalreporter.write_line(line)
