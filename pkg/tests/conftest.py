import pytest

from rabipackets.grid import build_grid
from rabipackets.states import assemble_state, gaussian_amplitudes
from rabipackets.units import SimParams

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def report():
    """Record one PASS/FAIL line for the terminal summary and return the verdict."""

    def _report(label, ok, detail):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")
        print(ACCEPTANCE_LINES[-1])
        return ok

    return _report


@pytest.fixture
def packet_grid():
    return build_grid(0.0, 16.0, 2048)


@pytest.fixture
def one_level_state(packet_grid):
    return assemble_state(packet_grid, gaussian_amplitudes(packet_grid, 0.0, 2.0))


@pytest.fixture
def two_level_state():
    grid = build_grid(5.0, 20.0, 2048)
    return assemble_state(
        grid,
        gaussian_amplitudes(grid, 0.0, 2.0),
        gaussian_amplitudes(grid, 10.0, 2.0, level="excited"),
        1.0,
        1.0,
    )


@pytest.fixture
def params():
    return SimParams(rabi=6.0, detuning=0.0)
