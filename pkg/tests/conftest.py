import pytest

from ordinal_gate import run_simulation

# First ten rows of the seed-42 dataset, one tuple per theme column.
HEAD_ROWS = {
    "Ease of Use & Learnability": (4.2515, 4.0794, 4.2924, 4.5295, 4.0535, 4.0535, 4.5447, 4.3248, 3.9897, 4.2639),
    "System Efficiency & Learning Burden": (4.0623, 4.0962, 4.0696, 4.1340, 4.2329, 4.0538, 4.2151, 4.0529, 4.0469, 4.1985),
    "Perceived Complexity & Integration": (3.7852, 3.7712, 3.5077, 3.8352, 3.3881, 3.5687, 3.2782, 4.0467, 3.6600, 4.1780),
}

_acceptance_lines = []


@pytest.fixture(scope="session")
def default_samples():
    return run_simulation()


@pytest.fixture(scope="session")
def acceptance_log():
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
