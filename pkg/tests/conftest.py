import sys
from pathlib import Path

# the test modules import each other's helpers (oracles) directly
sys.path.insert(0, str(Path(__file__).parent))

CRITERION_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERION_LINES:
            terminalreporter.write_line(line)
