"""Test-session plumbing: collects the acceptance-criterion result lines
and prints them in the terminal summary so every run shows one
PASS/FAIL line per criterion."""

acceptance_lines = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(acceptance_lines):
        terminalreporter.write_line(acceptance_lines[num])
