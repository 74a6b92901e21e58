"""Echo the acceptance PASS/FAIL lines in the terminal summary."""
import test_acceptance


def pytest_terminal_summary(terminalreporter):
    if test_acceptance.LINES:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.LINES:
            terminalreporter.write_line(line)
