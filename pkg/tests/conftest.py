"""Collects acceptance-criterion outcomes and prints them after the run."""

_LINES = []


def record_criterion(num: int, description: str, passed: bool) -> None:
    _LINES.append((num, description, passed))


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num, desc, passed in sorted(_LINES):
        word = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {num:02d} {word}  {desc}")
