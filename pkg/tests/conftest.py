import pytest

_acceptance: list[tuple[str, bool]] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; the outcome is printed in the terminal summary."""

    def check(label: str, ok: bool) -> None:
        _acceptance.append((label, bool(ok)))
        assert ok, label

    return check


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in _acceptance:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
