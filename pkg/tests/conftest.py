import pytest

from fracq.functions import UNIT, Interval, catalog_densities, catalog_functions

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def unit_functions():
    return catalog_functions(UNIT)


@pytest.fixture
def unit_densities():
    return catalog_densities(UNIT)


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion."""
    def report(label: str, ok: bool, detail: str = ""):
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        _ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


SCALED_INTERVALS = [Interval(0.0, 1.0), Interval(-1.0, 2.0), Interval(0.5, 0.8), Interval(1.0, 4.0)]
