import pytest
from hypothesis import strategies as st

from lynkit.core import OrderedAlphabet

ABCD = OrderedAlphabet(b"abcd")
AB = OrderedAlphabet(b"ab")
ABC = OrderedAlphabet(b"abc")


def words_over(symbols: bytes, min_size: int = 1, max_size: int = 12):
    return st.lists(st.sampled_from(list(symbols)), min_size=min_size, max_size=max_size).map(bytes)


@pytest.fixture
def abcd():
    return ABCD


_CRITERIA: dict[str, list[bool]] = {}
_TITLES: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        ident, title = marker.args
        _TITLES[ident] = title
        _CRITERIA.setdefault(ident, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for ident in sorted(_CRITERIA):
        results = _CRITERIA[ident]
        verdict = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(
            f"[{verdict}] criterion {ident}: {_TITLES[ident]} "
            f"({sum(results)}/{len(results)} checks passed)"
        )
