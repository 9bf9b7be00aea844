"""Per-criterion reporting for the acceptance suite.

Tests tagged ``@pytest.mark.acceptance(n)`` are grouped by criterion number.
A criterion passes only if every test carrying its number passes. Tests can
attach a measurement summary through the ``record`` fixture; it is echoed next
to the verdict.
"""

from collections import defaultdict

import pytest

CRITERIA = {
    1: "BER points, n_t=8 QPSK scenario",
    2: "BER points, n_t=64 AS/8QAM vs SM/QPSK scenario",
    3: "SM/AS crossover location and ordering",
    4: "spectral-efficiency constants",
    5: "rate reduction and spectral mask compliance",
    6: "oracle equivalence",
    7: "byte-identical figure reruns",
}

_outcomes = defaultdict(list)
_details = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n): test belongs to acceptance criterion n")


@pytest.fixture
def record(request):
    """Attach a one-line measurement note to the test's criterion."""
    marker = request.node.get_closest_marker("acceptance")

    def _record(text):
        if marker is not None:
            _details[marker.args[0]].append(text)

    return _record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes[marker.args[0]].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if not results:
            verdict = "NOT RUN"
        else:
            verdict = "PASS" if all(results) else "FAIL"
        tr.write_line(f"criterion {n}: {verdict}  {title} ({len(results or [])} checks)")
        for text in _details.get(n, []):
            tr.write_line(f"    {text}")
