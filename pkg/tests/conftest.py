import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_criteria = {}


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    n = mark.args[0]
    ok, secs = _criteria.get(n, (True, 0.0))
    _criteria[n] = (ok and call.excinfo is None, secs + call.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        ok, secs = _criteria[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'} ({secs:.2f} s)")
