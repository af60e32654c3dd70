import pytest

# number -> {"title", "tests": [(nodeid, passed, seconds)], "total": limit or None}
CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    limit = mark.kwargs.get("limit")
    entry = CRITERIA.setdefault(number, {"title": title, "tests": [], "total": mark.kwargs.get("total")})
    if rep.when == "call":
        if rep.passed and limit is not None and call.duration > limit:
            rep.outcome = "failed"
            rep.longrepr = f"took {call.duration:.2f} s, limit is {limit} s"
        entry["tests"].append((item.nodeid, rep.passed, call.duration))
    elif rep.failed:
        entry["tests"].append((item.nodeid, False, 0.0))


@pytest.fixture
def criterion_time():
    """Seconds spent so far by the tests of a criterion."""
    return lambda number: sum(t for _, _, t in CRITERIA.get(number, {}).get("tests", []))


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(CRITERIA):
        entry = CRITERIA[number]
        tests = entry["tests"]
        total = sum(t for _, _, t in tests)
        ok = bool(tests) and all(p for _, p, _ in tests)
        if entry["total"] is not None and total > entry["total"]:
            ok = False
        slowest = max((t for _, _, t in tests), default=0.0)
        budget = f", budget {entry['total']} s" if entry["total"] is not None else ""
        tr.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {entry['title']}  "
                      f"({len(tests)} tests, total {total:.2f} s, slowest {slowest:.2f} s{budget})")
