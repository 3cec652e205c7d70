import pytest

from ulrichfano.cas import ideal_power, paper_ideal

# criterion number -> (description, [(nodeid, outcome, duration)])
_RESULTS: dict[int, tuple[str, list]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion the test belongs to")
    config.addinivalue_line("markers", "slow: Groebner computations taking more than a few seconds")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not (rep.when == "setup" and rep.failed):
        return
    n, text = mark.args
    _RESULTS.setdefault(n, (text, []))[1].append((item.name, rep.outcome, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_RESULTS):
        text, runs = _RESULTS[n]
        ok = all(o == "passed" for _, o, _ in runs)
        secs = sum(d for _, _, d in runs)
        status = "PASS" if ok else "FAIL"
        tr.write_line(f"criterion {n}: {status}  {text}  [{len(runs)} checks, {secs:.2f}s]")
        for name, o, _ in runs:
            if o != "passed":
                tr.write_line(f"    failed: {name}")


@pytest.fixture(scope="session")
def J():
    return paper_ideal()


@pytest.fixture(scope="session")
def J2(J):
    return ideal_power(J, 2)


@pytest.fixture(scope="session")
def J3(J):
    return ideal_power(J, 3)
