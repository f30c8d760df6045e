import pytest

from scenes import PINNED, scene_of

_SUMMARY_KEY = "criterion"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        rep.user_properties.append((_SUMMARY_KEY, marker.args))


def pytest_terminal_summary(terminalreporter):
    status = {}
    for reports in terminalreporter.stats.values():
        for rep in reports:
            for key, args in getattr(rep, "user_properties", ()):
                if key != _SUMMARY_KEY:
                    continue
                n, title = args
                ok = status.get(n, (title, True))[1] and not rep.failed
                if rep.when == "call" or rep.failed:
                    status[n] = (title, ok)
    if not status:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(status):
        title, ok = status[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture
def pinned():
    return scene_of(PINNED)
