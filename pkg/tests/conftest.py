import pytest

from unihopf import census

# filled by test_acceptance: criterion number -> printed line
ACCEPTANCE_LINES = {}


@pytest.fixture(scope="session", autouse=True)
def census_cache(tmp_path_factory):
    # keep censuses out of the user's cache; shared across the session
    d = tmp_path_factory.mktemp("census")
    mp = pytest.MonkeyPatch()
    mp.setenv(census.CACHE_ENV, str(d))
    yield d
    mp.undo()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
