import pytest

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record(criterion: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[criterion] = (ok, detail)
    print(f"criterion {criterion}: {'PASS' if ok else 'FAIL'} {detail}")


@pytest.fixture(scope="session", autouse=True)
def census_cache(tmp_path_factory):
    """Share census results between tests through the on-disk cache."""
    mp = pytest.MonkeyPatch()
    path = tmp_path_factory.mktemp("census-cache")
    mp.setenv("PRIMEXP_CACHE_DIR", str(path))
    yield path
    mp.undo()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
