import pytest

from equilef.kernels import compiled_available
from equilef.library import small_groups

BACKENDS = ["python"] + (["cython"] if compiled_available() else [])


@pytest.fixture(scope="session")
def groups():
    return small_groups(12)


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
