import pytest

from fano3.eliminate import run_full_pipeline
from fano3.search import run_search


SINGLE_THREAD_SECONDS = {}


@pytest.fixture(scope="session")
def candidates_greater():
    import time

    start = time.monotonic()
    result = run_search(66, "greater", 1)
    SINGLE_THREAD_SECONDS["greater"] = time.monotonic() - start
    return result


@pytest.fixture(scope="session")
def candidates_equal():
    return run_search(66, "equal", 1)


@pytest.fixture(scope="session")
def pipeline_report():
    return run_full_pipeline(workers=1)
