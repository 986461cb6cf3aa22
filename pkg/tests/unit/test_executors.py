import threading

import pytest

from capg.exceptions import InvalidArgumentError
from capg.executors import ThreadPoolExecutor


@pytest.mark.parametrize("jobs", [1, 3])
def test_imap_unordered_pairs_items(jobs):
    with ThreadPoolExecutor(max_workers=jobs) as executor:
        results = dict(executor.imap_unordered(lambda x: x * x, range(50)))
    assert results == {x: x * x for x in range(50)}


def test_single_job_runs_inline():
    main = threading.get_ident()
    with ThreadPoolExecutor(max_workers=1) as executor:
        idents = [
            ident
            for _, ident in executor.imap_unordered(
                lambda _: threading.get_ident(), "abc"
            )
        ]
    assert idents == [main] * 3


def test_default_jobs():
    with ThreadPoolExecutor() as executor:
        assert executor.max_workers >= 1


@pytest.mark.parametrize("jobs", [0, -2])
def test_invalid_jobs(jobs):
    with pytest.raises(InvalidArgumentError) as exc_info:
        ThreadPoolExecutor(max_workers=jobs)
    assert exc_info.value.msg == (
        f"the number of jobs must be positive, got {jobs}"
    )


def test_errors_propagate():
    def fail(item):
        if item == 3:
            raise ValueError(item)
        return item

    with pytest.raises(ValueError):
        with ThreadPoolExecutor(max_workers=2, cancel_on_error=True) as pool:
            list(pool.imap_unordered(fail, range(10)))
