"""Thread pool expanding the attack positions of one build round."""
import logging
import os
from concurrent import futures
from itertools import islice
from typing import (
    Callable,
    Dict,
    Iterable,
    Iterator,
    Optional,
    Tuple,
    TypeVar,
)

from .exceptions import InvalidArgumentError

logger = logging.getLogger(__name__)

_T = TypeVar("_T")
_R = TypeVar("_R")


def default_jobs() -> int:
    return min(32, (os.cpu_count() or 1) + 4)


class ThreadPoolExecutor(futures.ThreadPoolExecutor):
    _max_workers: int

    def __init__(
        self,
        max_workers: Optional[int] = None,
        cancel_on_error: bool = False,
        **kwargs,
    ):
        if max_workers is not None and max_workers < 1:
            raise InvalidArgumentError(
                f"the number of jobs must be positive, got {max_workers}"
            )
        kwargs.setdefault("thread_name_prefix", "capg")
        super().__init__(max_workers=max_workers or default_jobs(), **kwargs)
        self._cancel_on_error = cancel_on_error

    @property
    def max_workers(self) -> int:
        return self._max_workers

    def imap_unordered(
        self, fn: Callable[[_T], _R], items: Iterable[_T]
    ) -> Iterator[Tuple[_T, _R]]:
        """Yield `(item, fn(item))` pairs as the calls complete.

        At most twice `max_workers` calls are pending at once. A single
        worker runs the calls inline, in input order.
        """
        it = iter(items)
        if self.max_workers == 1:
            for item in it:
                yield item, fn(item)
            return

        def submit(n: int) -> Dict[futures.Future, _T]:
            return {self.submit(fn, item): item for item in islice(it, n)}

        pending = submit(self.max_workers * 2)
        while pending:
            done, _ = futures.wait(
                pending, return_when=futures.FIRST_COMPLETED
            )
            for fut in done:
                yield pending.pop(fut), fut.result()
            pending.update(submit(len(done)))

    def __exit__(self, exc_type, exc_val, exc_tb):
        cancel = self._cancel_on_error and exc_val is not None
        if cancel:
            logger.debug("cancelling pending expansions after %r", exc_val)
        self.shutdown(wait=True, cancel_futures=cancel)
        return False
