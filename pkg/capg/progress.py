"""Progress bar of the graph builds."""
import logging
import sys
from threading import RLock

from tqdm import tqdm

from .env import CAPG_IGNORE_ISATTY
from .utils import env2bool

logger = logging.getLogger(__name__)
tqdm.set_lock(RLock())


class Tqdm(tqdm):
    """Counts expanded positions, round after round.

    The bar is only drawn on a TTY and when the `capg` loggers would
    show `level` messages.
    """

    BAR_FMT_DEFAULT = (
        "{desc}|{bar:10}|{postfix[info]}{n_fmt}/{total_fmt}"
        " [{elapsed}, {rate_fmt:>11}]"
    )
    BAR_FMT_NOTOTAL = "{desc}{bar:b}|{postfix[info]}{n_fmt} [{elapsed}]"

    def __init__(
        self,
        iterable=None,
        disable=None,
        level=logging.ERROR,
        desc=None,
        leave=False,
        file=None,
        total=None,
        unit="position",
        **kwargs,
    ):
        if file is None:
            file = sys.stderr
        if not disable:
            disable = logger.getEffectiveLevel() > level
        if (
            not disable
            and not env2bool(CAPG_IGNORE_ISATTY)
            and hasattr(file, "isatty")
        ):
            disable = not file.isatty()
        super().__init__(
            iterable=iterable,
            disable=disable,
            leave=leave,
            desc=desc,
            bar_format="!",
            lock_args=(False,),
            total=total,
            file=file,
            unit=unit,
            **kwargs,
        )
        self.postfix = {"info": ""}
        self.bar_format = (
            self.BAR_FMT_DEFAULT if self.total else self.BAR_FMT_NOTOTAL
        )
        self.refresh()

    def start_round(self, number: int, positions: int) -> None:
        """Grow the total by the `positions` a new round will expand."""
        self.total = (self.total or 0) + positions
        self.bar_format = self.BAR_FMT_DEFAULT
        self.postfix["info"] = f" round {number} |"
        self.refresh()

    def close(self):
        self.postfix["info"] = ""
        self.bar_format = self.bar_format.replace("|{bar:10}|", " ")
        super().close()
