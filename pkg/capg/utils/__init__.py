"""Helpers for other modules."""

import os
import re
from typing import TYPE_CHECKING

from ..exceptions import FileReadError

if TYPE_CHECKING:
    from ..types import StrPath


def env2bool(var, undefined=False):
    """
    undefined: return value if env var is unset
    """
    var = os.getenv(var, None)
    if var is None:
        return undefined
    return bool(re.search("1|y|yes|true", var, flags=re.I))


def read_text(path: "StrPath") -> str:
    """Read a whole UTF-8 document through fsspec."""
    import fsspec

    path = os.fspath(path)
    try:
        with fsspec.open(path, "r", encoding="utf-8") as fobj:
            return fobj.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise FileReadError(path, exc) from exc


def write_text(path: "StrPath", text: str) -> None:
    import fsspec

    with fsspec.open(os.fspath(path), "w", encoding="utf-8") as fobj:
        fobj.write(text)
