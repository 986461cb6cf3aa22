from typing import TYPE_CHECKING, Union

if TYPE_CHECKING:
    from os import PathLike

# paths accepted by the loaders; URLs are passed to fsspec as text
StrPath = Union[str, "PathLike[str]"]
