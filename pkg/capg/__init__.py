"""
CAPG
----
Model CVE exploits in the CAPG format and chain them into attack positions
graphs.
"""
from . import logger
from .version import __version__  # noqa: F401

logger.setup()
