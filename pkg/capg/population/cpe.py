"""Vulnerability class from the `part` of a CPE 2.3 name."""
from ..record.enums import VulnClass
from .errors import MalformedCpeError, UnknownPartError

CPE23_PREFIX = "cpe:2.3:"

PARTS = {
    "a": VulnClass.APPLICATION,
    "o": VulnClass.OPERATING_SYSTEM,
    "h": VulnClass.HARDWARE,
}


def cpe_part(cpe: str) -> str:
    if not isinstance(cpe, str) or not cpe.startswith(CPE23_PREFIX):
        raise MalformedCpeError(cpe)
    components = cpe[len(CPE23_PREFIX) :].split(":")
    # part plus at least the vendor
    if len(components) < 2 or not components[0]:
        raise MalformedCpeError(cpe)
    return components[0]


def derive_vuln_class(cpe: str) -> VulnClass:
    part = cpe_part(cpe)
    try:
        return PARTS[part]
    except KeyError:
        raise UnknownPartError(part, cpe) from None
