"""Closed vocabularies of the CAPG format."""
from enum import Enum
from typing import Optional, Type, TypeVar

_E = TypeVar("_E", bound="CapgEnum")


class CapgEnum(str, Enum):
    """String enumeration whose value is the wire token."""

    def __str__(self) -> str:
        return self.value

    @classmethod
    def lookup(cls: Type[_E], token) -> Optional[_E]:
        if not isinstance(token, str):
            return None
        try:
            return cls(token)
        except ValueError:
            return None

    @classmethod
    def tokens(cls):
        return [member.value for member in cls]


class VulnClass(CapgEnum):
    APPLICATION = "application"
    OPERATING_SYSTEM = "operating-system"
    HARDWARE = "hardware"


class MachineConstraint(CapgEnum):
    SAME = "same"
    DIFFERENT = "different"
    UNCONSTRAINED = "unconstrained"
    SAME_WINDOWS_DOMAIN = "same-windows-domain"
    SAME_LDAP = "same-ldap"
    ADJACENT_NETWORK = "adjacent-network"


class UserCharacteristic(CapgEnum):
    APPLICATION = "application"
    MACHINE_LOCAL = "machine-local"
    DIRECTORY = "directory"
    ANY_USER = "any-user"
    SYSTEM_OR_ROOT = "system-or-root"


class UserConstraint(CapgEnum):
    SAME = "same"
    DIFFERENT = "different"
    SAME_APPLICATION = "same-application"
