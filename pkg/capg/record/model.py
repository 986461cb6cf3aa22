from typing import Tuple

from attrs import field, frozen

from .cve import CveId
from .enums import (
    MachineConstraint,
    UserCharacteristic,
    UserConstraint,
    VulnClass,
)

# Listing order of the seven CAPG fields, also the serialization order.
FIELD_CVE = "CVE"
FIELD_EXPLOIT = "exploit"
FIELD_VULN_CLASS = "vuln_class"
FIELD_MACHINES = "machines_constraints"
FIELD_USERS = "users_constraints"
FIELD_SOURCE = "user_source"
FIELD_DESTINATION = "user_destination"

FIELDS = (
    FIELD_CVE,
    FIELD_EXPLOIT,
    FIELD_VULN_CLASS,
    FIELD_MACHINES,
    FIELD_USERS,
    FIELD_SOURCE,
    FIELD_DESTINATION,
)


@frozen
class CapgRecord:
    """One CVE + exploit described in the CAPG format.

    Instances are only built from validated data (see
    `capg.record.validate`), so every invariant of the format holds.
    """

    cve: CveId
    exploit: str
    vuln_class: VulnClass
    machines_constraints: Tuple[MachineConstraint, ...] = field(
        converter=tuple
    )
    users_constraints: Tuple[UserConstraint, ...] = field(converter=tuple)
    user_source: UserCharacteristic
    user_destination: UserCharacteristic

    def to_dict(self):
        return {
            FIELD_CVE: str(self.cve),
            FIELD_EXPLOIT: self.exploit,
            FIELD_VULN_CLASS: self.vuln_class.value,
            FIELD_MACHINES: [c.value for c in self.machines_constraints],
            FIELD_USERS: [c.value for c in self.users_constraints],
            FIELD_SOURCE: self.user_source.value,
            FIELD_DESTINATION: self.user_destination.value,
        }

    @property
    def sort_key(self):
        return (self.cve, self.exploit)
