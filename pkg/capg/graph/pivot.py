from typing import List, Tuple

from ..infra.model import CredentialEntry, InfraModel, RequiredPrivilege
from ..infra.relations import user_characteristics
from ..position import AttackPosition
from ..record.enums import UserCharacteristic


def _satisfies(required: RequiredPrivilege, characteristics) -> bool:
    if required == RequiredPrivilege.PRIVILEGED:
        return UserCharacteristic.SYSTEM_OR_ROOT in characteristics
    return UserCharacteristic.MACHINE_LOCAL in characteristics


def pivot_credential_discovery(
    position: AttackPosition, model: InfraModel
) -> List[Tuple[AttackPosition, CredentialEntry]]:
    """Positions reached by reusing credentials stored on the held machine.

    The controlled user changes, the machine does not. The external
    position holds no machine and discovers nothing.
    """
    if position.is_external:
        return []

    characteristics = user_characteristics(
        position.user, position.machine, model
    )
    found = set()
    for entry in model.credentials:
        if entry.holder != position.machine:
            continue
        if not _satisfies(entry.required_privilege, characteristics):
            continue
        destination = model.position(position.machine, entry.credential_for)
        if destination != position:
            found.add((destination, entry))
    return sorted(found, key=lambda item: (item[0].sort_key, item[1].sort_key))
