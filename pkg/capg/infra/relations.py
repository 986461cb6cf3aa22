"""Facts that hold between machines and about users in a model.

These are the predicates the CAPG constraint vocabulary is evaluated
against.
"""
from typing import FrozenSet

from ..record.enums import MachineConstraint, UserCharacteristic
from .model import DirectoryKind, InfraModel, UserScope


def _share_directory(model: InfraModel, kind, first: str, second: str) -> bool:
    return any(
        d.kind == kind and first in d.members and second in d.members
        for d in model.directories.values()
    )


def _reachable_networks(model: InfraModel, first: str, second: str) -> bool:
    # a shared network counts as adjacency
    topology = model.topology
    nets_a = topology.networks_of(first)
    nets_b = topology.networks_of(second)
    if nets_a & nets_b:
        return True
    return any(topology.adjacent(a, b) for a in nets_a for b in nets_b)


def machine_relation(
    m_src: str, m_dst: str, model: InfraModel
) -> FrozenSet[MachineConstraint]:
    """Machine constraints satisfied by the pair (m_src, m_dst).

    Raises:
        UnknownMachineError: either machine is not in the model.
    """
    model.machine(m_src)
    model.machine(m_dst)

    facts = {MachineConstraint.UNCONSTRAINED}
    facts.add(
        MachineConstraint.SAME
        if m_src == m_dst
        else MachineConstraint.DIFFERENT
    )
    if _share_directory(model, DirectoryKind.WINDOWS_DOMAIN, m_src, m_dst):
        facts.add(MachineConstraint.SAME_WINDOWS_DOMAIN)
    if _share_directory(model, DirectoryKind.LDAP, m_src, m_dst):
        facts.add(MachineConstraint.SAME_LDAP)
    if _reachable_networks(model, m_src, m_dst):
        facts.add(MachineConstraint.ADJACENT_NETWORK)
    return frozenset(facts)


def user_characteristics(
    user_id: str, relative_to_machine: str, model: InfraModel
) -> FrozenSet[UserCharacteristic]:
    """Characteristics of an account seen from a machine.

    Raises:
        UnknownUserError, UnknownMachineError
    """
    user = model.user(user_id)
    model.machine(relative_to_machine)

    facts = {UserCharacteristic.ANY_USER}
    if user.machine == relative_to_machine:
        facts.add(UserCharacteristic.MACHINE_LOCAL)
        if user.scope == UserScope.PRIVILEGED:
            facts.add(UserCharacteristic.SYSTEM_OR_ROOT)
    if user.scope == UserScope.DIRECTORY:
        directory = model.directories[user.ref]
        if relative_to_machine in directory.members:
            facts.add(UserCharacteristic.DIRECTORY)
    if user.scope == UserScope.APPLICATION:
        facts.add(UserCharacteristic.APPLICATION)
    return frozenset(facts)
