"""Declarative model of the audited information system."""
from enum import Enum
from typing import Dict, FrozenSet, Iterator, Optional, Tuple

from attrs import field, frozen

from ..position import EXTERNAL, AttackPosition
from ..record.cve import CveId
from .errors import UnknownMachineError, UnknownUserError

FORMAT_VERSION = "1"


class UserScope(str, Enum):
    APPLICATION = "application"
    LOCAL = "local"
    DIRECTORY = "directory"
    PRIVILEGED = "privileged"


class DirectoryKind(str, Enum):
    WINDOWS_DOMAIN = "windows-domain"
    LDAP = "ldap"


class RequiredPrivilege(str, Enum):
    PRIVILEGED = "privileged"
    ANY_LOCAL = "any-local"


@frozen
class Machine:
    id: str
    description: Optional[str] = None


@frozen
class UserAccount:
    """A user account and where it exists.

    `ref` is the machine id for local and privileged accounts, the
    directory id for directory accounts and the application id for
    application accounts. A privileged account is the root/SYSTEM account
    of its machine.
    """

    id: str
    scope: UserScope
    ref: str
    name: Optional[str] = None

    def __attrs_post_init__(self):
        if self.name is None:
            object.__setattr__(self, "name", self.id)

    @property
    def machine(self) -> Optional[str]:
        if self.scope in (UserScope.LOCAL, UserScope.PRIVILEGED):
            return self.ref
        return None

    @property
    def directory(self) -> Optional[str]:
        return self.ref if self.scope == UserScope.DIRECTORY else None

    @property
    def application(self) -> Optional[str]:
        return self.ref if self.scope == UserScope.APPLICATION else None


@frozen
class Directory:
    id: str
    kind: DirectoryKind
    members: FrozenSet[str] = field(converter=frozenset)


@frozen
class NetworkTopology:
    networks: Dict[str, FrozenSet[str]] = field(factory=dict)
    # unordered pairs of network ids
    adjacency: FrozenSet[FrozenSet[str]] = field(
        factory=frozenset, converter=frozenset
    )

    def networks_of(self, machine: str) -> FrozenSet[str]:
        return frozenset(
            net for net, members in self.networks.items() if machine in members
        )

    def adjacent(self, first: str, second: str) -> bool:
        return frozenset((first, second)) in self.adjacency


@frozen
class ApplicationInstance:
    id: str
    host: str
    product: Optional[str] = None
    run_as: Optional[str] = None
    app_accounts: FrozenSet[str] = field(
        factory=frozenset, converter=frozenset
    )


@frozen
class VulnInstance:
    """A CVE present on an application instance or directly on a machine.

    `destination_user` declares the account reached through this instance
    when it cannot be derived (OS/hardware `machine-local` destinations,
    `application` and `directory` destinations).
    """

    cve: CveId
    application: Optional[str] = None
    machine: Optional[str] = None
    destination_user: Optional[str] = None

    @property
    def is_application(self) -> bool:
        return self.application is not None

    @property
    def sort_key(self):
        return (
            self.cve,
            self.application or "",
            self.machine or "",
            self.destination_user or "",
        )

    def __str__(self) -> str:
        where = self.application or self.machine
        return f"{self.cve.label}@{where}"


@frozen
class CredentialEntry:
    holder: str
    credential_for: str
    required_privilege: RequiredPrivilege

    @property
    def sort_key(self):
        return (
            self.holder,
            self.credential_for,
            self.required_privilege.value,
        )

    def __str__(self) -> str:
        return (
            f"credentials of '{self.credential_for}' on '{self.holder}' "
            f"({self.required_privilege.value})"
        )


@frozen
class InfraModel:
    machines: Dict[str, Machine] = field(factory=dict)
    directories: Dict[str, Directory] = field(factory=dict)
    topology: NetworkTopology = field(factory=NetworkTopology)
    applications: Dict[str, ApplicationInstance] = field(factory=dict)
    users: Dict[str, UserAccount] = field(factory=dict)
    vulns: Tuple[VulnInstance, ...] = field(default=(), converter=tuple)
    credentials: Tuple[CredentialEntry, ...] = field(
        default=(), converter=tuple
    )
    entry_positions: FrozenSet[AttackPosition] = field(
        default=frozenset([EXTERNAL]), converter=frozenset
    )

    def machine(self, machine_id: str) -> Machine:
        try:
            return self.machines[machine_id]
        except KeyError:
            raise UnknownMachineError(machine_id) from None

    def user(self, user_id: str) -> UserAccount:
        try:
            return self.users[user_id]
        except KeyError:
            raise UnknownUserError(user_id) from None

    def privileged_account(self, machine_id: str) -> Optional[UserAccount]:
        for account in self.users.values():
            if (
                account.scope == UserScope.PRIVILEGED
                and account.ref == machine_id
            ):
                return account
        return None

    def host_of(self, vuln: VulnInstance) -> str:
        if vuln.application is not None:
            return self.applications[vuln.application].host
        assert vuln.machine is not None
        return vuln.machine

    def vulns_of(self, cve: CveId) -> Iterator[VulnInstance]:
        return (vuln for vuln in self.vulns if vuln.cve == cve)

    def position(self, machine_id: str, user_id: str) -> AttackPosition:
        return AttackPosition(machine_id, user_id, self.user(user_id).name)
