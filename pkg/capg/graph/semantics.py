"""When a CAPG record applies, and where it leads.

Given a record, one of its vulnerability instances and a source attack
position, `applicable` decides whether the exploitation is possible and
`resolve_destination` computes the attack position it yields.
"""
from typing import List, Optional, Tuple

from attrs import field, frozen

from ..exceptions import InvalidArgumentError
from ..infra.model import InfraModel, VulnInstance
from ..infra.relations import machine_relation, user_characteristics
from ..position import AttackPosition
from ..record.cve import CveId
from ..record.enums import (
    MachineConstraint,
    UserCharacteristic,
    UserConstraint,
    VulnClass,
)
from ..record.model import CapgRecord
from .errors import (
    ConstraintViolatedError,
    UnresolvedDestinationError,
    VulnClassMismatchError,
)


def fact(name: str, value) -> str:
    return f"{name}:{getattr(value, 'value', value)}"


@frozen
class EdgeCandidate:
    source: AttackPosition
    destination: AttackPosition
    cve: CveId
    exploit: str
    vuln_location: str
    rationale: Tuple[str, ...] = field(converter=tuple)


@frozen
class Decision:
    ok: bool
    rationale: Tuple[str, ...] = field(default=(), converter=tuple)
    failed: Optional[str] = None
    destination: Optional[AttackPosition] = None

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def no(cls, failed: str) -> "Decision":
        return cls(False, failed=failed)


def check_vuln_class(record: CapgRecord, vuln: VulnInstance) -> None:
    wants_app = record.vuln_class == VulnClass.APPLICATION
    if wants_app != vuln.is_application:
        raise VulnClassMismatchError(record, vuln)


def _app_accounts(vuln: VulnInstance, model: InfraModel):
    if not vuln.is_application:
        return frozenset()
    return model.applications[vuln.application].app_accounts


def resolve_destination(
    record: CapgRecord,
    vuln: VulnInstance,
    source: AttackPosition,
    model: InfraModel,
) -> AttackPosition:
    """Attack position controlled after exploiting `vuln` from `source`.

    Raises:
        UnresolvedDestinationError: the model does not declare the account
            `user_destination` designates.
        ConstraintViolatedError: `same` is required but the destination
            account is not the source account.
    """
    host = model.host_of(vuln)
    kind = record.user_destination
    user_id = None

    if kind == UserCharacteristic.SYSTEM_OR_ROOT:
        account = model.privileged_account(host)
        if account is None:
            raise UnresolvedDestinationError(
                record, vuln, f"no privileged account declared on '{host}'"
            )
        user_id = account.id
    elif kind == UserCharacteristic.MACHINE_LOCAL and vuln.is_application:
        user_id = (
            model.applications[vuln.application].run_as
            or vuln.destination_user
        )
        if user_id is None:
            raise UnresolvedDestinationError(
                record,
                vuln,
                f"application '{vuln.application}' declares no run_as account",
            )
    else:
        user_id = vuln.destination_user
        if user_id is None:
            raise UnresolvedDestinationError(
                record, vuln, "the instance declares no destination_user"
            )

    destination = model.position(host, user_id)
    if (
        UserConstraint.SAME in record.users_constraints
        and destination.user != source.user
    ):
        raise ConstraintViolatedError(UserConstraint.SAME, source, destination)
    return destination


def _machine_facts(source: AttackPosition, host: str, model: InfraModel):
    if source.is_external:
        return frozenset([MachineConstraint.UNCONSTRAINED])
    return machine_relation(source.machine, host, model)


def _user_source_holds(
    record: CapgRecord,
    vuln: VulnInstance,
    source: AttackPosition,
    host: str,
    model: InfraModel,
) -> bool:
    wanted = record.user_source
    if wanted == UserCharacteristic.ANY_USER:
        return True
    if source.is_external:
        return False
    if wanted == UserCharacteristic.APPLICATION:
        return source.user in _app_accounts(vuln, model)
    # directory membership is judged on the vulnerable machine
    machine = source.machine
    if wanted == UserCharacteristic.DIRECTORY:
        machine = host
    return wanted in user_characteristics(source.user, machine, model)


def _users_constraint_holds(
    constraint: UserConstraint,
    vuln: VulnInstance,
    source: AttackPosition,
    destination: AttackPosition,
    model: InfraModel,
) -> bool:
    if constraint == UserConstraint.SAME:
        return not source.is_external and source.user == destination.user
    if constraint == UserConstraint.DIFFERENT:
        return source.is_external or source.user != destination.user
    accounts = _app_accounts(vuln, model)
    return source.user in accounts and destination.user in accounts


def applicable(
    record: CapgRecord,
    vuln: VulnInstance,
    source: AttackPosition,
    model: InfraModel,
) -> Decision:
    """Decide whether `record` exploits `vuln` from `source`.

    The three constraint families are conjunctions: every machine
    constraint must be a fact between the source machine and the vulnerable
    machine, the source user must have the `user_source` characteristic,
    and every users constraint must hold between source and destination
    users.

    Raises:
        VulnClassMismatchError: record class disagrees with the location.
        UnresolvedDestinationError: see `resolve_destination`.
    """
    if vuln.cve != record.cve:
        raise InvalidArgumentError(
            f"{vuln} is not an instance of {record.cve.label}"
        )
    check_vuln_class(record, vuln)

    host = model.host_of(vuln)
    rationale: List[str] = []

    facts = _machine_facts(source, host, model)
    for constraint in record.machines_constraints:
        name = fact("machines_constraints", constraint)
        if constraint not in facts:
            return Decision.no(name)
        rationale.append(name)

    name = fact("user_source", record.user_source)
    if not _user_source_holds(record, vuln, source, host, model):
        return Decision.no(name)
    rationale.append(name)

    try:
        destination = resolve_destination(record, vuln, source, model)
    except ConstraintViolatedError as exc:
        return Decision.no(fact("users_constraints", exc.constraint))

    for constraint in record.users_constraints:
        name = fact("users_constraints", constraint)
        if not _users_constraint_holds(
            constraint, vuln, source, destination, model
        ):
            return Decision.no(name)
        rationale.append(name)

    return Decision(True, rationale=rationale, destination=destination)


def candidate(
    record: CapgRecord,
    vuln: VulnInstance,
    source: AttackPosition,
    model: InfraModel,
) -> Optional[EdgeCandidate]:
    decision = applicable(record, vuln, source, model)
    if not decision:
        return None
    assert decision.destination is not None
    return EdgeCandidate(
        source=source,
        destination=decision.destination,
        cve=record.cve,
        exploit=record.exploit,
        vuln_location=model.host_of(vuln),
        rationale=decision.rationale,
    )
