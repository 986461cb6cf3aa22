"""Derivation of CAPG fields from trial transcripts.

Each ladder is tried from the least to the most constraining context; the
first successful trial decides the field.
"""
import logging
from typing import Iterable, List, Optional, Sequence, Type

from ..record.enums import (
    CapgEnum,
    MachineConstraint,
    UserCharacteristic,
    UserConstraint,
)
from .errors import (
    ManualInvestigationRequiredError,
    MissingIdentityError,
    NoSuccessfulTrialError,
    OutOfOrderTrialsError,
)
from .transcript import (
    DestinationEvidence,
    MachineContext,
    Trial,
    TrialTranscript,
    UserContext,
)

logger = logging.getLogger(__name__)

MACHINE_LADDER = {
    MachineContext.UNRELATED_MACHINE: (MachineConstraint.UNCONSTRAINED,),
    MachineContext.SAME_WINDOWS_DOMAIN: (
        MachineConstraint.DIFFERENT,
        MachineConstraint.SAME_WINDOWS_DOMAIN,
    ),
    MachineContext.SAME_LDAP: (
        MachineConstraint.DIFFERENT,
        MachineConstraint.SAME_LDAP,
    ),
    MachineContext.ADJACENT_NETWORK: (
        MachineConstraint.DIFFERENT,
        MachineConstraint.ADJACENT_NETWORK,
    ),
    MachineContext.SAME_MACHINE: (MachineConstraint.SAME,),
}

USER_LADDER = {
    UserContext.UNRELATED_USER: UserCharacteristic.ANY_USER,
    UserContext.DIRECTORY_USER: UserCharacteristic.DIRECTORY,
    UserContext.LOCAL_USER: UserCharacteristic.MACHINE_LOCAL,
    UserContext.ROOT_OR_SYSTEM: UserCharacteristic.SYSTEM_OR_ROOT,
    UserContext.APPLICATION_ACCOUNT: UserCharacteristic.APPLICATION,
}

PRIVILEGED_NAMES = frozenset(["root", "system"])


def first_success(
    trials: Sequence[Trial], ladder: Type[CapgEnum], name: str
) -> CapgEnum:
    order = list(ladder)
    previous = None
    for trial in trials:
        if previous is not None and order.index(trial.context) <= order.index(
            previous
        ):
            raise OutOfOrderTrialsError(name, trial.context, previous)
        previous = trial.context

    for trial in trials:
        if trial.succeeded:
            return trial.context
    raise NoSuccessfulTrialError(name)


def derive_machines_constraints(
    transcript: TrialTranscript,
) -> List[MachineConstraint]:
    context = first_success(
        transcript.machine_trials, MachineContext, "machine"
    )
    return list(MACHINE_LADDER[context])


def derive_user_source(transcript: TrialTranscript) -> UserCharacteristic:
    return USER_LADDER[
        first_success(transcript.user_trials, UserContext, "user")
    ]


def normalize_whoami(output: Optional[str]) -> str:
    """`whoami` output reduced to the account name.

    `DOMAIN\\name` gives `name`; root and SYSTEM are lowercased so that
    every spelling compares equal.
    """
    name = (output or "").strip()
    name = name.rsplit("\\", 1)[-1].strip()
    if name.lower() in PRIVILEGED_NAMES:
        return name.lower()
    return name


def is_privileged(name: str) -> bool:
    return normalize_whoami(name) in PRIVILEGED_NAMES


def _names(names: Optional[Iterable[str]]):
    return {normalize_whoami(name) for name in names or ()}


def derive_user_destination(
    evidence: DestinationEvidence,
) -> UserCharacteristic:
    """Characteristic of the account obtained on the vulnerable machine.

    Without command execution, `whoami_output` is the reached account as
    identified by the analyst.
    """
    name = normalize_whoami(evidence.whoami_output)
    if evidence.can_exec:
        if not name:
            raise ManualInvestigationRequiredError(
                "commands execute but whoami returned nothing"
            )
        if name in PRIVILEGED_NAMES:
            return UserCharacteristic.SYSTEM_OR_ROOT
        if name in _names(evidence.directory_user_list):
            return UserCharacteristic.DIRECTORY
        return UserCharacteristic.MACHINE_LOCAL

    if name and name in _names(evidence.application_user_list):
        return UserCharacteristic.APPLICATION
    raise ManualInvestigationRequiredError(
        "the exploit does not execute commands and the reached account "
        "is not a known application account"
    )


def derive_users_constraints(
    source_whoami: Optional[str],
    destination_whoami: Optional[str],
    app_users: Optional[Iterable[str]] = None,
) -> List[UserConstraint]:
    source = normalize_whoami(source_whoami)
    destination = normalize_whoami(destination_whoami)
    if not source:
        raise MissingIdentityError("source")
    if not destination:
        raise MissingIdentityError("destination")

    same = source == destination
    constraints = [UserConstraint.SAME if same else UserConstraint.DIFFERENT]
    accounts = _names(app_users)
    if source in accounts and destination in accounts:
        constraints.append(UserConstraint.SAME_APPLICATION)
    return constraints
