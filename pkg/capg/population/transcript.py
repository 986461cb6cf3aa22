"""Recorded evidence of exploitation trials.

A transcript records, for one CVE and one exploit, the outcome of running
the exploit from machines and users of decreasing generality, and what the
attacker obtained on the vulnerable machine.
"""
from typing import FrozenSet, Optional, Tuple

from attrs import field, frozen
from voluptuous import Any, Invalid, Optional as Opt, Required, Schema

from ..record.codec import load_json
from ..record.enums import CapgEnum
from .errors import TranscriptError


class MachineContext(CapgEnum):
    """Machine trial contexts, least constraining first."""

    UNRELATED_MACHINE = "unrelated-machine"
    SAME_WINDOWS_DOMAIN = "same-windows-domain"
    SAME_LDAP = "same-ldap"
    ADJACENT_NETWORK = "adjacent-network"
    SAME_MACHINE = "same-machine"


class UserContext(CapgEnum):
    """User trial contexts, least constraining first."""

    UNRELATED_USER = "unrelated-user"
    DIRECTORY_USER = "directory-user"
    LOCAL_USER = "local-user"
    ROOT_OR_SYSTEM = "root-or-system"
    APPLICATION_ACCOUNT = "application-account"


@frozen
class Trial:
    context: CapgEnum
    succeeded: bool

    def to_dict(self):
        return {"context": self.context.value, "succeeded": self.succeeded}


def _optional_names(value):
    return None if value is None else frozenset(value)


@frozen
class DestinationEvidence:
    can_exec: bool
    whoami_output: str = ""
    directory_user_list: Optional[FrozenSet[str]] = field(
        default=None, converter=_optional_names
    )
    application_user_list: Optional[FrozenSet[str]] = field(
        default=None, converter=_optional_names
    )

    def to_dict(self):
        data = {"can_exec": self.can_exec, "whoami_output": self.whoami_output}
        if self.directory_user_list is not None:
            data["directory_user_list"] = sorted(self.directory_user_list)
        if self.application_user_list is not None:
            data["application_user_list"] = sorted(self.application_user_list)
        return data


def _unique_contexts(instance, attribute, trials):
    seen = set()
    for trial in trials:
        if trial.context in seen:
            raise TranscriptError(
                f"duplicate {attribute.name} context '{trial.context}'"
            )
        seen.add(trial.context)


@frozen
class TrialTranscript:
    machine_trials: Tuple[Trial, ...] = field(
        converter=tuple, validator=_unique_contexts
    )
    user_trials: Tuple[Trial, ...] = field(
        converter=tuple, validator=_unique_contexts
    )
    destination_evidence: Optional[DestinationEvidence] = None
    source_whoami: Optional[str] = None

    def to_dict(self):
        data = {
            "machine_trials": [t.to_dict() for t in self.machine_trials],
            "user_trials": [t.to_dict() for t in self.user_trials],
        }
        if self.destination_evidence is not None:
            data["destination_evidence"] = self.destination_evidence.to_dict()
        if self.source_whoami is not None:
            data["source_whoami"] = self.source_whoami
        return data


def _trials(contexts):
    return [
        Schema(
            {
                Required("context"): Any(*contexts.tokens()),
                Required("succeeded"): bool,
            }
        )
    ]


NAMES = Any(None, [str])

SCHEMA = Schema(
    {
        Required("machine_trials"): _trials(MachineContext),
        Required("user_trials"): _trials(UserContext),
        Opt("destination_evidence"): Any(
            None,
            {
                Required("can_exec"): bool,
                Opt("whoami_output"): str,
                Opt("directory_user_list"): NAMES,
                Opt("application_user_list"): NAMES,
            },
        ),
        Opt("source_whoami"): Any(None, str),
    }
)


def transcript_from_dict(
    data, source: Optional[str] = None
) -> TrialTranscript:
    try:
        data = SCHEMA(data)
    except Invalid as exc:
        raise TranscriptError(str(exc), source) from exc

    evidence = data.get("destination_evidence")
    return TrialTranscript(
        machine_trials=[
            Trial(MachineContext(t["context"]), t["succeeded"])
            for t in data["machine_trials"]
        ],
        user_trials=[
            Trial(UserContext(t["context"]), t["succeeded"])
            for t in data["user_trials"]
        ],
        destination_evidence=(
            DestinationEvidence(**evidence) if evidence is not None else None
        ),
        source_whoami=data.get("source_whoami"),
    )


def load_transcript(text, source: Optional[str] = None) -> TrialTranscript:
    """Read a transcript document.

    Raises:
        MalformedDocumentError: the document is not JSON.
        TranscriptError: the JSON is not a transcript, or a context is
            recorded twice in a ladder.
    """
    data = load_json(text, source)
    try:
        return transcript_from_dict(data, source)
    except TranscriptError as exc:
        if exc.source is None and source is not None:
            raise TranscriptError(exc.reason, source) from exc
        raise
