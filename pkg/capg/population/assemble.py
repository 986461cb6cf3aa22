import logging
from typing import Union

from ..record.cve import CveId
from ..record.model import CapgRecord
from ..record.validate import build_record, validate_record
from .cpe import derive_vuln_class
from .derive import (
    derive_machines_constraints,
    derive_user_destination,
    derive_user_source,
    derive_users_constraints,
    normalize_whoami,
)
from .errors import ManualInvestigationRequiredError, NoExploitError
from .transcript import TrialTranscript

logger = logging.getLogger(__name__)


def assemble_record(
    cve: Union[str, CveId],
    exploit_url: str,
    cpe: str,
    transcript: TrialTranscript,
) -> CapgRecord:
    """Derive every field of a CAPG record and validate the result.

    Users constraints are only derived when both the source and the
    destination identities were recorded; otherwise none is stated.
    """
    if not isinstance(cve, CveId):
        cve = CveId.parse(cve)
    if not exploit_url or not exploit_url.strip():
        raise NoExploitError(cve.label)

    vuln_class = derive_vuln_class(cpe)
    machines_constraints = derive_machines_constraints(transcript)
    user_source = derive_user_source(transcript)

    evidence = transcript.destination_evidence
    if evidence is None:
        raise ManualInvestigationRequiredError(
            "no destination evidence recorded"
        )
    user_destination = derive_user_destination(evidence)

    users_constraints = []
    if normalize_whoami(transcript.source_whoami) and normalize_whoami(
        evidence.whoami_output
    ):
        users_constraints = derive_users_constraints(
            transcript.source_whoami,
            evidence.whoami_output,
            evidence.application_user_list,
        )

    raw = CapgRecord(
        cve=cve,
        exploit=exploit_url.strip(),
        vuln_class=vuln_class,
        machines_constraints=machines_constraints,
        users_constraints=users_constraints,
        user_source=user_source,
        user_destination=user_destination,
    ).to_dict()

    report = validate_record(raw)
    if report.errors:
        exc = report.errors[0].to_exception()
        exc.report = report
        raise exc
    for warning in report.warnings:
        logger.warning("%s: %s", cve.label, warning.message)
    return build_record(raw)
