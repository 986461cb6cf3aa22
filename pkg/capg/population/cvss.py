"""CVSS v3 vectors and their consistency with CAPG records."""
from decimal import Decimal, InvalidOperation
from typing import List, Optional, Tuple

from attrs import field, frozen

from ..record.enums import MachineConstraint, UserCharacteristic
from ..record.model import FIELD_MACHINES, FIELD_SOURCE, CapgRecord
from .errors import MalformedVectorError

PREFIXES = ("CVSS:3.0/", "CVSS:3.1/")
ATTACK_VECTORS = ("N", "A", "L", "P")
PRIVILEGES = ("N", "L", "H")
MAX_SCORE = Decimal("10.0")


def _score(value):
    return None if value is None else Decimal(str(value))


def _in_range(score: Decimal) -> bool:
    return score.is_finite() and Decimal(0) <= score <= MAX_SCORE


def _check_score(instance, attribute, value):
    if value is not None and not _in_range(value):
        raise ValueError(f"base score out of range: {value}")


@frozen
class CvssVector:
    version: str
    # (metric, value) pairs in vector order, AV and PR included
    metrics: Tuple[Tuple[str, str], ...] = field(converter=tuple)
    base_score: Optional[Decimal] = field(
        default=None, converter=_score, validator=_check_score
    )

    def metric(self, name: str) -> Optional[str]:
        return dict(self.metrics).get(name)

    @property
    def av(self) -> str:
        return self.metric("AV")

    @property
    def pr(self) -> str:
        return self.metric("PR")

    def __str__(self) -> str:
        body = "/".join(f"{name}:{value}" for name, value in self.metrics)
        return f"CVSS:{self.version}/{body}"


def parse_cvss(vector: str, base_score=None) -> CvssVector:
    """Parse a `CVSS:3.x/AV:../AC:../...` base vector.

    The vector is checked with the `cvss` package; metrics are kept in the
    order they are written. `base_score` is the score published with the
    vector, it is not recomputed.
    A published score must be a number between 0.0 and 10.0.
    """
    from cvss import CVSS3
    from cvss.exceptions import CVSS3Error

    if not isinstance(vector, str) or not vector.startswith(PREFIXES):
        raise MalformedVectorError(vector, "expected a CVSS:3.0 or 3.1 prefix")
    try:
        CVSS3(vector)
    except (CVSS3Error, ValueError, KeyError) as exc:
        raise MalformedVectorError(vector, str(exc)) from exc

    version, _, body = vector[len("CVSS:") :].partition("/")
    metrics = []
    seen = set()
    for item in body.split("/"):
        name, sep, value = item.partition(":")
        if not sep or not name or not value or name in seen:
            raise MalformedVectorError(vector, f"bad metric '{item}'")
        seen.add(name)
        metrics.append((name, value))

    try:
        score = _score(base_score)
    except InvalidOperation as exc:
        raise MalformedVectorError(
            vector, f"bad base score '{base_score}'"
        ) from exc
    if score is not None and not _in_range(score):
        raise MalformedVectorError(
            vector, f"base score {base_score} not in [0.0, 10.0]"
        )

    result = CvssVector(version, metrics, score)
    if result.av not in ATTACK_VECTORS:
        raise MalformedVectorError(vector, "AV is required")
    if result.pr not in PRIVILEGES:
        raise MalformedVectorError(vector, "PR is required")
    return result


@frozen
class LintWarning:
    """An advisory disagreement between a record and the CVSS vector."""

    cve: str
    metric: str
    field: str
    message: str

    def to_dict(self):
        return {
            "cve": self.cve,
            "metric": self.metric,
            "field": self.field,
            "message": self.message,
        }

    def __str__(self) -> str:
        return f"CVE-{self.cve}: {self.message}"


def lint_against_cvss(
    record: CapgRecord, vector: CvssVector
) -> List[LintWarning]:
    """Compare the AV and PR metrics with the record; never raises."""
    warnings = []
    cve = str(record.cve)
    machines = record.machines_constraints
    source = record.user_source

    def warn(metric, name, message):
        warnings.append(LintWarning(cve, metric, name, message))

    if vector.av == "L" and MachineConstraint.SAME not in machines:
        warn(
            "AV:L",
            FIELD_MACHINES,
            "AV:L (local) but machines_constraints lacks 'same'",
        )
    if vector.av == "N" and machines == (MachineConstraint.SAME,):
        warn(
            "AV:N",
            FIELD_MACHINES,
            "AV:N (network) but machines_constraints is ['same']",
        )
    if vector.pr == "N" and source != UserCharacteristic.ANY_USER:
        warn(
            "PR:N",
            FIELD_SOURCE,
            f"PR:N (none) but user_source is '{source.value}'",
        )
    if vector.pr in ("L", "H") and source == UserCharacteristic.ANY_USER:
        warn(
            f"PR:{vector.pr}",
            FIELD_SOURCE,
            f"PR:{vector.pr} but user_source is 'any-user'",
        )
    return warnings
