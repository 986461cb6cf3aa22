"""Invariant checks of CAPG records.

Violations are data: `validate_record` returns every one of them and never
raises. `build_record` turns a clean field map into a `CapgRecord`.
"""
from typing import Any, List, Mapping, Optional, Tuple
from urllib.parse import urlparse

from attrs import field, frozen

from .cve import CveId
from .enums import (
    CapgEnum,
    MachineConstraint,
    UserCharacteristic,
    UserConstraint,
    VulnClass,
)
from .errors import (
    CapgRecordError,
    ConstraintContradictionError,
    IllegalValueError,
    MissingFieldError,
    UnknownFieldError,
)
from .model import (
    FIELD_CVE,
    FIELD_DESTINATION,
    FIELD_EXPLOIT,
    FIELD_MACHINES,
    FIELD_SOURCE,
    FIELD_USERS,
    FIELD_VULN_CLASS,
    FIELDS,
    CapgRecord,
)

MISSING_FIELD = "MissingField"
UNKNOWN_FIELD = "UnknownField"
ILLEGAL_VALUE = "IllegalValue"
CONSTRAINT_CONTRADICTION = "ConstraintContradiction"
DEGENERATE_RECORD = "DegenerateRecord"


@frozen
class Violation:
    code: str
    field: str
    message: str
    token: Any = None
    pair: Optional[Tuple[str, str]] = None

    def to_exception(self) -> CapgRecordError:
        if self.code == MISSING_FIELD:
            return MissingFieldError(self.field)
        if self.code == UNKNOWN_FIELD:
            return UnknownFieldError(self.field)
        if self.code == CONSTRAINT_CONTRADICTION:
            assert self.pair
            return ConstraintContradictionError(self.field, *self.pair)
        return IllegalValueError(self.field, self.token)

    def to_dict(self):
        return {
            "code": self.code,
            "field": self.field,
            "message": self.message,
        }


@frozen
class ValidationReport:
    errors: Tuple[Violation, ...] = field(default=(), converter=tuple)
    warnings: Tuple[Violation, ...] = field(default=(), converter=tuple)

    @property
    def is_empty(self) -> bool:
        return not self.errors and not self.warnings

    @property
    def has_errors(self) -> bool:
        return bool(self.errors)

    def to_dict(self):
        return {
            "errors": [v.to_dict() for v in self.errors],
            "warnings": [v.to_dict() for v in self.warnings],
        }


def _illegal(name, token) -> Violation:
    return Violation(
        ILLEGAL_VALUE,
        name,
        f"illegal value {token!r} for field '{name}'",
        token=token,
    )


def _contradiction(name, first, second) -> Violation:
    return Violation(
        CONSTRAINT_CONTRADICTION,
        name,
        f"'{first}' and '{second}' cannot be combined in '{name}'",
        pair=(first, second),
    )


def _check_enum(name, value, enum_cls) -> List[Violation]:
    if enum_cls.lookup(value) is None:
        return [_illegal(name, value)]
    return []


def _check_cve(value) -> List[Violation]:
    try:
        CveId.parse(value)
    except IllegalValueError:
        return [_illegal(FIELD_CVE, value)]
    return []


def _check_exploit(value) -> List[Violation]:
    if not isinstance(value, str) or not value.strip():
        return [_illegal(FIELD_EXPLOIT, value)]
    try:
        parsed = urlparse(value)
    except ValueError:
        return [_illegal(FIELD_EXPLOIT, value)]
    if not parsed.scheme or not parsed.netloc:
        return [_illegal(FIELD_EXPLOIT, value)]
    return []


def _check_tokens(name, value, enum_cls) -> Tuple[List[Violation], list]:
    """Shape, vocabulary and duplicate checks shared by both lists.

    Returns the violations and the distinct legal members in list order.
    """
    if not isinstance(value, list):
        return [_illegal(name, value)], []

    violations: List[Violation] = []
    seen: List[CapgEnum] = []
    duplicated = set()
    for token in value:
        member = enum_cls.lookup(token)
        if member is None:
            violations.append(_illegal(name, token))
        elif member in seen:
            if member not in duplicated:
                duplicated.add(member)
                violations.append(_illegal(name, token))
        else:
            seen.append(member)
    return violations, seen


def _check_machines(value) -> List[Violation]:
    violations, members = _check_tokens(
        FIELD_MACHINES, value, MachineConstraint
    )
    if isinstance(value, list) and not value:
        violations.append(_illegal(FIELD_MACHINES, value))

    same = MachineConstraint.SAME
    different = MachineConstraint.DIFFERENT
    unconstrained = MachineConstraint.UNCONSTRAINED
    if same in members and different in members:
        violations.append(_contradiction(FIELD_MACHINES, same, different))
    if unconstrained in members:
        for other in members:
            if other != unconstrained:
                violations.append(
                    _contradiction(FIELD_MACHINES, unconstrained, other)
                )
    if same in members:
        for other in members:
            if other not in (same, different, unconstrained):
                violations.append(_contradiction(FIELD_MACHINES, same, other))
    return violations


def _check_users(value) -> List[Violation]:
    violations, members = _check_tokens(FIELD_USERS, value, UserConstraint)
    if UserConstraint.SAME in members and UserConstraint.DIFFERENT in members:
        violations.append(
            _contradiction(
                FIELD_USERS, UserConstraint.SAME, UserConstraint.DIFFERENT
            )
        )
    return violations


def _check_destination(value) -> List[Violation]:
    member = UserCharacteristic.lookup(value)
    if member is None or member == UserCharacteristic.ANY_USER:
        return [_illegal(FIELD_DESTINATION, value)]
    return []


_CHECKS = {
    FIELD_CVE: _check_cve,
    FIELD_EXPLOIT: _check_exploit,
    FIELD_VULN_CLASS: lambda v: _check_enum(FIELD_VULN_CLASS, v, VulnClass),
    FIELD_MACHINES: _check_machines,
    FIELD_USERS: _check_users,
    FIELD_SOURCE: lambda v: _check_enum(FIELD_SOURCE, v, UserCharacteristic),
    FIELD_DESTINATION: _check_destination,
}


def _is_degenerate(raw: Mapping[str, Any]) -> bool:
    root = UserCharacteristic.SYSTEM_OR_ROOT.value
    users = raw.get(FIELD_USERS)
    return (
        raw.get(FIELD_SOURCE) == root
        and raw.get(FIELD_DESTINATION) == root
        and isinstance(users, list)
        and UserConstraint.SAME.value in users
    )


def validate_record(
    raw: Mapping[str, Any], strict: bool = True
) -> ValidationReport:
    """Check a raw field map against every CAPG invariant.

    Unknown fields are errors in strict mode and warnings otherwise.
    """
    if not isinstance(raw, Mapping):
        return ValidationReport(
            errors=[
                Violation(
                    ILLEGAL_VALUE, "", "a record must be a JSON object", raw
                )
            ]
        )

    errors: List[Violation] = []
    warnings: List[Violation] = []

    for name in sorted(set(raw) - set(FIELDS)):
        violation = Violation(UNKNOWN_FIELD, name, f"unknown field '{name}'")
        (errors if strict else warnings).append(violation)

    for name in FIELDS:
        if name not in raw:
            errors.append(
                Violation(MISSING_FIELD, name, f"missing field '{name}'")
            )
            continue
        errors.extend(_CHECKS[name](raw[name]))

    if _is_degenerate(raw):
        warnings.append(
            Violation(
                DEGENERATE_RECORD,
                FIELD_DESTINATION,
                "record gains nothing: system-or-root stays the same "
                "system-or-root user",
            )
        )
    return ValidationReport(errors=errors, warnings=warnings)


def build_record(raw: Mapping[str, Any]) -> CapgRecord:
    """Convert a field map that passed `validate_record` into a record."""
    return CapgRecord(
        cve=CveId.parse(raw[FIELD_CVE]),
        exploit=raw[FIELD_EXPLOIT],
        vuln_class=VulnClass(raw[FIELD_VULN_CLASS]),
        machines_constraints=[
            MachineConstraint(c) for c in raw[FIELD_MACHINES]
        ],
        users_constraints=[UserConstraint(c) for c in raw[FIELD_USERS]],
        user_source=UserCharacteristic(raw[FIELD_SOURCE]),
        user_destination=UserCharacteristic(raw[FIELD_DESTINATION]),
    )


def check_record(record: CapgRecord) -> ValidationReport:
    return validate_record(record.to_dict())
