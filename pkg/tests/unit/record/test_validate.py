import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from capg.record.errors import (
    ConstraintContradictionError,
    IllegalValueError,
    MissingFieldError,
    UnknownFieldError,
)
from capg.record.validate import (
    CONSTRAINT_CONTRADICTION,
    DEGENERATE_RECORD,
    ILLEGAL_VALUE,
    MISSING_FIELD,
    UNKNOWN_FIELD,
    build_record,
    check_record,
    validate_record,
)

from ...oracles import record_is_valid
from ...strategies import mutated_records, records

LOG4J = {
    "CVE": "2021-44228",
    "exploit": "https://github.com/kozmer/log4j-shell-poc",
    "vuln_class": "application",
    "machines_constraints": ["unconstrained"],
    "users_constraints": [],
    "user_source": "any-user",
    "user_destination": "machine-local",
}


def with_fields(**changes):
    raw = dict(LOG4J)
    raw.update(changes)
    return raw


def codes(report):
    return [violation.code for violation in report.errors]


def test_sample_records_are_valid(sample_records):
    for record in sample_records:
        assert check_record(record).is_empty


def test_valid_record():
    report = validate_record(LOG4J)
    assert report.is_empty
    assert build_record(LOG4J).to_dict() == LOG4J


def test_missing_field():
    raw = dict(LOG4J)
    del raw["exploit"]
    report = validate_record(raw)
    assert codes(report) == [MISSING_FIELD]
    assert report.errors[0].field == "exploit"
    assert isinstance(report.errors[0].to_exception(), MissingFieldError)


def test_unknown_field_strict_and_lenient():
    raw = with_fields(comment="seen in the wild")

    strict = validate_record(raw)
    assert codes(strict) == [UNKNOWN_FIELD]
    assert isinstance(strict.errors[0].to_exception(), UnknownFieldError)

    lenient = validate_record(raw, strict=False)
    assert not lenient.errors
    assert [v.code for v in lenient.warnings] == [UNKNOWN_FIELD]


@pytest.mark.parametrize(
    "machines, pair",
    [
        (["same", "different"], ("same", "different")),
        (["unconstrained", "same-ldap"], ("unconstrained", "same-ldap")),
        (["same", "adjacent-network"], ("same", "adjacent-network")),
    ],
)
def test_machines_contradictions(machines, pair):
    report = validate_record(with_fields(machines_constraints=machines))
    assert CONSTRAINT_CONTRADICTION in codes(report)
    violation = next(
        v for v in report.errors if v.code == CONSTRAINT_CONTRADICTION
    )
    assert violation.pair == pair
    exc = violation.to_exception()
    assert isinstance(exc, ConstraintContradictionError)
    assert exc.field == "machines_constraints"


def test_users_contradiction():
    raw = with_fields(users_constraints=["different", "same"])
    report = validate_record(raw)
    assert codes(report) == [CONSTRAINT_CONTRADICTION]


@pytest.mark.parametrize(
    "changes",
    [
        {"CVE": "2021-428"},
        {"CVE": 202144228},
        {"exploit": ""},
        {"exploit": "kozmer/log4j-shell-poc"},
        {"exploit": "http://["},
        {"vuln_class": "library"},
        {"machines_constraints": []},
        {"machines_constraints": "unconstrained"},
        {"machines_constraints": ["different", "different"]},
        {"machines_constraints": ["same-domain"]},
        {"users_constraints": ["same-application", "same-application"]},
        {"users_constraints": None},
        {"user_source": "root"},
        {"user_destination": "any-user"},
        {"user_destination": None},
    ],
)
def test_illegal_values(changes):
    report = validate_record(with_fields(**changes))
    assert codes(report) == [ILLEGAL_VALUE]
    (name,) = changes
    assert report.errors[0].field == name
    assert isinstance(report.errors[0].to_exception(), IllegalValueError)


def test_every_violation_is_reported():
    raw = with_fields(
        CVE="nope",
        machines_constraints=["same", "different"],
        user_destination="any-user",
    )
    del raw["exploit"]
    report = validate_record(raw)
    assert sorted(v.field for v in report.errors) == [
        "CVE",
        "exploit",
        "machines_constraints",
        "user_destination",
    ]


def test_degenerate_record_warns():
    report = validate_record(
        with_fields(
            users_constraints=["same"],
            user_source="system-or-root",
            user_destination="system-or-root",
        )
    )
    assert not report.errors
    assert [v.code for v in report.warnings] == [DEGENERATE_RECORD]


@pytest.mark.parametrize("raw", [[], "record", None, 1])
def test_not_an_object(raw):
    report = validate_record(raw)
    assert codes(report) == [ILLEGAL_VALUE]


@given(records())
def test_generated_records_are_valid(record):
    assert not validate_record(record.to_dict()).errors


@settings(max_examples=1000)
@given(mutated_records(), st.booleans())
def test_agrees_with_reference_checker(raw, strict):
    report = validate_record(raw, strict=strict)
    assert report.has_errors != record_is_valid(raw, strict=strict)
