import json

import pytest

from capg.exceptions import MalformedDocumentError
from capg.population.errors import MalformedVectorError, SchemaMismatchError
from capg.population.nvd import (
    load_nvd_dir,
    load_nvd_record,
    nvd_record_from_dict,
)
from capg.record.cve import CveId

from ...utils import fixture_path, read_fixture


def load(name):
    return load_nvd_record(read_fixture("nvd", name), name)


def test_log4j():
    record = load("CVE-2021-44228.json")
    assert record.cve == CveId(2021, 44228)
    assert record.cpes == (
        "cpe:2.3:a:apache:log4j:*:*:*:*:*:*:*:*",
        "cpe:2.3:a:apache:log4j:2.0:-:*:*:*:*:*:*",
    )
    assert record.vector.av == "N"
    assert record.vector.pr == "N"
    assert record.base_score == 10.0


def test_primary_metric_wins():
    record = load("CVE-2021-38648.json")
    assert record.vector.av == "L"
    assert record.vector.metric("E") is None
    assert record.base_score == 7.8


def test_no_cvss_v3_metric():
    record = load("CVE-2014-0160.json")
    assert record.vector is None
    assert record.base_score is None
    assert record.cpes == ("cpe:2.3:a:openssl:openssl:1.0.1:*:*:*:*:*:*:*",)


def test_bare_cve_item():
    document = json.loads(read_fixture("nvd", "CVE-2022-36804.json"))
    record = nvd_record_from_dict(document["vulnerabilities"][0])
    assert record.cve == CveId(2022, 36804)
    assert len(record.cpes) == 2


def test_load_dir():
    records = load_nvd_dir(fixture_path("nvd"))
    assert sorted(records) == [
        CveId(2014, 160),
        CveId(2021, 38648),
        CveId(2021, 44228),
        CveId(2022, 36804),
    ]


def test_load_empty_dir(tmp_dir):
    assert load_nvd_dir(tmp_dir) == {}


@pytest.mark.parametrize(
    "document",
    [
        [],
        {"vulnerabilities": []},
        {"vulnerabilities": [{"cve": {"id": "CVE-1"}}, {}]},
        {"vulnerabilities": [{"id": "CVE-2021-44228"}]},
        {"cve": {"id": "GHSA-jfh8-c2jp-5v3q"}},
        {"cve": {"id": "CVE-2021-44228", "configurations": "none"}},
        {
            "cve": {
                "id": "CVE-2021-44228",
                "metrics": {"cvssMetricV31": [{"cvssData": {}}]},
            }
        },
    ],
)
def test_schema_mismatch(document):
    with pytest.raises(SchemaMismatchError):
        nvd_record_from_dict(document, "doc.json")


def test_bad_vector():
    document = {
        "cve": {
            "id": "CVE-2021-44228",
            "metrics": {
                "cvssMetricV30": [
                    {"cvssData": {"vectorString": "CVSS:3.0/AV:N"}}
                ]
            },
        }
    }
    with pytest.raises(MalformedVectorError):
        nvd_record_from_dict(document)


@pytest.mark.parametrize("score", [11.0, "high"])
def test_bad_base_score(score):
    data = {
        "vectorString": "CVSS:3.1/AV:N/AC:L/PR:N/UI:N/S:U/C:H/I:H/A:H",
        "baseScore": score,
    }
    document = {
        "cve": {
            "id": "CVE-2021-44228",
            "metrics": {"cvssMetricV31": [{"cvssData": data}]},
        }
    }
    with pytest.raises(MalformedVectorError):
        nvd_record_from_dict(document)


def test_not_json():
    with pytest.raises(MalformedDocumentError):
        load_nvd_record("<html>", "page.html")
