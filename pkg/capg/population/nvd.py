"""Offline NVD (API 2.0) CVE documents."""
import logging
import os
from typing import TYPE_CHECKING, Dict, List, Optional, Tuple

from attrs import field, frozen

from ..record.codec import load_json
from ..record.cve import CveId
from ..record.errors import IllegalValueError
from .cvss import CvssVector, parse_cvss
from .errors import SchemaMismatchError

if TYPE_CHECKING:
    from ..types import StrPath

logger = logging.getLogger(__name__)

METRIC_KEYS = ("cvssMetricV31", "cvssMetricV30")
NVD_GLOB = "CVE-*.json"


@frozen
class NvdRecord:
    cve: CveId
    cpes: Tuple[str, ...] = field(converter=tuple)
    vector: Optional[CvssVector] = None

    @property
    def base_score(self) -> Optional[float]:
        if self.vector is None or self.vector.base_score is None:
            return None
        return float(self.vector.base_score)


def _cve_item(document, source):
    if not isinstance(document, dict):
        raise SchemaMismatchError("expected a JSON object", source)
    if "vulnerabilities" in document:
        items = document["vulnerabilities"]
        if not isinstance(items, list) or len(items) != 1:
            raise SchemaMismatchError(
                "expected exactly one item in 'vulnerabilities'", source
            )
        document = items[0]
    item = document.get("cve") if isinstance(document, dict) else None
    if not isinstance(item, dict):
        raise SchemaMismatchError("missing 'cve' object", source)
    return item


def _walk_nodes(nodes):
    for node in nodes or ():
        yield node
        yield from _walk_nodes(node.get("children"))


def _criteria(item) -> List[str]:
    found: Dict[str, None] = {}
    for configuration in item.get("configurations") or ():
        for node in _walk_nodes(configuration.get("nodes")):
            for match in node.get("cpeMatch") or ():
                criteria = match.get("criteria")
                if criteria:
                    found.setdefault(criteria)
    return list(found)


def _primary_metric(item):
    metrics = item.get("metrics") or {}
    for key in METRIC_KEYS:
        entries = metrics.get(key) or []
        if not entries:
            continue
        for entry in entries:
            if entry.get("type") == "Primary":
                return entry
        return entries[0]
    return None


def nvd_record_from_dict(document, source: Optional[str] = None) -> NvdRecord:
    item = _cve_item(document, source)
    try:
        cve = CveId.parse(item.get("id"))
        cpes = _criteria(item)
        metric = _primary_metric(item)
    except IllegalValueError as exc:
        raise SchemaMismatchError(exc.msg, source) from exc
    except (AttributeError, TypeError) as exc:
        raise SchemaMismatchError(f"unexpected layout: {exc}", source) from exc

    vector = None
    if metric is not None:
        data = metric.get("cvssData") or {}
        if "vectorString" not in data:
            raise SchemaMismatchError("cvssData without vectorString", source)
        vector = parse_cvss(data["vectorString"], data.get("baseScore"))
    return NvdRecord(cve, cpes, vector)


def load_nvd_record(text, source: Optional[str] = None) -> NvdRecord:
    """Extract id, CPE criteria and primary CVSS v3 vector.

    Raises:
        MalformedDocumentError: the document is not JSON.
        SchemaMismatchError: the JSON is not a single-CVE API 2.0 document.
    """
    return nvd_record_from_dict(load_json(text, source), source)


def load_nvd_dir(path: "StrPath") -> Dict[CveId, NvdRecord]:
    import fsspec

    fs, root = fsspec.core.url_to_fs(os.fspath(path))
    records = {}
    for name in sorted(fs.glob(f"{root.rstrip('/')}/{NVD_GLOB}")):
        with fs.open(name, "r", encoding="utf-8") as fobj:
            record = load_nvd_record(fobj.read(), name)
        logger.debug("loaded %s from '%s'", record.cve.label, name)
        records[record.cve] = record
    return records
