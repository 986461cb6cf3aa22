"""JSON codec of CAPG documents."""
import json
import logging
import os
from typing import Any, Dict, Iterable, List, Optional, Tuple

from attrs import field, frozen
from funcy import memoize

from .errors import CapgRecordError, MalformedDocumentError
from .model import FIELDS, CapgRecord
from .validate import Violation, build_record, validate_record

logger = logging.getLogger(__name__)

INDENT = " " * 4


@memoize
def get_schema() -> Dict[str, Any]:
    """JSON Schema of one record, for tools outside capg."""
    path = os.path.join(os.path.dirname(__file__), "schema.json")
    with open(path, encoding="utf-8") as fobj:
        return json.load(fobj)


@frozen
class CapgDocument:
    records: Tuple[CapgRecord, ...] = field(converter=tuple)
    # (record index, violation) pairs tolerated by a lenient parse
    warnings: Tuple[Tuple[int, Violation], ...] = field(
        default=(), converter=tuple
    )


def load_json(text, source: Optional[str] = None):
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedDocumentError(str(exc), source) from exc
    try:
        return json.loads(text)
    except ValueError as exc:
        raise MalformedDocumentError(str(exc), source) from exc


def raw_records(text, source: Optional[str] = None) -> List[dict]:
    """Split a CAPG document into raw field maps, checking only its shape."""
    data = load_json(text, source)
    items = data if isinstance(data, list) else [data]
    for index, item in enumerate(items):
        if not isinstance(item, dict):
            raise MalformedDocumentError(
                f"item {index} is not a JSON object", source
            )
    return items


def parse_document(
    text, strict: bool = True, source: Optional[str] = None
) -> CapgDocument:
    records = []
    warnings = []
    for index, raw in enumerate(raw_records(text, source)):
        report = validate_record(raw, strict=strict)
        if report.errors:
            exc = report.errors[0].to_exception()
            exc.report = report
            exc.index = index
            raise exc
        for violation in report.warnings:
            logger.warning(
                "%srecord %d (%s): %s",
                f"'{source}' " if source else "",
                index,
                raw.get("CVE"),
                violation.message,
            )
            warnings.append((index, violation))
        records.append(build_record(raw))

    logger.debug("parsed %d CAPG record(s)", len(records))
    return CapgDocument(records, warnings)


def parse_capg(
    text, strict: bool = True, source: Optional[str] = None
) -> List[CapgRecord]:
    """Parse a CAPG document (one record object or an array of them).

    Raises:
        MalformedDocumentError: the text is not a JSON object/array of
            objects.
        CapgRecordError: the first violation of the first invalid record
            (`UnknownFieldError`, `MissingFieldError`, `IllegalValueError`
            or `ConstraintContradictionError`).
    """
    return list(parse_document(text, strict=strict, source=source).records)


def _render_record(record: CapgRecord) -> List[str]:
    data = record.to_dict()
    lines = [f"{INDENT}{{"]
    for i, name in enumerate(FIELDS):
        value = json.dumps(data[name], ensure_ascii=False)
        comma = "," if i < len(FIELDS) - 1 else ""
        lines.append(f'{INDENT * 2}"{name}": {value}{comma}')
    lines.append(f"{INDENT}}}")
    return lines


def serialize_capg(records: Iterable[CapgRecord]) -> str:
    """Render records in the canonical layout.

    Fields come in the fixed CAPG order, objects are indented by four
    spaces and constraint lists stay on one line.
    """
    records = list(records)
    if not records:
        return "[]\n"

    lines = ["["]
    for i, record in enumerate(records):
        rendered = _render_record(record)
        if i < len(records) - 1:
            rendered[-1] += ","
        lines.extend(rendered)
    lines.append("]")
    return "\n".join(lines) + "\n"


__all__ = [
    "CapgDocument",
    "CapgRecordError",
    "get_schema",
    "parse_capg",
    "parse_document",
    "raw_records",
    "serialize_capg",
]
