from .codec import (  # noqa: F401
    CapgDocument,
    parse_capg,
    parse_document,
    raw_records,
    serialize_capg,
)
from .cve import CveId  # noqa: F401
from .enums import (  # noqa: F401
    MachineConstraint,
    UserCharacteristic,
    UserConstraint,
    VulnClass,
)
from .errors import (  # noqa: F401
    CapgRecordError,
    ConstraintContradictionError,
    IllegalValueError,
    MalformedDocumentError,
    MissingFieldError,
    UnknownFieldError,
)
from .model import FIELDS, CapgRecord  # noqa: F401
from .validate import (  # noqa: F401
    ValidationReport,
    Violation,
    build_record,
    check_record,
    validate_record,
)
