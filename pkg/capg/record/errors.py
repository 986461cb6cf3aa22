from ..exceptions import CapgException, MalformedDocumentError  # noqa: F401


class CapgRecordError(CapgException):
    """Base class for invalid CAPG records.

    `report` holds every violation of the offending record when the error
    comes from a parse, `index` its position in the document.
    """

    report = None
    index = None


class UnknownFieldError(CapgRecordError):
    def __init__(self, field):
        self.field = field
        super().__init__(f"unknown field '{field}'")


class MissingFieldError(CapgRecordError):
    def __init__(self, field):
        self.field = field
        super().__init__(f"missing field '{field}'")


class IllegalValueError(CapgRecordError):
    def __init__(self, field, token):
        self.field = field
        self.token = token
        super().__init__(f"illegal value {token!r} for field '{field}'")


class ConstraintContradictionError(CapgRecordError):
    def __init__(self, field, first, second):
        self.field = field
        self.pair = (first, second)
        super().__init__(
            f"'{first}' and '{second}' cannot be combined in '{field}'"
        )
