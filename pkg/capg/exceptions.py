"""Exceptions raised by capg."""


class CapgException(Exception):
    """Base class for all capg exceptions."""

    def __init__(self, msg, *args):
        assert msg
        self.msg = msg
        super().__init__(msg, *args)


class InvalidArgumentError(ValueError, CapgException):
    """Thrown if arguments are invalid."""

    def __init__(self, msg, *args):
        self.msg = msg
        super().__init__(msg, *args)


class MalformedDocumentError(CapgException):
    """Thrown if an input document is not the JSON it should be.

    Args:
        reason (str): what is wrong with the document.
        source (str): optional name of the document (usually a path).
    """

    def __init__(self, reason, source=None):
        self.reason = reason
        self.source = source
        where = f"'{source}': " if source else ""
        super().__init__(f"malformed document {where}{reason}")


class FileReadError(CapgException):
    def __init__(self, path, cause):
        self.path = path
        super().__init__(f"unable to read '{path}': {cause}")
