from ..exceptions import CapgException


class VulnClassMismatchError(CapgException):
    def __init__(self, record, vuln):
        self.record = record
        self.vuln = vuln
        where = "an application" if vuln.is_application else "a machine"
        super().__init__(
            f"{record.cve.label} is classified '{record.vuln_class.value}' "
            f"but its instance {vuln} is located on {where}"
        )


class UnresolvedDestinationError(CapgException):
    def __init__(self, record, vuln, reason):
        self.record = record
        self.vuln = vuln
        self.reason = reason
        super().__init__(
            f"cannot resolve the destination of {vuln} "
            f"({record.user_destination.value}): {reason}"
        )


class ConstraintViolatedError(CapgException):
    def __init__(self, constraint, source, destination):
        self.constraint = constraint
        self.source = source
        self.destination = destination
        super().__init__(
            f"destination {destination} violates '{constraint}' "
            f"from {source}"
        )


class UnknownPositionError(CapgException):
    def __init__(self, position):
        self.position = position
        super().__init__(f"'{position}' is not a position of the graph")


class UnreachableError(CapgException):
    def __init__(self, position):
        self.position = position
        super().__init__(f"'{position}' is unreachable from entry positions")
