from ..exceptions import CapgException, MalformedDocumentError  # noqa: F401


class PopulationError(CapgException):
    """Base class of the errors raised while deriving CAPG fields."""


class NoSuccessfulTrialError(PopulationError):
    def __init__(self, ladder):
        self.ladder = ladder
        super().__init__(
            f"no successful {ladder} trial: no CAPG can be derived"
        )


class OutOfOrderTrialsError(PopulationError):
    def __init__(self, ladder, context, previous):
        self.ladder = ladder
        self.context = context
        self.previous = previous
        super().__init__(
            f"{ladder} trial '{context}' is recorded after '{previous}', "
            "trials must follow the ladder order"
        )


class ManualInvestigationRequiredError(PopulationError):
    def __init__(self, reason):
        self.reason = reason
        super().__init__(f"further manual investigation required: {reason}")


class MissingIdentityError(PopulationError):
    def __init__(self, which):
        self.which = which
        super().__init__(f"the {which} identity is unknown")


class NoExploitError(PopulationError):
    def __init__(self, cve):
        self.cve = cve
        super().__init__(f"no exploit available for '{cve}': no CAPG")


class MalformedCpeError(PopulationError):
    def __init__(self, cpe):
        self.cpe = cpe
        super().__init__(f"'{cpe}' is not a CPE 2.3 formatted string")


class UnknownPartError(PopulationError):
    def __init__(self, part, cpe):
        self.part = part
        self.cpe = cpe
        super().__init__(f"unknown CPE part '{part}' in '{cpe}'")


class MalformedVectorError(PopulationError):
    def __init__(self, vector, reason):
        self.vector = vector
        self.reason = reason
        super().__init__(f"malformed CVSS v3 vector '{vector}': {reason}")


class SchemaMismatchError(PopulationError):
    def __init__(self, reason, source=None):
        self.reason = reason
        self.source = source
        where = f" '{source}'" if source else ""
        super().__init__(f"not an NVD API 2.0 CVE document{where}: {reason}")


class TranscriptError(PopulationError):
    def __init__(self, reason, source=None):
        self.reason = reason
        self.source = source
        where = f" '{source}'" if source else ""
        super().__init__(f"invalid trial transcript{where}: {reason}")
