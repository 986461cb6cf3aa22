from .assemble import assemble_record  # noqa: F401
from .cpe import derive_vuln_class  # noqa: F401
from .cvss import (  # noqa: F401
    CvssVector,
    LintWarning,
    lint_against_cvss,
    parse_cvss,
)
from .derive import (  # noqa: F401
    derive_machines_constraints,
    derive_user_destination,
    derive_user_source,
    derive_users_constraints,
    normalize_whoami,
)
from .errors import (  # noqa: F401
    ManualInvestigationRequiredError,
    MalformedCpeError,
    MalformedVectorError,
    MissingIdentityError,
    NoExploitError,
    NoSuccessfulTrialError,
    OutOfOrderTrialsError,
    PopulationError,
    SchemaMismatchError,
    TranscriptError,
    UnknownPartError,
)
from .nvd import NvdRecord, load_nvd_dir, load_nvd_record  # noqa: F401
from .transcript import (  # noqa: F401
    DestinationEvidence,
    MachineContext,
    Trial,
    TrialTranscript,
    UserContext,
    load_transcript,
)
