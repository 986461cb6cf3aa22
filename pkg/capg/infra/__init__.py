from .errors import (  # noqa: F401
    DanglingReferenceError,
    DuplicateIdError,
    InfraModelError,
    InvalidModelError,
    ModelProblem,
    UnknownMachineError,
    UnknownUserError,
)
from .load import (  # noqa: F401
    load_infra,
    model_from_dict,
    model_to_dict,
    save_infra,
)
from .model import (  # noqa: F401
    ApplicationInstance,
    CredentialEntry,
    Directory,
    DirectoryKind,
    InfraModel,
    Machine,
    NetworkTopology,
    RequiredPrivilege,
    UserAccount,
    UserScope,
    VulnInstance,
)
from .relations import machine_relation, user_characteristics  # noqa: F401
