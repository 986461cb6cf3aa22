from .build import build_graph  # noqa: F401
from .errors import (  # noqa: F401
    ConstraintViolatedError,
    UnknownPositionError,
    UnreachableError,
    UnresolvedDestinationError,
    VulnClassMismatchError,
)
from .export import export_dot, export_json, import_json  # noqa: F401
from .graph import (  # noqa: F401
    AttackPositionsGraph,
    BuildWarning,
    CredentialDiscovery,
    CveExploitation,
    Edge,
)
from .pivot import pivot_credential_discovery  # noqa: F401
from .query import (  # noqa: F401
    AttackPath,
    enumerate_paths,
    rank_paths,
    reachable,
    shortest_path,
)
from .semantics import (  # noqa: F401
    Decision,
    EdgeCandidate,
    applicable,
    candidate,
    resolve_destination,
)
