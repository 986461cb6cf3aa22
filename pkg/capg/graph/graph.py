"""The attack positions graph."""
from typing import TYPE_CHECKING, FrozenSet, Optional, Tuple, Union

from attrs import field, frozen
from funcy import cached_property

from ..infra.model import CredentialEntry
from ..position import AttackPosition
from ..record.cve import CveId

if TYPE_CHECKING:
    import networkx as nx

    from .semantics import EdgeCandidate

CREDENTIALS_LABEL = "credentials"


@frozen
class CveExploitation:
    cve: CveId
    exploit: str
    vuln_location: str
    rationale: Tuple[str, ...] = field(
        default=(), converter=tuple, eq=False
    )
    score: Optional[float] = None

    kind = "cve"

    @classmethod
    def from_candidate(
        cls, candidate: "EdgeCandidate", score: Optional[float] = None
    ) -> "CveExploitation":
        return cls(
            cve=candidate.cve,
            exploit=candidate.exploit,
            vuln_location=candidate.vuln_location,
            rationale=candidate.rationale,
            score=score,
        )

    @property
    def label(self) -> str:
        return self.cve.label

    @property
    def sort_key(self):
        return (0, self.cve, self.exploit, self.vuln_location)


@frozen
class CredentialDiscovery:
    entry: CredentialEntry

    kind = "credentials"
    score = None

    @property
    def label(self) -> str:
        return CREDENTIALS_LABEL

    @property
    def sort_key(self):
        return (1, self.entry.sort_key)


EdgeLabel = Union[CveExploitation, CredentialDiscovery]


@frozen
class Edge:
    source: AttackPosition
    destination: AttackPosition
    via: EdgeLabel

    @property
    def label(self) -> str:
        return self.via.label

    @property
    def sort_key(self):
        return (
            self.source.sort_key,
            self.destination.sort_key,
            self.via.sort_key,
        )

    def __str__(self) -> str:
        return f"{self.source} -> {self.destination} [{self.label}]"


@frozen
class BuildWarning:
    """An exploitation skipped while building a graph."""

    kind: str
    message: str

    def to_dict(self):
        return {"kind": self.kind, "message": self.message}

    def __str__(self) -> str:
        return self.message


@frozen(slots=False)
class AttackPositionsGraph:
    nodes: FrozenSet[AttackPosition] = field(converter=frozenset)
    edges: FrozenSet[Edge] = field(converter=frozenset)
    entry_positions: FrozenSet[AttackPosition] = field(converter=frozenset)
    warnings: Tuple[BuildWarning, ...] = field(
        default=(), converter=tuple, eq=False
    )

    def __contains__(self, position) -> bool:
        return position in self.nodes

    def sorted_nodes(self):
        return sorted(self.nodes, key=lambda node: node.sort_key)

    def sorted_edges(self):
        return sorted(self.edges, key=lambda edge: edge.sort_key)

    @cached_property
    def nx_graph(self) -> "nx.MultiDiGraph":
        import networkx as nx

        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.sorted_nodes())
        for edge in self.sorted_edges():
            graph.add_edge(edge.source, edge.destination, key=edge.via)
        return graph
