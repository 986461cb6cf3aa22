"""Reachability and attack path queries."""
import logging
from typing import List, Optional, Sequence, Set, Tuple

from attrs import field, frozen

from ..exceptions import InvalidArgumentError
from ..position import AttackPosition
from .errors import UnknownPositionError, UnreachableError
from .graph import AttackPositionsGraph, Edge

logger = logging.getLogger(__name__)

RANK_KEYS = ("length", "severity")


@frozen
class AttackPath:
    """Edges chained from an entry position to `target`."""

    target: AttackPosition
    edges: Tuple[Edge, ...] = field(default=(), converter=tuple)

    def __attrs_post_init__(self):
        for first, second in zip(self.edges, self.edges[1:]):
            assert first.destination == second.source
        assert not self.edges or self.edges[-1].destination == self.target

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def source(self) -> AttackPosition:
        return self.edges[0].source if self.edges else self.target

    @property
    def positions(self) -> List[AttackPosition]:
        return [self.source] + [edge.destination for edge in self.edges]

    @property
    def severity_sum(self) -> Optional[float]:
        scores = [
            edge.via.score for edge in self.edges if edge.via.score is not None
        ]
        if not scores:
            return None
        return round(sum(scores), 1)

    @property
    def sort_key(self):
        return (
            self.length,
            tuple(edge.label for edge in self.edges),
            tuple(edge.sort_key for edge in self.edges),
        )

    def to_dict(self):
        return {
            "length": self.length,
            "severity_sum": self.severity_sum,
            "positions": [position.label for position in self.positions],
            "edges": [
                {
                    "source": edge.source.label,
                    "destination": edge.destination.label,
                    "label": edge.label,
                }
                for edge in self.edges
            ],
        }

    def __str__(self) -> str:
        steps = [self.source.label]
        for edge in self.edges:
            steps.append(f"-[{edge.label}]-> {edge.destination.label}")
        return " ".join(steps)


def _check_position(graph: AttackPositionsGraph, position: AttackPosition):
    if position not in graph:
        raise UnknownPositionError(position)


def reachable(
    graph: AttackPositionsGraph, source: AttackPosition
) -> Set[AttackPosition]:
    import networkx as nx

    _check_position(graph, source)
    return {source} | nx.descendants(graph.nx_graph, source)


def _entries(graph: AttackPositionsGraph):
    return sorted(graph.entry_positions, key=lambda node: node.sort_key)


def enumerate_paths(
    graph: AttackPositionsGraph, target: AttackPosition, max_len: int
) -> List[AttackPath]:
    """All simple paths from any entry position to `target`.

    Paths have at most `max_len` edges and are ordered by length, then by
    their edge labels.
    """
    import networkx as nx

    _check_position(graph, target)
    if max_len < 1:
        raise InvalidArgumentError(
            f"max_len must be at least 1, got {max_len}"
        )

    paths = []
    for entry in _entries(graph):
        if entry == target:
            paths.append(AttackPath(target))
            continue
        for edge_path in nx.all_simple_edge_paths(
            graph.nx_graph, entry, target, cutoff=max_len
        ):
            edges = [
                Edge(source, destination, via)
                for source, destination, via in edge_path
            ]
            paths.append(AttackPath(target, edges))

    logger.debug("%d paths to '%s'", len(paths), target)
    return sorted(paths, key=lambda path: path.sort_key)


def shortest_path(
    graph: AttackPositionsGraph, target: AttackPosition
) -> AttackPath:
    """The first (in enumeration order) path with the fewest edges.

    Raises:
        UnknownPositionError: `target` is not a node of `graph`.
        UnreachableError: no entry position leads to `target`.
    """
    import networkx as nx

    _check_position(graph, target)
    entries = _entries(graph)
    distances = (
        nx.multi_source_dijkstra_path_length(graph.nx_graph, entries)
        if entries
        else {}
    )
    if target not in distances:
        raise UnreachableError(target)
    paths = enumerate_paths(graph, target, max(distances[target], 1))
    return paths[0]


def rank_paths(
    paths: Sequence[AttackPath], key: str = "length"
) -> List[AttackPath]:
    """Order paths by criticality.

    `length` puts the shortest paths first. `severity` puts first the paths
    with the highest sum of CVSS base scores (paths without scores count as
    0), ties broken by length.
    """
    if key == "length":
        return sorted(paths, key=lambda path: path.sort_key)
    if key == "severity":
        return sorted(
            paths, key=lambda path: (-(path.severity_sum or 0), path.sort_key)
        )
    raise InvalidArgumentError(
        f"unknown rank key '{key}', expected one of {', '.join(RANK_KEYS)}"
    )
