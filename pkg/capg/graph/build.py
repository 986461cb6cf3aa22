"""Fixpoint construction of attack positions graphs."""
import logging
from typing import (
    TYPE_CHECKING,
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Set,
    Tuple,
)

from ..executors import ThreadPoolExecutor
from ..position import EXTERNAL, AttackPosition
from ..progress import Tqdm
from .errors import UnresolvedDestinationError, VulnClassMismatchError
from .graph import (
    AttackPositionsGraph,
    BuildWarning,
    CredentialDiscovery,
    CveExploitation,
    Edge,
)
from .pivot import pivot_credential_discovery
from .semantics import EdgeCandidate, candidate

if TYPE_CHECKING:
    from ..infra.model import InfraModel, VulnInstance
    from ..record.cve import CveId
    from ..record.model import CapgRecord

logger = logging.getLogger(__name__)

UNRESOLVED_DESTINATION = "UnresolvedDestination"
VULN_CLASS_MISMATCH = "VulnClassMismatch"
NO_VULN_INSTANCE = "NoVulnInstance"

# (record, vuln instance, destination)
Exploitation = Tuple["CapgRecord", "VulnInstance", AttackPosition]
Found = Tuple["CapgRecord", "VulnInstance", EdgeCandidate]


class _Expander:
    def __init__(
        self,
        model: "InfraModel",
        records: List["CapgRecord"],
        scores: Mapping["CveId", float],
    ):
        self.model = model
        self.records = records
        self.scores = scores
        self.subsumed: Set[Exploitation] = set()

    def exploitations(self, position: AttackPosition):
        warnings = set()
        found: List[Found] = []
        for record in self.records:
            for vuln in self.model.vulns_of(record.cve):
                try:
                    edge = candidate(record, vuln, position, self.model)
                except VulnClassMismatchError as exc:
                    warnings.add(BuildWarning(VULN_CLASS_MISMATCH, exc.msg))
                    continue
                except UnresolvedDestinationError as exc:
                    warnings.add(BuildWarning(UNRESOLVED_DESTINATION, exc.msg))
                    continue
                if edge is not None:
                    found.append((record, vuln, edge))
        return found, warnings

    def __call__(self, position: AttackPosition):
        edges = set()
        found, warnings = self.exploitations(position)
        for record, vuln, edge in found:
            destination = edge.destination
            if destination == position:
                continue
            if (
                not position.is_external
                and (record, vuln, destination) in self.subsumed
            ):
                logger.trace(  # type: ignore[attr-defined]
                    "'%s' via %s subsumed by the external position",
                    position,
                    record.cve.label,
                )
                continue
            via = CveExploitation.from_candidate(
                edge, self.scores.get(record.cve)
            )
            edges.add(Edge(position, destination, via))

        for destination, entry in pivot_credential_discovery(
            position, self.model
        ):
            edges.add(Edge(position, destination, CredentialDiscovery(entry)))
        return edges, warnings


def _unique(records: Iterable["CapgRecord"]) -> List["CapgRecord"]:
    seen: Dict["CapgRecord", None] = {}
    for record in records:
        seen.setdefault(record)
    return sorted(seen, key=lambda record: record.sort_key)


def build_graph(
    model: "InfraModel",
    records: Iterable["CapgRecord"],
    *,
    scores: Optional[Mapping["CveId", float]] = None,
    jobs: Optional[int] = None,
    subsume_external: bool = True,
) -> AttackPositionsGraph:
    """Build the graph of positions reachable from the entry positions.

    Every reached position is expanded once with all CVE exploitations
    applicable from it and all credential discoveries. Exploitations
    that cannot be evaluated are skipped and reported in `warnings`.

    Args:
        scores: optional CVSS base score per CVE, copied onto CVE edges.
        jobs: number of threads expanding positions of a round.
        subsume_external: when the external position is an entry position,
            do not repeat from held positions the exploitations that are
            already applicable from it with the same destination.
    """
    records = _unique(records)
    expander = _Expander(model, records, scores or {})

    warnings: Set[BuildWarning] = set()
    for record in records:
        if next(model.vulns_of(record.cve), None) is None:
            warnings.add(
                BuildWarning(
                    NO_VULN_INSTANCE,
                    f"{record.cve.label} has no vulnerability instance",
                )
            )

    if subsume_external and EXTERNAL in model.entry_positions:
        found, _ = expander.exploitations(EXTERNAL)
        expander.subsumed = {
            (record, vuln, edge.destination) for record, vuln, edge in found
        }

    nodes: Set[AttackPosition] = set(model.entry_positions)
    edges: Set[Edge] = set()
    frontier = sorted(nodes, key=lambda node: node.sort_key)
    rounds = 0
    with ThreadPoolExecutor(
        max_workers=jobs, cancel_on_error=True
    ) as executor, Tqdm(desc="Building graph") as pbar:
        while frontier:
            rounds += 1
            pbar.start_round(rounds, len(frontier))
            reached: Set[AttackPosition] = set()
            for _, (new_edges, new_warnings) in executor.imap_unordered(
                expander, frontier
            ):
                edges |= new_edges
                warnings |= new_warnings
                reached.update(edge.destination for edge in new_edges)
                pbar.update()
            frontier = sorted(reached - nodes, key=lambda node: node.sort_key)
            nodes.update(frontier)
            logger.debug(
                "round %d: %d positions, %d edges, %d new",
                rounds,
                len(nodes),
                len(edges),
                len(frontier),
            )

    for warning in sorted(warnings, key=lambda w: (w.kind, w.message)):
        logger.debug("skipped: %s", warning)

    return AttackPositionsGraph(
        nodes=nodes,
        edges=edges,
        entry_positions=model.entry_positions,
        warnings=sorted(warnings, key=lambda w: (w.kind, w.message)),
    )
