"""DOT and JSON renderings of attack positions graphs."""
import json
from collections import Counter
from typing import Dict, Optional

from ..exceptions import MalformedDocumentError
from ..infra.model import CredentialEntry, RequiredPrivilege
from ..position import AttackPosition
from ..record.cve import CveId
from ..record.errors import CapgRecordError
from .graph import (
    AttackPositionsGraph,
    BuildWarning,
    CredentialDiscovery,
    CveExploitation,
    Edge,
)

FORMAT_VERSION = "1"


def _quote(text: str) -> str:
    escaped = text.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def node_ids(graph: AttackPositionsGraph) -> Dict[AttackPosition, str]:
    """`name@machine` for every node, account ids where names collide.

    Switching a node to its account id can make it collide with another
    label, so switching repeats until every id is unique.
    """
    ids = {node: node.label for node in graph.nodes}
    switched = set()
    while True:
        counts = Counter(ids.values())
        clashing = [
            node
            for node, ident in ids.items()
            if counts[ident] > 1
            and not node.is_external
            and node not in switched
        ]
        if not clashing:
            return ids
        for node in clashing:
            ids[node] = f"{node.user}@{node.machine}"
            switched.add(node)


def export_dot(
    graph: AttackPositionsGraph, stamp: Optional[str] = None
) -> str:
    ids = node_ids(graph)
    lines = ["digraph attack_positions {"]
    if stamp:
        lines.append(f"    // generated {stamp}")
    lines.append("    node [shape=box];")
    for node in graph.sorted_nodes():
        attrs = " [style=bold]" if node in graph.entry_positions else ""
        lines.append(f"    {_quote(ids[node])}{attrs};")
    for edge in graph.sorted_edges():
        lines.append(
            "    {} -> {} [label={}];".format(
                _quote(ids[edge.source]),
                _quote(ids[edge.destination]),
                _quote(edge.label),
            )
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _edge_to_dict(edge: Edge):
    data = {
        "source": edge.source.to_dict(),
        "destination": edge.destination.to_dict(),
        "label": edge.label,
        "kind": edge.via.kind,
    }
    via = edge.via
    if isinstance(via, CveExploitation):
        data.update(
            cve=str(via.cve),
            exploit=via.exploit,
            vuln_location=via.vuln_location,
            rationale=list(via.rationale),
            score=via.score,
        )
    else:
        data.update(
            holder=via.entry.holder,
            credential_for=via.entry.credential_for,
            required_privilege=via.entry.required_privilege.value,
        )
    return data


def export_json(
    graph: AttackPositionsGraph, stamp: Optional[str] = None
) -> str:
    document = {
        "format_version": FORMAT_VERSION,
        "entry_positions": [
            node.to_dict()
            for node in sorted(
                graph.entry_positions, key=lambda node: node.sort_key
            )
        ],
        "nodes": [node.to_dict() for node in graph.sorted_nodes()],
        "edges": [_edge_to_dict(edge) for edge in graph.sorted_edges()],
        "warnings": [warning.to_dict() for warning in graph.warnings],
    }
    if stamp:
        document["generated"] = stamp
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def _edge_from_dict(data) -> Edge:
    if data["kind"] == CveExploitation.kind:
        via = CveExploitation(
            cve=CveId.parse(data["cve"]),
            exploit=data["exploit"],
            vuln_location=data["vuln_location"],
            rationale=data.get("rationale", ()),
            score=data.get("score"),
        )
    elif data["kind"] == CredentialDiscovery.kind:
        via = CredentialDiscovery(
            CredentialEntry(
                holder=data["holder"],
                credential_for=data["credential_for"],
                required_privilege=RequiredPrivilege(
                    data["required_privilege"]
                ),
            )
        )
    else:
        raise ValueError(f"unknown edge kind '{data['kind']}'")
    return Edge(
        AttackPosition.from_dict(data["source"]),
        AttackPosition.from_dict(data["destination"]),
        via,
    )


def import_json(
    text: str, source: Optional[str] = None
) -> AttackPositionsGraph:
    """Read back a graph written by `export_json`."""
    try:
        document = json.loads(text)
    except ValueError as exc:
        raise MalformedDocumentError(f"invalid JSON: {exc}", source) from exc
    if not isinstance(document, dict):
        raise MalformedDocumentError("expected a JSON object", source)
    version = document.get("format_version")
    if version != FORMAT_VERSION:
        raise MalformedDocumentError(
            f"unsupported format_version '{version}'", source
        )

    try:
        nodes = [AttackPosition.from_dict(item) for item in document["nodes"]]
        entries = [
            AttackPosition.from_dict(item)
            for item in document["entry_positions"]
        ]
        edges = [_edge_from_dict(item) for item in document["edges"]]
        warnings = [
            BuildWarning(item["kind"], item["message"])
            for item in document.get("warnings", [])
        ]
    except (
        KeyError,
        TypeError,
        ValueError,
        AssertionError,
        CapgRecordError,
    ) as exc:
        raise MalformedDocumentError(
            f"invalid graph: {exc!r}", source
        ) from exc
    return AttackPositionsGraph(nodes, edges, entries, warnings)
