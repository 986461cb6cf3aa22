import argparse
import logging

from .command import CmdBase, ExitStatus, add_format_option, add_graph_inputs

logger = logging.getLogger(__name__)


def timestamp() -> str:
    from datetime import datetime, timezone

    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class CmdBuildGraph(CmdBase):
    def run(self):
        from ..graph.export import export_dot, export_json
        from ..utils import write_text

        graph = self.build()
        stamp = timestamp() if self.args.stamp else None
        if self.args.out_dot:
            write_text(self.args.out_dot, export_dot(graph, stamp))
        if self.args.out_json:
            write_text(self.args.out_json, export_json(graph, stamp))

        if self.json_output:
            self.write_json(
                {
                    "nodes": len(graph.nodes),
                    "edges": len(graph.edges),
                    "warnings": [w.to_dict() for w in graph.warnings],
                }
            )
        else:
            for warning in graph.warnings:
                logger.warning("%s", warning)
            self.write(f"{len(graph.nodes)} nodes, {len(graph.edges)} edges")
        return ExitStatus.OK


def add_parser(subparsers, parent_parser):
    BUILD_HELP = "Build the attack positions graph of an information system."
    parser = subparsers.add_parser(
        "build-graph",
        parents=[parent_parser],
        description=BUILD_HELP,
        help=BUILD_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    add_graph_inputs(parser)
    parser.add_argument(
        "--out-dot", metavar="<path>", help="Write the graph as DOT."
    )
    parser.add_argument(
        "--out-json", metavar="<path>", help="Write the graph as JSON."
    )
    parser.add_argument(
        "--stamp",
        action="store_true",
        default=False,
        help="Record the generation time in the exports.",
    )
    add_format_option(parser)
    parser.set_defaults(func=CmdBuildGraph)
