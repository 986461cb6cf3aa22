import argparse
import logging

from ..graph.errors import UnreachableError
from .command import (
    CmdBase,
    ExitStatus,
    NotAPositionError,
    add_format_option,
    add_graph_inputs,
    find_position,
    parse_target,
)

logger = logging.getLogger(__name__)


class CmdPaths(CmdBase):
    FAILURES = (UnreachableError, NotAPositionError)

    def run(self):
        from ..graph.query import enumerate_paths, rank_paths, shortest_path

        # a malformed target is a usage error, detected before any loading
        parse_target(self.args.target)
        conf = self.config["paths"]
        max_len = (
            conf["max_len"] if self.args.max_len is None else self.args.max_len
        )
        rank = self.args.rank or conf["rank"]

        graph = self.build()
        target = find_position(graph, self.args.target)
        paths = rank_paths(enumerate_paths(graph, target, max_len), rank)
        if not paths:
            # raises when the target cannot be reached at all
            shortest = shortest_path(graph, target)
            logger.error(
                "no path of at most %d edges leads to '%s', "
                "the shortest has %d",
                max_len,
                target,
                shortest.length,
            )
            return ExitStatus.FAILURE

        if self.json_output:
            self.write_json(
                {
                    "target": target.label,
                    "rank": rank,
                    "paths": [path.to_dict() for path in paths],
                }
            )
        else:
            for path in paths:
                self.write(str(path))
        return ExitStatus.OK


def add_parser(subparsers, parent_parser):
    PATHS_HELP = "List the attack paths leading to a position."
    parser = subparsers.add_parser(
        "paths",
        parents=[parent_parser],
        description=PATHS_HELP,
        help=PATHS_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    add_graph_inputs(parser)
    parser.add_argument(
        "--target",
        required=True,
        metavar="<user@machine>",
        help="Targeted attack position ('attacker@internet' is external).",
    )
    parser.add_argument(
        "--max-len",
        type=int,
        metavar="<number>",
        help="Longest path to list, in edges (default: 10).",
    )
    parser.add_argument(
        "--rank",
        choices=("length", "severity"),
        help="Order paths by length or by CVSS severity (default: length).",
    )
    add_format_option(parser)
    parser.set_defaults(func=CmdPaths)
