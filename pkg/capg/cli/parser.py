"""Main parser for the capg cli."""
import argparse
import sys
import logging

from . import build_graph, fetch_nvd, lint, paths, populate, validate

logger = logging.getLogger(__name__)

COMMANDS = [validate, build_graph, paths, populate, lint, fetch_nvd]


class CapgParserError(Exception):
    """Base class for CLI parser errors."""

    def __init__(self):
        super().__init__("parser error")


class CapgParser(argparse.ArgumentParser):
    """Custom parser class for capg CLI."""

    def error(self, message, cmd_cls=None):  # pylint: disable=arguments-differ
        logger.error(message)
        self.print_usage(sys.stderr)
        raise CapgParserError()


class VersionAction(argparse.Action):  # pragma: no cover
    # pylint: disable=too-few-public-methods
    """Shows capg version and exits."""

    def __call__(self, parser, namespace, values, option_string=None):
        from ..version import __version__

        print(__version__)
        parser.exit()


def get_parent_parser():
    """Create instances of a parser containing common arguments shared among
    all the commands.
    """
    parent_parser = argparse.ArgumentParser(add_help=False)

    log_level_group = parent_parser.add_mutually_exclusive_group()
    log_level_group.add_argument(
        "-q", "--quiet", action="count", default=0, help="Be quiet."
    )
    log_level_group.add_argument(
        "-v", "--verbose", action="count", default=0, help="Be verbose."
    )
    return parent_parser


def get_main_parser():
    parent_parser = get_parent_parser()

    desc = "Describe exploits in the CAPG format and build attack graphs."
    parser = CapgParser(
        prog="capg",
        description=desc,
        parents=[parent_parser],
        formatter_class=argparse.RawTextHelpFormatter,
    )
    parser.add_argument(
        "-V",
        "--version",
        action=VersionAction,
        nargs=0,
        help="Show program's version.",
    )

    subparsers = parser.add_subparsers(
        title="Available Commands",
        metavar="COMMAND",
        dest="cmd",
        help="Use `capg COMMAND --help` for command-specific help.",
    )
    subparsers.required = True

    for cmd in COMMANDS:
        cmd.add_parser(subparsers, parent_parser)

    return parser
