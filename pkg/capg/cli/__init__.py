"""This module provides an entrypoint to the capg cli and parsing utils."""
import logging

from .command import ExitStatus

logger = logging.getLogger("capg")


def parse_args(argv=None):
    """Parses CLI arguments.

    Args:
        argv: optional list of arguments to parse. sys.argv is used by
            default.

    Raises:
        CapgParserError: raised for argument parsing errors.
    """
    from .parser import get_main_parser

    parser = get_main_parser()
    return parser.parse_args(argv)


def _log_level(args, config):
    from ..logger import TRACE_LEVEL

    if args.quiet:
        return logging.CRITICAL
    if args.verbose == 1:
        return logging.DEBUG
    if args.verbose > 1:
        return TRACE_LEVEL
    level = config["core"].get("loglevel")
    return logging.getLevelName(level.upper()) if level else logging.INFO


def main(argv=None) -> int:
    """Run capg CLI command.

    Args:
        argv: optional list of arguments to parse. sys.argv is used by
            default.

    Returns:
        int: command's return code.
    """
    from ..config import ConfigError
    from ..logger import ColorFormatter, set_loggers_level
    from .parser import CapgParserError

    outer_level = logger.level
    outer_color = ColorFormatter.color
    try:
        args = parse_args(argv)
        cmd = args.func(args)
        config = cmd.config
        set_loggers_level(_log_level(args, config))
        if config["core"]["no_color"]:
            ColorFormatter.color = False
        return int(cmd.do_run())
    except CapgParserError:
        return int(ExitStatus.ERROR)
    except ConfigError as exc:
        logger.error(exc.msg)
        return int(ExitStatus.ERROR)
    except KeyboardInterrupt:
        logger.error("interrupted by the user")
        return int(ExitStatus.ERROR)
    finally:
        set_loggers_level(outer_level or logging.INFO)
        ColorFormatter.color = outer_color
