import json
import logging
import sys
from abc import ABC, abstractmethod
from enum import IntEnum
from typing import Dict, List, Optional, Tuple

from funcy import cached_property

from ..exceptions import CapgException, InvalidArgumentError
from ..position import EXTERNAL, EXTERNAL_LABEL, AttackPosition

logger = logging.getLogger(__name__)

FORMATS = ("text", "json")


class ExitStatus(IntEnum):
    OK = 0
    FAILURE = 1
    ERROR = 2


class TargetError(InvalidArgumentError):
    def __init__(self, text, reason):
        self.text = text
        super().__init__(f"invalid target '{text}': {reason}")


class NotAPositionError(CapgException):
    def __init__(self, text):
        self.text = text
        super().__init__(f"'{text}' is not a position of the graph")


def parse_target(text: str) -> Tuple[str, str]:
    user, sep, machine = (text or "").rpartition("@")
    if not sep or not user or not machine:
        raise TargetError(text, "expected user@machine")
    return user, machine


def find_position(graph, text: str) -> AttackPosition:
    """Graph node designated by `user@machine`.

    `user` is the account name or its id. `attacker@internet` is the
    external position.
    """
    user, machine = parse_target(text)
    if text == EXTERNAL_LABEL:
        if EXTERNAL in graph:
            return EXTERNAL
        raise NotAPositionError(text)

    candidates = [
        node
        for node in graph.sorted_nodes()
        if node.machine == machine and user in (node.user, node.name)
    ]
    by_id = [node for node in candidates if node.user == user]
    if by_id:
        return by_id[0]
    if len(candidates) > 1:
        raise TargetError(text, "ambiguous account name, use the account id")
    if not candidates:
        raise NotAPositionError(text)
    return candidates[0]


class CmdBase(ABC):
    # exceptions reported with ExitStatus.FAILURE; other errors are ERROR
    FAILURES: Tuple[type, ...] = ()

    def __init__(self, args):
        self.args = args

    @cached_property
    def config(self):
        from ..config import Config

        return Config()

    @property
    def json_output(self) -> bool:
        return getattr(self.args, "format", "text") == "json"

    def write(self, text: str = "") -> None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        sys.stdout.flush()

    def write_json(self, data) -> None:
        self.write(json.dumps(data, indent=2, ensure_ascii=False))

    def report_error(self, exc: CapgException) -> None:
        logger.debug("%s failed", type(self).__name__, exc_info=True)
        if self.json_output:
            self.write_json(
                {"error": {"type": type(exc).__name__, "message": exc.msg}}
            )
        else:
            logger.error(exc.msg)

    def do_run(self) -> ExitStatus:
        try:
            return ExitStatus(self.run())
        except self.FAILURES as exc:
            self.report_error(exc)
            return ExitStatus.FAILURE
        except CapgException as exc:
            self.report_error(exc)
            return ExitStatus.ERROR
        except OSError as exc:
            self.report_error(CapgException(f"I/O error: {exc}"))
            return ExitStatus.ERROR

    @abstractmethod
    def run(self) -> int:
        pass

    # helpers shared by the commands

    @property
    def strict(self) -> bool:
        if getattr(self.args, "lenient", False):
            return False
        return self.config["capg"]["strict"]

    def load_records(self, paths: List[str]):
        from ..record.codec import parse_capg
        from ..utils import read_text

        records = []
        for path in paths:
            records.extend(
                parse_capg(read_text(path), strict=self.strict, source=path)
            )
        return records

    def load_infra(self, path: str):
        from ..infra.load import load_infra
        from ..utils import read_text

        return load_infra(read_text(path), source=path)

    def load_nvd(self, path: Optional[str]) -> Dict:
        from ..population.nvd import load_nvd_dir

        if not path:
            return {}
        return load_nvd_dir(path)

    def build(self):
        from ..graph.build import build_graph

        model = self.load_infra(self.args.infra)
        records = self.load_records(self.args.capg)
        scores = {
            cve: nvd.base_score
            for cve, nvd in self.load_nvd(self.args.nvd).items()
            if nvd.base_score is not None
        }
        graph_conf = self.config["graph"]
        jobs = self.args.jobs
        if jobs is None:
            jobs = graph_conf.get("jobs", self.config["core"].get("jobs"))
        return build_graph(
            model,
            records,
            scores=scores,
            jobs=jobs,
            subsume_external=graph_conf["subsume_external"],
        )


def add_format_option(parser) -> None:
    parser.add_argument(
        "--format",
        choices=FORMATS,
        default="text",
        help="Report format (default: text).",
    )


def add_graph_inputs(parser) -> None:
    parser.add_argument(
        "--infra",
        required=True,
        metavar="<file>",
        help="Information system model (JSON).",
    )
    parser.add_argument(
        "--capg",
        nargs="*",
        default=[],
        metavar="<file>",
        help="CAPG documents.",
    )
    parser.add_argument(
        "--nvd",
        metavar="<dir>",
        help="Directory of NVD CVE-*.json documents providing CVSS scores.",
    )
    parser.add_argument(
        "-j",
        "--jobs",
        type=int,
        metavar="<number>",
        help="Number of threads expanding attack positions.",
    )
    parser.add_argument(
        "--lenient",
        action="store_true",
        default=False,
        help="Report unknown CAPG fields as warnings instead of errors.",
    )
