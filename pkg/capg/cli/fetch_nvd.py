import argparse
import logging

from ..exceptions import CapgException
from .command import CmdBase, ExitStatus, add_format_option

logger = logging.getLogger(__name__)


class NetworkDisabledError(CapgException):
    def __init__(self):
        super().__init__(
            "network access is disabled, pass --allow-network or set "
            "'nvd.allow_network'"
        )


class CmdFetchNvd(CmdBase):
    def run(self):
        import fsspec

        from ..population.nvd import load_nvd_record
        from ..record.cve import CveId
        from ..utils import write_text

        conf = self.config["nvd"]
        if not (self.args.allow_network or conf["allow_network"]):
            raise NetworkDisabledError()

        cve = CveId.parse(self.args.cve)
        url = conf["url"].format(cve=cve)
        logger.debug("fetching %s from '%s'", cve.label, url)
        with fsspec.open(url, "r", encoding="utf-8") as fobj:
            text = fobj.read()

        record = load_nvd_record(text, url)
        write_text(self.args.out, text)
        if self.json_output:
            self.write_json(
                {
                    "cve": str(record.cve),
                    "cpes": list(record.cpes),
                    "vector": str(record.vector) if record.vector else None,
                    "base_score": record.base_score,
                }
            )
            return ExitStatus.OK
        self.write(
            f"{record.cve.label}: {len(record.cpes)} CPE(s), "
            f"vector {record.vector or 'absent'}"
        )
        return ExitStatus.OK


def add_parser(subparsers, parent_parser):
    FETCH_HELP = "Download the NVD document of a CVE (network access)."
    parser = subparsers.add_parser(
        "fetch-nvd",
        parents=[parent_parser],
        description=FETCH_HELP,
        help=FETCH_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--cve", required=True, metavar="<id>", help="CVE id.")
    parser.add_argument(
        "--out", required=True, metavar="<path>", help="Destination file."
    )
    parser.add_argument(
        "--allow-network",
        action="store_true",
        default=False,
        help="Allow the download.",
    )
    add_format_option(parser)
    parser.set_defaults(func=CmdFetchNvd)
