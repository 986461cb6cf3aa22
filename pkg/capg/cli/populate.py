import argparse
import logging

from ..exceptions import CapgException
from ..population.errors import PopulationError
from ..record.errors import CapgRecordError
from .command import CmdBase, ExitStatus, add_format_option

logger = logging.getLogger(__name__)


class CmdPopulate(CmdBase):
    FAILURES = (PopulationError, CapgRecordError)

    def do_run(self):
        from ..population.transcript import load_transcript
        from ..record.cve import CveId
        from ..utils import read_text

        # bad ids and unreadable transcripts are input errors
        try:
            self.cve = CveId.parse(self.args.cve)
            self.transcript = load_transcript(
                read_text(self.args.transcript), self.args.transcript
            )
        except CapgException as exc:
            self.report_error(exc)
            return ExitStatus.ERROR
        return super().do_run()

    def run(self):
        from ..population.assemble import assemble_record
        from ..record.codec import serialize_capg
        from ..utils import write_text

        record = assemble_record(
            self.cve, self.args.exploit, self.args.cpe, self.transcript
        )
        document = serialize_capg([record])
        if self.args.out:
            write_text(self.args.out, document)
            logger.info("wrote %s to '%s'", record.cve.label, self.args.out)

        if self.json_output:
            self.write_json({"record": record.to_dict()})
        elif not self.args.out:
            self.write(document)
        return ExitStatus.OK


def add_parser(subparsers, parent_parser):
    POPULATE_HELP = "Derive a CAPG record from recorded exploitation trials."
    parser = subparsers.add_parser(
        "populate",
        parents=[parent_parser],
        description=POPULATE_HELP,
        help=POPULATE_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--cve", required=True, metavar="<id>", help="CVE id.")
    parser.add_argument(
        "--exploit", required=True, metavar="<url>", help="Exploit URL."
    )
    parser.add_argument(
        "--cpe",
        required=True,
        metavar="<cpe>",
        help="CPE 2.3 name of the vulnerable product.",
    )
    parser.add_argument(
        "--transcript",
        required=True,
        metavar="<file>",
        help="Trial transcript (JSON).",
    )
    parser.add_argument(
        "-o", "--out", metavar="<path>", help="Write the CAPG document here."
    )
    add_format_option(parser)
    parser.set_defaults(func=CmdPopulate)
