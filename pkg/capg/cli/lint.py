import argparse
import logging

from .command import CmdBase, ExitStatus, add_format_option

logger = logging.getLogger(__name__)


class CmdLint(CmdBase):
    def run(self):
        from ..population.cvss import lint_against_cvss

        records = self.load_records(self.args.capg)
        nvd = self.load_nvd(self.args.nvd)

        warnings = []
        unchecked = []
        for record in records:
            entry = nvd.get(record.cve)
            if entry is None or entry.vector is None:
                unchecked.append(str(record.cve))
                logger.info(
                    "%s: no CVSS v3 vector available", record.cve.label
                )
                continue
            warnings.extend(lint_against_cvss(record, entry.vector))

        if self.json_output:
            self.write_json(
                {
                    "warnings": [warning.to_dict() for warning in warnings],
                    "unchecked": unchecked,
                }
            )
        else:
            for warning in warnings:
                self.write(f"warning: {warning}")
            self.write(
                f"{len(warnings)} warning(s), {len(records) - len(unchecked)} "
                f"record(s) checked"
            )
        return ExitStatus.OK


def add_parser(subparsers, parent_parser):
    LINT_HELP = "Compare CAPG records with the CVSS vectors published by NVD."
    parser = subparsers.add_parser(
        "lint",
        parents=[parent_parser],
        description=LINT_HELP,
        help=LINT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        "--capg",
        nargs="+",
        required=True,
        metavar="<file>",
        help="CAPG documents.",
    )
    parser.add_argument(
        "--nvd",
        required=True,
        metavar="<dir>",
        help="Directory of NVD CVE-*.json documents.",
    )
    parser.add_argument(
        "--lenient",
        action="store_true",
        default=False,
        help="Report unknown CAPG fields as warnings instead of errors.",
    )
    add_format_option(parser)
    parser.set_defaults(func=CmdLint)
