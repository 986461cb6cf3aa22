import argparse
import logging

from .command import CmdBase, ExitStatus, add_format_option

logger = logging.getLogger(__name__)


class CmdValidate(CmdBase):
    def _check_file(self, path):
        from ..record.codec import raw_records
        from ..record.model import FIELD_CVE
        from ..record.validate import validate_record
        from ..utils import read_text

        results = []
        for index, raw in enumerate(raw_records(read_text(path), path)):
            report = validate_record(raw, strict=self.strict)
            results.append(
                {"index": index, "cve": raw.get(FIELD_CVE), **report.to_dict()}
            )
        return {"path": path, "records": results}

    def run(self):
        files = [self._check_file(path) for path in self.args.files]
        errors = sum(len(r["errors"]) for f in files for r in f["records"])
        warnings = sum(len(r["warnings"]) for f in files for r in f["records"])

        if self.json_output:
            self.write_json(
                {"files": files, "errors": errors, "warnings": warnings}
            )
        else:
            for entry in files:
                for record in entry["records"]:
                    where = f"{entry['path']}: record {record['index']}"
                    if record["cve"] is not None:
                        where += f" ({record['cve']})"
                    if not record["errors"] and not record["warnings"]:
                        self.write(f"{where}: ok")
                    for problem in record["errors"]:
                        self.write(f"{where}: error: {problem['message']}")
                    for problem in record["warnings"]:
                        self.write(f"{where}: warning: {problem['message']}")
            self.write(f"{errors} error(s), {warnings} warning(s)")

        return ExitStatus.FAILURE if errors else ExitStatus.OK


def add_parser(subparsers, parent_parser):
    VALIDATE_HELP = "Check CAPG documents against the format invariants."
    parser = subparsers.add_parser(
        "validate",
        parents=[parent_parser],
        description=VALIDATE_HELP,
        help=VALIDATE_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        "files", nargs="+", metavar="<file>", help="CAPG documents."
    )
    parser.add_argument(
        "--lenient",
        action="store_true",
        default=False,
        help="Report unknown fields as warnings instead of errors.",
    )
    add_format_option(parser)
    parser.set_defaults(func=CmdValidate)
