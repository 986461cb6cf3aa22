from voluptuous import All, Any, Coerce, Lower, Optional, Range

Bool = All(
    Lower,
    Any("true", "false"),
    lambda v: v == "true",
    msg="expected true or false",
)


def Choices(*choices):
    """Checks that value belongs to the specified set of values

    Args:
        *choices: pass allowed values as arguments, or pass a list or
            tuple as a single argument
    """
    return Any(*choices, msg="expected one of {}".format(", ".join(choices)))


Jobs = All(Coerce(int), Range(1))

DEFAULT_NVD_URL = (
    "https://services.nvd.nist.gov/rest/json/cves/2.0?cveId=CVE-{cve}"
)

SCHEMA = {
    "core": {
        "loglevel": All(
            Lower, Choices("trace", "debug", "info", "warning", "error")
        ),
        Optional("no_color", default=False): Bool,
        "jobs": Jobs,
    },
    "capg": {
        Optional("strict", default=True): Bool,
    },
    "graph": {
        Optional("subsume_external", default=True): Bool,
        "jobs": Jobs,
    },
    "paths": {
        Optional("max_len", default=10): All(Coerce(int), Range(1)),
        Optional("rank", default="length"): All(
            Lower, Choices("length", "severity")
        ),
    },
    "nvd": {
        Optional("url", default=DEFAULT_NVD_URL): str,
        Optional("allow_network", default=False): Bool,
    },
}
