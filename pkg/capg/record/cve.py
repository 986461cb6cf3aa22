import re

from attrs import frozen

from .errors import IllegalValueError

MIN_YEAR = 1999
MAX_YEAR = 2100

_CVE_RE = re.compile(r"^(?:CVE-)?(?P<year>[0-9]{4})-(?P<number>[0-9]{4,})\Z")


@frozen(order=True)
class CveId:
    year: int
    number: int

    def __str__(self) -> str:
        return f"{self.year}-{self.number:04d}"

    @property
    def label(self) -> str:
        return f"CVE-{self}"

    @classmethod
    def parse(cls, text: str, field: str = "CVE") -> "CveId":
        """Parse `YEAR-NUMBER`, tolerating the NVD `CVE-` prefix."""
        match = _CVE_RE.match(text) if isinstance(text, str) else None
        if not match:
            raise IllegalValueError(field, text)

        digits = match.group("number")
        # only the 4-digit printed width may be zero padded
        if len(digits) > 4 and digits.startswith("0"):
            raise IllegalValueError(field, text)

        year = int(match.group("year"))
        number = int(digits)
        if not MIN_YEAR <= year <= MAX_YEAR or number < 1:
            raise IllegalValueError(field, text)
        return cls(year, number)
