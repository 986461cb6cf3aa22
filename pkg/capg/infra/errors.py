from typing import Sequence

from attrs import frozen

from ..exceptions import CapgException

DUPLICATE_ID = "DuplicateId"
DANGLING_REFERENCE = "DanglingReference"
INVALID = "Invalid"


@frozen
class ModelProblem:
    kind: str
    message: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.message}"


def dangling(source: str, target: str) -> ModelProblem:
    return ModelProblem(
        DANGLING_REFERENCE, f"{source} references unknown {target}"
    )


class InfraModelError(CapgException):
    """Base class for rejected information-system models.

    Loading is total: `problems` lists everything wrong with the document,
    not only the first problem.
    """

    def __init__(self, problems: Sequence[ModelProblem]):
        assert problems
        self.problems = list(problems)
        lines = "\n".join(f"\t- {problem}" for problem in self.problems)
        super().__init__(
            f"invalid information-system model "
            f"({len(self.problems)} problem(s)):\n{lines}"
        )


class DuplicateIdError(InfraModelError):
    pass


class DanglingReferenceError(InfraModelError):
    pass


class InvalidModelError(InfraModelError):
    pass


class UnknownMachineError(CapgException):
    def __init__(self, machine):
        self.machine = machine
        super().__init__(f"unknown machine '{machine}'")


class UnknownUserError(CapgException):
    def __init__(self, user):
        self.user = user
        super().__init__(f"unknown user '{user}'")
