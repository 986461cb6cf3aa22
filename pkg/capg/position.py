"""Attack positions: the (machine, user) pairs an attacker can hold."""
from typing import Optional

from attrs import field, frozen

EXTERNAL_LABEL = "attacker@internet"


@frozen
class AttackPosition:
    """An attacker controlling account `user` on `machine`.

    `machine` and `user` are ids from the information-system model. Both
    are None for the external position (an arbitrary machine outside the
    audited system, with an arbitrary user). `name` is the login of the
    account, used for display only.
    """

    machine: Optional[str] = None
    user: Optional[str] = None
    name: Optional[str] = field(default=None, eq=False, repr=False)

    def __attrs_post_init__(self):
        assert (self.machine is None) == (self.user is None)
        if self.name is None:
            object.__setattr__(self, "name", self.user)

    @property
    def is_external(self) -> bool:
        return self.machine is None

    @property
    def label(self) -> str:
        if self.is_external:
            return EXTERNAL_LABEL
        return f"{self.name}@{self.machine}"

    @property
    def sort_key(self):
        if self.is_external:
            return (0, "", "")
        return (1, self.machine, self.user)

    def __str__(self) -> str:
        return self.label

    def to_dict(self):
        if self.is_external:
            return {"machine": None, "user": None}
        data = {"machine": self.machine, "user": self.user}
        if self.name != self.user:
            data["name"] = self.name
        return data

    @classmethod
    def from_dict(cls, data) -> "AttackPosition":
        return cls(data.get("machine"), data.get("user"), data.get("name"))


EXTERNAL = AttackPosition()
