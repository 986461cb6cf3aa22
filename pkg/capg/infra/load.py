"""Reading, checking and writing information-system documents."""
import json
import logging
import os
from collections import Counter
from typing import Any, Dict, List, Optional

from funcy import memoize

from ..exceptions import MalformedDocumentError
from ..position import EXTERNAL, AttackPosition
from ..record.codec import load_json
from ..record.cve import CveId
from ..record.errors import IllegalValueError
from .errors import (
    DANGLING_REFERENCE,
    DUPLICATE_ID,
    INVALID,
    DanglingReferenceError,
    DuplicateIdError,
    InvalidModelError,
    ModelProblem,
    dangling,
)
from .model import (
    FORMAT_VERSION,
    ApplicationInstance,
    CredentialEntry,
    Directory,
    DirectoryKind,
    InfraModel,
    Machine,
    NetworkTopology,
    RequiredPrivilege,
    UserAccount,
    UserScope,
    VulnInstance,
)

logger = logging.getLogger(__name__)

EXTERNAL_TOKEN = "external"
_USER_REF_KEYS = {
    UserScope.LOCAL: "machine",
    UserScope.PRIVILEGED: "machine",
    UserScope.DIRECTORY: "directory",
    UserScope.APPLICATION: "application",
}


@memoize
def get_schema() -> Dict[str, Any]:
    path = os.path.join(os.path.dirname(__file__), "schema.json")
    with open(path, encoding="utf-8") as fobj:
        return json.load(fobj)


def _check_schema(data, source: Optional[str]) -> None:
    from jsonschema import Draft7Validator

    validator = Draft7Validator(get_schema())
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.path))
    if errors:
        reasons = "; ".join(
            "{}: {}".format(
                "/".join(str(p) for p in err.path) or "<root>", err.message
            )
            for err in errors
        )
        raise MalformedDocumentError(reasons, source)


def _duplicates(kind: str, ids: List[str]) -> List[ModelProblem]:
    return [
        ModelProblem(DUPLICATE_ID, f"{kind} '{key}' is declared {count} times")
        for key, count in sorted(Counter(ids).items())
        if count > 1
    ]


def _parse_position(item) -> AttackPosition:
    if item == EXTERNAL_TOKEN:
        return EXTERNAL
    return AttackPosition(item["machine"], item["user"])


def _user_from_dict(item) -> UserAccount:
    scope = UserScope(item["scope"])
    return UserAccount(
        id=item["id"],
        scope=scope,
        ref=item[_USER_REF_KEYS[scope]],
        name=item.get("name"),
    )


def _collect_problems(data) -> List[ModelProblem]:  # noqa: C901
    """Every duplicate id, dangling reference and broken invariant."""
    problems: List[ModelProblem] = []

    machines = [m["id"] for m in data.get("machines", [])]
    directories = [d["id"] for d in data.get("directories", [])]
    users = [u["id"] for u in data.get("users", [])]
    apps = [a["id"] for a in data.get("applications", [])]
    networks = data.get("networks", {})

    problems += _duplicates("machine", machines)
    problems += _duplicates("directory", directories)
    problems += _duplicates("user", users)
    problems += _duplicates("application", apps)
    problems += _duplicates(
        "vuln",
        [json.dumps(v, sort_keys=True) for v in data.get("vulns", [])],
    )

    machine_ids, dir_ids = set(machines), set(directories)
    user_ids, app_ids = set(users), set(apps)
    users_by_id = {u["id"]: u for u in data.get("users", [])}
    apps_by_id = {a["id"]: a for a in data.get("applications", [])}

    for net, members in sorted(networks.items()):
        for machine in members:
            if machine not in machine_ids:
                problems.append(
                    dangling(f"network '{net}'", f"machine '{machine}'")
                )
    in_network = {m for members in networks.values() for m in members}
    for machine in machines:
        if machine not in in_network:
            problems.append(
                ModelProblem(
                    INVALID, f"machine '{machine}' belongs to no network"
                )
            )
    for first, second in data.get("adjacency", []):
        for net in (first, second):
            if net not in networks:
                problems.append(dangling("adjacency", f"network '{net}'"))
        if first == second:
            problems.append(
                ModelProblem(
                    INVALID, f"network '{first}' cannot be adjacent to itself"
                )
            )

    for directory in data.get("directories", []):
        for machine in directory.get("members", []):
            if machine not in machine_ids:
                problems.append(
                    dangling(
                        f"directory '{directory['id']}'",
                        f"machine '{machine}'",
                    )
                )

    privileged = Counter()
    known = {
        "machine": machine_ids,
        "directory": dir_ids,
        "application": app_ids,
    }
    for user in data.get("users", []):
        key = _USER_REF_KEYS[UserScope(user["scope"])]
        if user[key] not in known[key]:
            problems.append(
                dangling(f"user '{user['id']}'", f"{key} '{user[key]}'")
            )
        if user["scope"] == UserScope.PRIVILEGED.value:
            privileged[user["machine"]] += 1
    for machine, count in sorted(privileged.items()):
        if count > 1:
            problems.append(
                ModelProblem(
                    INVALID,
                    f"machine '{machine}' has {count} privileged accounts",
                )
            )

    for app in data.get("applications", []):
        where = f"application '{app['id']}'"
        if app["host"] not in machine_ids:
            problems.append(dangling(where, f"machine '{app['host']}'"))
        run_as = app.get("run_as")
        if run_as is not None:
            account = users_by_id.get(run_as)
            if account is None:
                problems.append(dangling(where, f"user '{run_as}'"))
            elif account.get("machine") != app["host"]:
                problems.append(
                    ModelProblem(
                        INVALID,
                        f"{where} runs as '{run_as}' which is not a local "
                        f"or privileged account of '{app['host']}'",
                    )
                )
        for user_id in app.get("accounts", []):
            account = users_by_id.get(user_id)
            if account is None:
                problems.append(dangling(where, f"user '{user_id}'"))
            elif account.get("application") != app["id"]:
                problems.append(
                    ModelProblem(
                        INVALID,
                        f"{where} lists '{user_id}' which is not one of its "
                        "application accounts",
                    )
                )

    for vuln in data.get("vulns", []):
        where = f"vuln '{vuln['cve']}'"
        try:
            CveId.parse(vuln["cve"])
        except IllegalValueError:
            problems.append(
                ModelProblem(INVALID, f"{where} has an illegal CVE id")
            )
        if "application" in vuln and vuln["application"] not in app_ids:
            problems.append(
                dangling(where, f"application '{vuln['application']}'")
            )
        if "machine" in vuln and vuln["machine"] not in machine_ids:
            problems.append(dangling(where, f"machine '{vuln['machine']}'"))
        dest = vuln.get("destination_user")
        if dest is not None and dest not in user_ids:
            problems.append(dangling(where, f"user '{dest}'"))

    for cred in data.get("credentials", []):
        where = f"credential on '{cred['holder']}'"
        if cred["holder"] not in machine_ids:
            problems.append(dangling(where, f"machine '{cred['holder']}'"))
        if cred["credential_for"] not in user_ids:
            problems.append(
                dangling(where, f"user '{cred['credential_for']}'")
            )

    for item in data.get("entry_positions", []):
        if item == EXTERNAL_TOKEN:
            continue
        where = "entry position"
        if item["machine"] not in machine_ids:
            problems.append(dangling(where, f"machine '{item['machine']}'"))
        if item["user"] not in user_ids:
            problems.append(dangling(where, f"user '{item['user']}'"))

    return problems


def _raise_for(problems: List[ModelProblem]) -> None:
    kinds = {problem.kind for problem in problems}
    if DUPLICATE_ID in kinds:
        raise DuplicateIdError(problems)
    if DANGLING_REFERENCE in kinds:
        raise DanglingReferenceError(problems)
    raise InvalidModelError(problems)


def model_from_dict(data, source: Optional[str] = None) -> InfraModel:
    _check_schema(data, source)

    problems = _collect_problems(data)
    if problems:
        for problem in problems:
            logger.debug("%s", problem)
        _raise_for(problems)

    users = {u["id"]: _user_from_dict(u) for u in data.get("users", [])}
    applications = {}
    for app in data.get("applications", []):
        accounts = set(app.get("accounts", []))
        accounts.update(
            user.id for user in users.values() if user.application == app["id"]
        )
        applications[app["id"]] = ApplicationInstance(
            id=app["id"],
            host=app["host"],
            product=app.get("product"),
            run_as=app.get("run_as"),
            app_accounts=accounts,
        )

    vulns = sorted(
        (
            VulnInstance(
                cve=CveId.parse(v["cve"]),
                application=v.get("application"),
                machine=v.get("machine"),
                destination_user=v.get("destination_user"),
            )
            for v in data.get("vulns", [])
        ),
        key=lambda v: v.sort_key,
    )
    credentials = sorted(
        (
            CredentialEntry(
                holder=c["holder"],
                credential_for=c["credential_for"],
                required_privilege=RequiredPrivilege(c["required_privilege"]),
            )
            for c in data.get("credentials", [])
        ),
        key=lambda c: c.sort_key,
    )

    entries = {_parse_position(p) for p in data.get("entry_positions", [])}
    entries = {
        pos if pos.is_external else AttackPosition(
            pos.machine, pos.user, users[pos.user].name
        )
        for pos in entries
    }

    return InfraModel(
        machines={
            m["id"]: Machine(m["id"], m.get("description"))
            for m in data.get("machines", [])
        },
        directories={
            d["id"]: Directory(
                d["id"], DirectoryKind(d["kind"]), d.get("members", [])
            )
            for d in data.get("directories", [])
        },
        topology=NetworkTopology(
            networks={
                net: frozenset(members)
                for net, members in data.get("networks", {}).items()
            },
            adjacency=[frozenset(pair) for pair in data.get("adjacency", [])],
        ),
        applications=applications,
        users=users,
        vulns=vulns,
        credentials=credentials,
        entry_positions=entries or {EXTERNAL},
    )


def load_infra(text, source: Optional[str] = None) -> InfraModel:
    """Load and fully cross-check an information-system document.

    Raises:
        MalformedDocumentError: not JSON or not shaped like the schema.
        DuplicateIdError, DanglingReferenceError, InvalidModelError: the
            model is inconsistent; the error lists every problem.
    """
    model = model_from_dict(load_json(text, source), source)
    logger.debug(
        "loaded model: %d machine(s), %d user(s), %d vuln instance(s)",
        len(model.machines),
        len(model.users),
        len(model.vulns),
    )
    return model


def _omit_none(data: Dict[str, Any]) -> Dict[str, Any]:
    return {key: value for key, value in data.items() if value is not None}


def model_to_dict(model: InfraModel) -> Dict[str, Any]:
    users = []
    for user in sorted(model.users.values(), key=lambda u: u.id):
        item = {
            "id": user.id,
            "scope": user.scope.value,
            _USER_REF_KEYS[user.scope]: user.ref,
        }
        if user.name != user.id:
            item["name"] = user.name
        users.append(item)

    def position(pos: AttackPosition):
        if pos.is_external:
            return EXTERNAL_TOKEN
        return {"machine": pos.machine, "user": pos.user}

    return {
        "format_version": FORMAT_VERSION,
        "machines": [
            _omit_none({"id": m.id, "description": m.description})
            for m in sorted(model.machines.values(), key=lambda m: m.id)
        ],
        "networks": {
            net: sorted(members)
            for net, members in sorted(model.topology.networks.items())
        },
        "adjacency": sorted(sorted(pair) for pair in model.topology.adjacency),
        "directories": [
            {"id": d.id, "kind": d.kind.value, "members": sorted(d.members)}
            for d in sorted(model.directories.values(), key=lambda d: d.id)
        ],
        "users": users,
        "applications": [
            _omit_none(
                {
                    "id": a.id,
                    "product": a.product,
                    "host": a.host,
                    "run_as": a.run_as,
                    "accounts": sorted(a.app_accounts),
                }
            )
            for a in sorted(model.applications.values(), key=lambda a: a.id)
        ],
        "vulns": [
            _omit_none(
                {
                    "cve": str(v.cve),
                    "application": v.application,
                    "machine": v.machine,
                    "destination_user": v.destination_user,
                }
            )
            for v in model.vulns
        ],
        "credentials": [
            {
                "holder": c.holder,
                "credential_for": c.credential_for,
                "required_privilege": c.required_privilege.value,
            }
            for c in model.credentials
        ],
        "entry_positions": [
            position(p)
            for p in sorted(model.entry_positions, key=lambda p: p.sort_key)
        ],
    }


def save_infra(model: InfraModel) -> str:
    """Canonical document of a model; `load_infra` reads it back equal."""
    text = json.dumps(model_to_dict(model), indent=4, ensure_ascii=False)
    return text + "\n"
