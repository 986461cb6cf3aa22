"""Brute-force reference implementations used by the property suites.

Nothing here calls the capg function it is compared with: predicates are
re-evaluated from the raw model data, closures are computed naively.
"""
from urllib.parse import urlparse

from capg.position import EXTERNAL, AttackPosition

UNRESOLVED = "unresolved"
MISMATCH = "mismatch"

MACHINE_TOKENS = {
    "same",
    "different",
    "unconstrained",
    "same-windows-domain",
    "same-ldap",
    "adjacent-network",
}
USER_TOKENS = {"same", "different", "same-application"}
CHARACTERISTICS = {
    "application",
    "machine-local",
    "directory",
    "any-user",
    "system-or-root",
}
VULN_CLASSES = {"application", "operating-system", "hardware"}
DIRECTORY_FACTS = {
    "windows-domain": "same-windows-domain",
    "ldap": "same-ldap",
}
FIELDS = {
    "CVE",
    "exploit",
    "vuln_class",
    "machines_constraints",
    "users_constraints",
    "user_source",
    "user_destination",
}


# record invariants


def _cve_ok(value):
    if not isinstance(value, str):
        return False
    if value.startswith("CVE-"):
        value = value[4:]
    year, sep, number = value.partition("-")
    if not sep or len(year) != 4 or not year.isdigit():
        return False
    if not (year + number).isascii() or not number.isdigit():
        return False
    if len(number) < 4:
        return False
    if len(number) > 4 and number[0] == "0":
        return False
    return 1999 <= int(year) <= 2100 and int(number) >= 1


def _tokens_ok(value, vocabulary):
    return (
        isinstance(value, list)
        and all(isinstance(t, str) and t in vocabulary for t in value)
        and len(set(value)) == len(value)
    )


def record_is_valid(raw, strict=True):
    """Independent checker of every CAPG record invariant."""
    if not isinstance(raw, dict):
        return False
    if strict and set(raw) - FIELDS:
        return False
    if not FIELDS <= set(raw):
        return False

    if not _cve_ok(raw["CVE"]):
        return False
    exploit = raw["exploit"]
    if not isinstance(exploit, str) or not exploit.strip():
        return False
    try:
        parsed = urlparse(exploit)
    except ValueError:
        return False
    if not (parsed.scheme and parsed.netloc):
        return False
    vuln_class = raw["vuln_class"]
    if not isinstance(vuln_class, str) or vuln_class not in VULN_CLASSES:
        return False

    machines = raw["machines_constraints"]
    if not _tokens_ok(machines, MACHINE_TOKENS) or not machines:
        return False
    if "same" in machines and "different" in machines:
        return False
    if "unconstrained" in machines and len(machines) > 1:
        return False
    if "same" in machines and len(machines) > 1:
        return False

    users = raw["users_constraints"]
    if not _tokens_ok(users, USER_TOKENS):
        return False
    if "same" in users and "different" in users:
        return False

    source = raw["user_source"]
    if not isinstance(source, str) or source not in CHARACTERISTICS:
        return False
    destination = raw["user_destination"]
    if not isinstance(destination, str) or destination not in CHARACTERISTICS:
        return False
    return destination != "any-user"


# information-system predicates


def machine_facts(model, src, dst):
    facts = {"unconstrained", "same" if src == dst else "different"}
    for directory in model.directories.values():
        if src in directory.members and dst in directory.members:
            facts.add(DIRECTORY_FACTS[directory.kind.value])
    networks = model.topology.networks.items()
    src_nets = {net for net, members in networks if src in members}
    dst_nets = {net for net, members in networks if dst in members}
    if src_nets & dst_nets or any(
        frozenset((a, b)) in model.topology.adjacency
        for a in src_nets
        for b in dst_nets
    ):
        facts.add("adjacent-network")
    return facts


def user_facts(model, user_id, machine):
    user = model.users[user_id]
    scope = user.scope.value
    facts = {"any-user"}
    if scope in ("local", "privileged") and user.ref == machine:
        facts.add("machine-local")
    if scope == "privileged" and user.ref == machine:
        facts.add("system-or-root")
    if scope == "directory" and machine in model.directories[user.ref].members:
        facts.add("directory")
    if scope == "application":
        facts.add("application")
    return facts


def _host(model, vuln):
    if vuln.application is not None:
        return model.applications[vuln.application].host
    return vuln.machine


def _app_accounts(model, vuln):
    if vuln.application is None:
        return set()
    return set(model.applications[vuln.application].app_accounts)


def _privileged(model, machine):
    for user in model.users.values():
        if user.scope.value == "privileged" and user.ref == machine:
            return user.id
    return None


def _destination_user(model, record, vuln):
    kind = record.user_destination.value
    if kind == "system-or-root":
        return _privileged(model, _host(model, vuln))
    if kind == "machine-local" and vuln.application is not None:
        return (
            model.applications[vuln.application].run_as
            or vuln.destination_user
        )
    return vuln.destination_user


def applicable_outcome(record, vuln, source, model):
    """("yes", destination), ("no", None), MISMATCH or UNRESOLVED."""
    is_app = record.vuln_class.value == "application"
    if is_app != (vuln.application is not None):
        return MISMATCH

    host = _host(model, vuln)
    wanted = {c.value for c in record.machines_constraints}
    if source.is_external:
        machines_ok = wanted == {"unconstrained"}
    else:
        machines_ok = wanted <= machine_facts(model, source.machine, host)

    kind = record.user_source.value
    if kind == "any-user":
        source_ok = True
    elif source.is_external:
        source_ok = False
    elif kind == "application":
        source_ok = source.user in _app_accounts(model, vuln)
    elif kind == "directory":
        source_ok = "directory" in user_facts(model, source.user, host)
    else:
        source_ok = kind in user_facts(model, source.user, source.machine)

    if not (machines_ok and source_ok):
        return ("no", None)

    user_id = _destination_user(model, record, vuln)
    if user_id is None:
        return UNRESOLVED
    destination = AttackPosition(host, user_id, model.users[user_id].name)

    users = {c.value for c in record.users_constraints}
    accounts = _app_accounts(model, vuln)
    checks = {
        "same": source.user == user_id,
        "different": source.user != user_id,
        "same-application": source.user in accounts and user_id in accounts,
    }
    if all(checks[c] for c in users):
        return ("yes", destination)
    return ("no", None)


def pivots(position, model):
    if position.is_external:
        return set()
    user = model.users[position.user]
    local = user.scope.value in ("local", "privileged") and (
        user.ref == position.machine
    )
    root = user.scope.value == "privileged" and user.ref == position.machine
    found = set()
    for entry in model.credentials:
        if entry.holder != position.machine:
            continue
        if entry.required_privilege.value == "privileged" and not root:
            continue
        if entry.required_privilege.value == "any-local" and not local:
            continue
        if entry.credential_for == position.user:
            continue
        found.add(
            (
                AttackPosition(
                    position.machine,
                    entry.credential_for,
                    model.users[entry.credential_for].name,
                ),
                entry,
            )
        )
    return found


# graphs


def edge_key(edge):
    via = edge.via
    if via.kind == "cve":
        label = ("cve", via.cve, via.exploit, via.vuln_location)
    else:
        label = ("credentials", via.entry)
    return (edge.source, edge.destination, label)


def naive_closure(model, records, subsume_external=True):
    """Nodes and edge keys of the graph, by repeated full evaluation."""
    records = list(dict.fromkeys(records))
    vulns = list(model.vulns)

    def cve_edges(position):
        found = set()
        for record in records:
            for vuln in vulns:
                if vuln.cve != record.cve:
                    continue
                outcome = applicable_outcome(record, vuln, position, model)
                if isinstance(outcome, tuple) and outcome[0] == "yes":
                    found.add((record, vuln, outcome[1]))
        return found

    subsumed = set()
    if subsume_external and EXTERNAL in model.entry_positions:
        subsumed = cve_edges(EXTERNAL)

    nodes = set(model.entry_positions)
    edges = set()
    while True:
        new_edges = set()
        for position in nodes:
            for record, vuln, destination in cve_edges(position):
                if destination == position:
                    continue
                if not position.is_external and (
                    (record, vuln, destination) in subsumed
                ):
                    continue
                new_edges.add(
                    (
                        position,
                        destination,
                        (
                            "cve",
                            record.cve,
                            record.exploit,
                            _host(model, vuln),
                        ),
                    )
                )
            for destination, entry in pivots(position, model):
                new_edges.add((position, destination, ("credentials", entry)))
        new_nodes = nodes | {dst for _, dst, _ in new_edges}
        if new_edges <= edges and new_nodes == nodes:
            return nodes, edges
        nodes = new_nodes
        edges |= new_edges


def exhaustive_paths(graph, target, max_len):
    """Every simple path from an entry position to target, as edge tuples."""
    out = {}
    for edge in graph.edges:
        out.setdefault(edge.source, []).append(edge)

    found = set()
    for entry in graph.entry_positions:
        if entry == target:
            found.add(())
            continue
        stack = [(entry, (), {entry})]
        while stack:
            node, path, seen = stack.pop()
            if node == target:
                found.add(path)
                continue
            if len(path) == max_len:
                continue
            for edge in out.get(node, []):
                if edge.destination in seen:
                    continue
                stack.append(
                    (
                        edge.destination,
                        path + (edge,),
                        seen | {edge.destination},
                    )
                )
    return found


def bfs_distance(graph, target):
    frontier = set(graph.entry_positions)
    seen = set(frontier)
    distance = 0
    while frontier:
        if target in frontier:
            return distance
        frontier = {
            edge.destination
            for edge in graph.edges
            if edge.source in frontier and edge.destination not in seen
        }
        seen |= frontier
        distance += 1
    return None
