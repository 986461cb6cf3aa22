from attrs import evolve
from hypothesis import given, settings
from hypothesis import strategies as st

from capg.graph.build import (
    NO_VULN_INSTANCE,
    VULN_CLASS_MISMATCH,
    build_graph,
)
from capg.infra.load import model_from_dict
from capg.position import EXTERNAL
from capg.record.cve import CveId
from capg.record.enums import VulnClass

from ...oracles import edge_key, naive_closure
from ...strategies import CVE_POOL, infra_documents, records

TWO_HOSTS_EDGES = {
    ("attacker@internet", "u-tomcat@m0", "CVE-2021-44228"),
    ("u-tomcat@m0", "root@m0", "CVE-2021-38648"),
    ("root@m0", "u-bitbkt@m0", "credentials"),
    ("u-bitbkt@m0", "u-bitbkt@m1", "CVE-2022-36804"),
}

scenarios = st.tuples(
    infra_documents(),
    st.lists(records(cves=st.sampled_from(CVE_POOL)), max_size=5),
)


def labels(graph):
    return {
        (edge.source.label, edge.destination.label, edge.label)
        for edge in graph.edges
    }


def test_two_hosts(two_hosts_graph):
    assert {node.label for node in two_hosts_graph.nodes} == {
        "attacker@internet",
        "u-tomcat@m0",
        "root@m0",
        "u-bitbkt@m0",
        "u-bitbkt@m1",
    }
    assert labels(two_hosts_graph) == TWO_HOSTS_EDGES
    assert two_hosts_graph.entry_positions == {EXTERNAL}
    assert two_hosts_graph.warnings == ()


def test_two_hosts_without_subsumption(two_hosts_model, sample_records):
    graph = build_graph(
        two_hosts_model, sample_records, subsume_external=False
    )
    assert len(graph.nodes) == 5
    # log4j is exploited again from every position but its own target
    assert labels(graph) - TWO_HOSTS_EDGES == {
        ("root@m0", "u-tomcat@m0", "CVE-2021-44228"),
        ("u-bitbkt@m0", "u-tomcat@m0", "CVE-2021-44228"),
        ("u-bitbkt@m1", "u-tomcat@m0", "CVE-2021-44228"),
    }


def test_rationale_and_scores(two_hosts_model, sample_records):
    graph = build_graph(
        two_hosts_model, sample_records, scores={CveId(2021, 44228): 10.0}
    )
    by_label = {edge.label: edge for edge in graph.edges}
    log4j = by_label["CVE-2021-44228"].via
    assert log4j.score == 10.0
    assert log4j.vuln_location == "m0"
    assert log4j.rationale == (
        "machines_constraints:unconstrained",
        "user_source:any-user",
    )
    assert by_label["CVE-2021-38648"].via.score is None
    assert by_label["credentials"].via.score is None


def test_no_records(two_hosts_model):
    graph = build_graph(two_hosts_model, [])
    assert graph.nodes == {EXTERNAL}
    assert not graph.edges


def test_warnings(two_hosts_model, sample_records):
    heartbleed = evolve(sample_records[0], cve=CveId(2014, 160))
    as_os = evolve(sample_records[1], vuln_class=VulnClass.OPERATING_SYSTEM)
    records = [sample_records[0], heartbleed, as_os]
    graph = build_graph(two_hosts_model, records)

    kinds = [warning.kind for warning in graph.warnings]
    assert kinds == [NO_VULN_INSTANCE, VULN_CLASS_MISMATCH]
    assert "CVE-2014-0160" in graph.warnings[0].message
    assert labels(graph) == {
        ("attacker@internet", "u-tomcat@m0", "CVE-2021-44228")
    }


def test_duplicate_records_are_ignored(
    two_hosts_model, sample_records, two_hosts_graph
):
    records = sample_records + sample_records[::-1]
    assert build_graph(two_hosts_model, records) == two_hosts_graph


@settings(max_examples=200)
@given(scenarios, st.booleans())
def test_agrees_with_naive_closure(scenario, subsume):
    document, generated = scenario
    model = model_from_dict(document)
    graph = build_graph(model, generated, subsume_external=subsume, jobs=2)

    nodes, edges = naive_closure(model, generated, subsume_external=subsume)
    assert graph.nodes == nodes
    assert {edge_key(edge) for edge in graph.edges} == edges
    assert all(edge.source != edge.destination for edge in graph.edges)


@settings(max_examples=50)
@given(scenarios)
def test_thread_count_does_not_matter(scenario):
    document, generated = scenario
    model = model_from_dict(document)
    first = build_graph(model, generated, jobs=1)
    second = build_graph(model, generated[::-1], jobs=4)
    assert first == second
    assert first.warnings == second.warnings


@settings(max_examples=100)
@given(
    scenarios,
    st.lists(records(cves=st.sampled_from(CVE_POOL)), max_size=3),
)
def test_more_records_reach_more(scenario, extra):
    document, generated = scenario
    model = model_from_dict(document)

    smaller = build_graph(model, generated, subsume_external=False)
    larger = build_graph(model, generated + extra, subsume_external=False)
    assert smaller.nodes <= larger.nodes
    assert smaller.edges <= larger.edges

    subsumed = build_graph(model, generated + extra)
    assert smaller.nodes <= subsumed.nodes


@settings(max_examples=100)
@given(scenarios, st.booleans())
def test_rebuilding_from_reached_positions(scenario, subsume):
    document, generated = scenario
    model = model_from_dict(document)
    graph = build_graph(model, generated, subsume_external=subsume)

    again = build_graph(
        evolve(model, entry_positions=graph.nodes),
        generated,
        subsume_external=subsume,
    )
    assert again.nodes == graph.nodes
    assert again.edges == graph.edges


@settings(max_examples=100)
@given(
    scenarios,
    st.lists(records(cves=st.sampled_from(CVE_POOL)), max_size=3),
)
def test_more_records_keep_subsumed_edges(scenario, extra):
    document, generated = scenario
    model = model_from_dict(document)

    smaller = build_graph(model, generated)
    larger = build_graph(model, generated + extra)
    assert smaller.nodes <= larger.nodes
    assert smaller.edges <= larger.edges


@settings(max_examples=100)
@given(
    scenarios,
    st.sampled_from(["privileged", "any-local"]),
    st.data(),
)
def test_more_credentials_reach_more(scenario, privilege, data):
    document, generated = scenario
    machines = [machine["id"] for machine in document["machines"]]
    users = [user["id"] for user in document["users"]]
    entry = {
        "holder": data.draw(st.sampled_from(machines)),
        "credential_for": data.draw(st.sampled_from(users)),
        "required_privilege": privilege,
    }
    extended = dict(
        document, credentials=document["credentials"] + [entry]
    )

    before = build_graph(model_from_dict(document), generated)
    after = build_graph(model_from_dict(extended), generated)
    assert before.nodes <= after.nodes
    assert before.edges <= after.edges
