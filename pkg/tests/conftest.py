import os

import pytest
from hypothesis import HealthCheck, settings

from capg.graph.build import build_graph
from capg.infra.load import load_infra
from capg.record.codec import parse_capg

from .utils import read_fixture


settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(autouse=True)
def isolate_config(tmp_path_factory, monkeypatch):
    """Keep user and system config files out of the tests."""
    from capg.config import Config

    root = tmp_path_factory.mktemp("config")

    def get_dir(cls, level):
        return os.fspath(root / level)

    monkeypatch.setattr(Config, "get_dir", classmethod(get_dir))


@pytest.fixture
def tmp_dir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture
def sample_text():
    return read_fixture("sample-records.json")


@pytest.fixture
def sample_records(sample_text):
    return parse_capg(sample_text)


@pytest.fixture
def two_hosts_model():
    return load_infra(read_fixture("two-hosts.json"), "two-hosts.json")


@pytest.fixture
def two_hosts_graph(two_hosts_model, sample_records):
    return build_graph(two_hosts_model, sample_records, jobs=1)
