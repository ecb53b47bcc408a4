import pytest

from soscascade import data as shipped
from soscascade import load_catalog, load_topology


@pytest.fixture(scope="session")
def gateway_graph():
    return load_topology(shipped.default_topology_path())


@pytest.fixture(scope="session")
def catalog():
    return load_catalog(shipped.default_catalog_path())
