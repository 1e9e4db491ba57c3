import hypothesis
import numpy as np
import pytest

from tests.fabrica import maquina

np.seterr(all="warn")

hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=30, deadline=None, derandomize=True)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False)
hypothesis.settings.load_profile("ci")


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="roda também os testes marcados como slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    pular = pytest.mark.skip(reason="precisa de --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(pular)


@pytest.fixture
def m1():
    """p -push s-> q e laço +1 em q, com as reversas"""
    return maquina([("p", 0, "push s", "q"), ("q", 1, None, "q")])


@pytest.fixture
def descida():
    """p -(-1)-> q com a reversa"""
    return maquina([("p", -1, None, "q")])


@pytest.fixture
def salto_dois():
    """p -(+2)-> q com a reversa"""
    return maquina([("p", 2, None, "q")])
