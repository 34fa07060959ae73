"""
Fixture condivise: gli esempi inclusi, caricati una volta per sessione.
"""
import pytest

from cubegrowth.core.examples import load_bundled


@pytest.fixture(scope="session")
def fig1():
    return load_bundled("fig1")


@pytest.fixture(scope="session")
def square():
    return load_bundled("square")


@pytest.fixture(scope="session")
def cube3():
    return load_bundled("cube3")


@pytest.fixture(scope="session")
def tree4():
    return load_bundled("tree4")


@pytest.fixture(scope="session")
def flagfail():
    return load_bundled("flagfail")


@pytest.fixture(scope="session")
def genus2():
    return load_bundled("genus2")


@pytest.fixture(scope="session")
def npc_examples(fig1, square, cube3, tree4, genus2):
    return [fig1, square, cube3, tree4, genus2]


@pytest.fixture(scope="session")
def simply_connected(square, cube3, tree4):
    return [square, cube3, tree4]
