import os

import pytest

from src.constructions import alternating_group, symmetric_group


@pytest.fixture(autouse=True)
def clean_pel_env(monkeypatch):
    """Variáveis PEL_* do ambiente do desenvolvedor não vazam para os testes."""
    for name in list(os.environ):
        if name.startswith("PEL_"):
            monkeypatch.delenv(name)


@pytest.fixture(scope="session")
def sym3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def sym4():
    return symmetric_group(4)


@pytest.fixture(scope="session")
def alt4():
    return alternating_group(4)


@pytest.fixture(scope="session")
def alt5():
    return alternating_group(5)


@pytest.fixture(scope="session")
def sym5():
    return symmetric_group(5)
