from pathlib import Path

import pytest

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


@pytest.fixture
def fixture_dir() -> Path:
    return FIXTURES


@pytest.fixture
def digon_path() -> str:
    return str(FIXTURES / "digon.graph")


@pytest.fixture
def theta_path() -> str:
    """The colored theta graph rooted at v3."""
    return str(FIXTURES / "theta-colored.graph")


@pytest.fixture
def theta_v2_path() -> str:
    """The same theta graph rooted at v2."""
    return str(FIXTURES / "theta-colored-rootv2.graph")


@pytest.fixture
def trefoil_path() -> str:
    return str(FIXTURES / "trefoil.pd")


@pytest.fixture
def fig8_path() -> str:
    return str(FIXTURES / "fig8.pd")


@pytest.fixture
def kink_path() -> str:
    return str(FIXTURES / "unknot-kink.pd")
