import pytest

from src.lib.cayley_forms import (
    chain_of_lines_form,
    conic_form,
    conic_hyperplane_form,
    quadric_surface_form,
    skew_lines_form,
    twisted_cubic_form,
    twisted_cubic_hyperplane_form,
)
from src.lib.error_handling import set_verbose
from src.lib.file_utils import get_project_root
from src.lib.klein import klein_quadric
from src.lib.polyring import PLUECKER, variables
from src.lib.settings import GroebnerBudget
from src.services.chow_service import ChowService


@pytest.fixture(autouse=True)
def quiet():
    set_verbose(False)
    yield
    set_verbose(False)


@pytest.fixture
def p():
    """The six Pluecker variables p01, p02, p03, p12, p13, p23."""
    return variables(PLUECKER)


@pytest.fixture
def Q():
    return klein_quadric()


@pytest.fixture
def quadric():
    return quadric_surface_form()


@pytest.fixture
def skew():
    return skew_lines_form()


@pytest.fixture
def chain():
    return chain_of_lines_form()


@pytest.fixture
def conic():
    return conic_form()


@pytest.fixture
def conic_printed():
    return conic_hyperplane_form()


@pytest.fixture
def cubic():
    return twisted_cubic_form()


@pytest.fixture
def cubic_printed():
    return twisted_cubic_hyperplane_form()


@pytest.fixture
def control(p):
    """p01^2 + p02*p13, not a Cayley form."""
    p01, p02, p03, p12, p13, p23 = p
    return p01 ** 2 + p02 * p13


@pytest.fixture(scope="session")
def service():
    return ChowService(GroebnerBudget())


@pytest.fixture(scope="session")
def fixtures_dir():
    return get_project_root() / "fixtures"
