from pathlib import Path

import pytest
import structlog

from src.diagrams.pd import diagram_from_pd, unknot
from src.loaders.structure_files import load_birack, load_module, load_shadow

STRUCTURES = Path(__file__).resolve().parents[1] / "data" / "structures"

TREFOIL_PD = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]
FIGURE_EIGHT_PD = [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]
HOPF_PD = [[1, 3, 2, 4], [3, 1, 4, 2]]


def structure_path(name: str) -> str:
    return str(STRUCTURES / name)


@pytest.fixture(autouse=True)
def reset_structlog():
    yield
    structlog.reset_defaults()


@pytest.fixture(scope="session")
def x2_birack():
    """B(x,y) = (y, sigma x) on two elements."""
    return load_birack(structure_path("x2_birack.json"))


@pytest.fixture(scope="session")
def x2_shadow3(x2_birack):
    return load_shadow(structure_path("x2_shadow3.json"), x2_birack)


@pytest.fixture(scope="session")
def x2_module_z3():
    return load_module(structure_path("x2_shadow3_module_z3.json"))


@pytest.fixture(scope="session")
def x2_shadow2(x2_birack):
    return load_shadow(structure_path("x2_shadow2.json"), x2_birack)


@pytest.fixture(scope="session")
def x2_module_z5():
    return load_module(structure_path("x2_shadow2_module_z5.json"))


@pytest.fixture(scope="session")
def x3_birack():
    return load_birack(structure_path("x3_birack.json"))


@pytest.fixture(scope="session")
def x3_shadow2(x3_birack):
    return load_shadow(structure_path("x3_shadow2.json"), x3_birack)


@pytest.fixture(scope="session")
def x3_module_z3():
    return load_module(structure_path("x3_shadow2_module_z3.json"))


@pytest.fixture(scope="session")
def trefoil():
    return diagram_from_pd(TREFOIL_PD, "3_1")


@pytest.fixture(scope="session")
def figure_eight():
    return diagram_from_pd(FIGURE_EIGHT_PD, "4_1")


@pytest.fixture(scope="session")
def hopf():
    return diagram_from_pd(HOPF_PD, "L2a1")


@pytest.fixture(scope="session")
def circle():
    return unknot("unknot")
