from functools import lru_cache

import pytest

from lpmpoly.lattice import make_region
from lpmpoly.matroid import bases_by_paths
from lpmpoly.oracle import face_lattice, vertices

REGION_A = ("EENNN", "NNENE")
STRIP_A = ("ENEEENNEN", "NNEEENNEE")
BOX = ("EN", "NE")


@lru_cache(maxsize=None)
def oracle_lattice(lower, upper):
    """Face lattice of the region's polytope, computed by the hull oracle and cached per session."""
    return face_lattice(vertices(bases_by_paths(make_region(lower, upper))))


@pytest.fixture
def region_a():
    return make_region(*REGION_A)


@pytest.fixture
def box():
    return make_region(*BOX)
