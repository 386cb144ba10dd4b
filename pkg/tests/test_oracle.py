import pytest
from hypothesis import given, settings, strategies as st

from lpmpoly.errors import DomainError, ResourceError
from lpmpoly.lattice import iter_regions, make_region
from lpmpoly.matroid import bases_by_paths
from lpmpoly.oracle import (affine_dimension, check_edge_directions, facets_exact, face_lattice,
                            flag_vector, hull_lattice, is_eulerian, is_graded, vertices)

from conftest import REGION_A, STRIP_A, oracle_lattice


def test_vertices(box, region_a):
    assert vertices(bases_by_paths(box)) == [(0, 1), (1, 0)]
    V = vertices(bases_by_paths(region_a))
    assert len(V) == 9 and all(sum(v) == 3 for v in V)
    assert len(vertices(bases_by_paths(make_region("ENN", "ENN")))) == 1


def test_affine_dimension(box, region_a):
    assert affine_dimension(vertices(bases_by_paths(box))) == 1
    assert affine_dimension(vertices(bases_by_paths(region_a))) == 4
    assert affine_dimension([(0, 1, 1)]) == 0
    with pytest.raises(DomainError):
        affine_dimension([])


def test_facets(box):
    assert len(facets_exact(vertices(bases_by_paths(box)))) == 2
    assert len(facets_exact(vertices(bases_by_paths(make_region(*STRIP_A))))) == 12
    with pytest.raises(ResourceError):
        facets_exact(vertices(bases_by_paths(make_region(*STRIP_A))), cap=3)


def test_frozen_f_vectors():
    # values computed by this oracle and checked against independent counts
    assert oracle_lattice(*REGION_A).f_vector == (9, 24, 24, 9, 1)
    assert oracle_lattice("EN", "NE").f_vector == (2, 1)
    assert oracle_lattice("EENN", "NENE").f_vector == (5, 8, 5, 1)  # square pyramid
    assert oracle_lattice("EENN", "NNEE").f_vector == (6, 12, 8, 1)  # octahedron
    # hypersimplex Delta(4, 8)
    L = oracle_lattice("EEEENNNN", "NNNNEEEE")
    assert L.f_vector == (70, 560, 1120, 980, 448, 112, 16, 1)


def test_square_product():
    L = hull_lattice([(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)])
    assert L.f_vector == (4, 4, 1)


def test_edge_direction_check():
    assert check_edge_directions(oracle_lattice("EN", "NE"))
    assert check_edge_directions(oracle_lattice(*REGION_A))
    assert not check_edge_directions(hull_lattice([(1, 1, 0, 0), (0, 0, 1, 1)]))


def test_flag_vectors():
    seg = hull_lattice([(0,), (1,)])
    assert flag_vector(seg) == {(): 1, (0,): 2}
    tri = hull_lattice([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    f = flag_vector(tri)
    assert (f[(0,)], f[(1,)], f[(0, 1)]) == (3, 3, 6)
    sq = hull_lattice([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert flag_vector(sq)[(0, 1)] == 8


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7), st.data())
def test_lattice_properties(n, data):
    region = data.draw(st.sampled_from(list(iter_regions(n))))
    M = bases_by_paths(region)
    L = oracle_lattice(region.lower.word, region.upper.word)
    f = L.f_vector
    assert f[0] == len(M.bases)
    assert all(sum(v) == region.r for v in L.points)
    assert is_graded(L) and is_eulerian(L)
    assert check_edge_directions(L)
    if L.dim >= 1:
        assert f[-2] == len(facets_exact(L.points))
        assert sum((-1) ** i * x for i, x in enumerate(f[:-1])) == 1 - (-1) ** L.dim
