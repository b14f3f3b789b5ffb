import pytest
from hypothesis import given

from partpoly.facecount import (
    FVector,
    clique_counts,
    count_cliques,
    f_vector,
    h_polynomial_faces,
    iter_cliques,
)
from partpoly.facetcomb import intersection_graph
from partpoly.polynomial import IntPoly
from partpoly.rootsys import RSType
from partpoly.weyl import ParabolicK, group_order

from conftest import parabolics


def pk(fam, n, K=()):
    return ParabolicK(RSType(fam, n), K)


def test_hexagon_cliques():
    g = intersection_graph(pk("A", 3))
    assert count_cliques(g, 1) == 6 and count_cliques(g, 2) == 6 and count_cliques(g, 3) == 0


def test_a3_vertices():
    assert count_cliques(intersection_graph(pk("A", 4)), 3) == 24


@pytest.mark.parametrize(
    "job,f",
    [
        (pk("A", 3), (6, 6, 1)),
        (pk("A", 4), (24, 36, 14, 1)),
        (pk("B", 2), (8, 8, 1)),
        # the quadrilateral cut from the hexagon by two walls
        (pk("A", 3, (1, 2)), (4, 4, 1)),
    ],
    ids=str,
)
def test_f_vectors(job, f):
    assert f_vector(job).entries == f


@pytest.mark.parametrize(
    "job,h",
    [
        (pk("A", 3), [1, 4, 1]),
        (pk("A", 5, (1, 2, 4)), [1, 9, 17, 9, 1]),
        (pk("A", 4, (1, 3)), [1, 6, 6, 1]),
        (pk("A", 3, (1, 2)), [1, 2, 1]),
    ],
    ids=str,
)
def test_h_examples(job, h):
    assert h_polynomial_faces(job).to_list() == h


def test_iter_cliques_matches_counts():
    g = intersection_graph(pk("B", 3, (2,)))
    counts = clique_counts(g)
    by_size = {}
    for c in iter_cliques(g):
        by_size[len(c)] = by_size.get(len(c), 0) + 1
        assert g.is_clique(c)
    assert [by_size[i] for i in range(len(counts))] == counts


def test_golden_values(golden):
    for entry in golden:
        job = pk(entry["type"], entry["n"], tuple(entry["K"]))
        if "f_vector" in entry:
            assert f_vector(job).to_list() == entry["f_vector"], entry
        assert h_polynomial_faces(job).to_list() == entry["h"], entry


@given(parabolics(max_a=6, max_bcd=4))
def test_h_properties(job):
    fv = f_vector(job)
    h = fv.h_polynomial()
    assert h.is_palindromic()
    assert h[0] == 1 and h[h.degree] == 1 and h.degree == job.rstype.dim
    assert h(1) == fv.entries[0]
    assert fv.euler() == 1


@pytest.mark.parametrize("rt", [RSType(f, n) for f in "ABCD" for n in range(2, 5)], ids=str)
def test_full_polytope_has_group_many_vertices(rt):
    assert f_vector(ParabolicK(rt, ())).entries[0] == group_order(rt)


@pytest.mark.parametrize("n", range(2, 7))
def test_all_walls_type_a(n):
    full = ParabolicK(RSType("A", n), tuple(range(1, n)))
    expected = IntPoly.one()
    for _ in range(n - 1):
        expected = expected * IntPoly([1, 1])
    assert h_polynomial_faces(full) == expected


def test_fvector_h_roundtrip():
    fv = FVector((6, 6, 1))
    assert fv.h_polynomial().to_list() == [1, 4, 1]
