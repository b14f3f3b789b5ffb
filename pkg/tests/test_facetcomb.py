import pytest
from hypothesis import given

from partpoly.facetcomb import (
    FacetLabel,
    base_family,
    describe_family,
    facet_family,
    intersection_graph,
    is_lower,
    subset_in_open_halfspace,
    subset_in_opposite_halfspace,
    subset_is_sk_invariant,
    subsets_intersect,
)
from partpoly.rootsys import RSType
from partpoly.weyl import ParabolicK, all_K, bar, mask_of, parse_element

from conftest import parabolics


def S(rt, *elems):
    """Subset mask from element tokens like 2 or '-3' (= bar 3)."""
    return mask_of(parse_element(str(e), rt) for e in elems)


@pytest.mark.parametrize(
    "rt,size",
    [(RSType("A", 3), 6), (RSType("B", 2), 8), (RSType("B", 3), 26), (RSType("D", 3), 14), (RSType("D", 4), 48)],
)
def test_base_family_sizes(rt, size):
    assert len(base_family(rt)) == size


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_signed_family_counts(n):
    # every nonempty signed subset, minus those of size n-1 in type D
    assert len(base_family(RSType("B", n))) == 3**n - 1
    assert len(base_family(RSType("D", n))) == 3**n - 1 - n * 2 ** (n - 1)


def test_d3_base_family_brute_force():
    # signed subsets of size 1 or 3 over three pairs: 6 singletons and 8 transversals
    rt = RSType("D", 3)
    got = set(base_family(rt))
    singles = {1 << (i - 1) for i in range(1, 7)}
    transversals = set()
    for s1 in (1, bar(1, 3)):
        for s2 in (2, bar(2, 3)):
            for s3 in (3, bar(3, 3)):
                transversals.add(mask_of([s1, s2, s3]))
    assert got == singles | transversals


def test_lower_examples():
    assert is_lower(S(RSType("A", 3), 1, 3), ParabolicK(RSType("A", 3), (1,)))
    rt = RSType("B", 3)
    assert is_lower(S(rt, 2, 3, -1), ParabolicK(rt, (2, 3)))
    rt = RSType("D", 3)
    assert is_lower(S(rt, 2, -3, -1), ParabolicK(rt, (2, 3)))


def test_a2_partitioned_family():
    rt = RSType("A", 3)
    assert describe_family(ParabolicK(rt, (1,))) == ["F{1}", "F{3}", "F{1,2}", "F{1,3}", "H(1)"]


def test_d3_family_k12():
    rt = RSType("D", 3)
    fam = facet_family(ParabolicK(rt, (1, 2)))
    want = {S(rt, 1), S(rt, -3), S(rt, 1, 2, 3), S(rt, 1, 2, -3), S(rt, -3, -2, -1), S(rt, 1, -3, -2)}
    assert set(fam.subsets()) == want
    assert [lab.k for lab in fam.labels if not lab.is_subset] == [1, 2]


def test_b3_family_k23():
    rt = RSType("B", 3)
    fam = facet_family(ParabolicK(rt, (2, 3)))
    assert len(fam.subsets()) == 8 and len(fam.labels) == 10


def test_full_family_when_k_empty():
    rt = RSType("A", 3)
    assert len(facet_family(ParabolicK(rt, ())).labels) == 6


@pytest.mark.parametrize(
    "rt,a,b,expected",
    [
        (RSType("A", 4), (1,), (1, 2), True),
        (RSType("A", 3), (1,), (2,), False),
        (RSType("D", 3), (1, 2, 3), (1, 2, -3), True),
        (RSType("D", 3), (1, 2, 3), (1, -2, -3), False),
        (RSType("B", 3), (1, 2, 3), (1, 2, -3), False),
    ],
)
def test_subsets_intersect(rt, a, b, expected):
    assert subsets_intersect(S(rt, *a), S(rt, *b), rt) is expected


def test_sk_invariance_and_halfspace_examples():
    a3 = RSType("A", 3)
    assert subset_is_sk_invariant(S(a3, 1, 2), 1, a3)
    assert not subset_is_sk_invariant(S(a3, 1), 1, a3)
    b2 = RSType("B", 2)
    assert not subset_is_sk_invariant(S(b2, 1, -2), 2, b2)
    assert subset_in_open_halfspace(S(a3, 1), 1, a3)
    assert not subset_in_open_halfspace(S(a3, 1, 2), 1, a3)
    b3 = RSType("B", 3)
    assert subset_in_open_halfspace(S(b3, 3), 3, b3)


def test_graph_examples():
    rt = RSType("A", 3)
    g = intersection_graph(ParabolicK(rt, (1,)))
    h1 = FacetLabel.hyperplane(1)
    assert g.adjacent(FacetLabel.subset(S(rt, 1, 2)), h1)
    assert not g.adjacent(FacetLabel.subset(S(rt, 1)), h1)


@pytest.mark.parametrize("rt", [RSType(f, n) for f in "ABCD" for n in range(2, 5)], ids=str)
def test_trichotomy_exhaustive(rt):
    for k in range(1, rt.rank + 1):
        for mask in base_family(rt):
            flags = (
                subset_is_sk_invariant(mask, k, rt),
                subset_in_open_halfspace(mask, k, rt),
                subset_in_opposite_halfspace(mask, k, rt),
            )
            assert sum(flags) == 1, (mask, k)


@pytest.mark.parametrize("rt", [RSType(f, n) for f in "ABCD" for n in range(2, 5)], ids=str)
def test_lower_subsets_never_on_opposite_side(rt):
    for pk in all_K(rt):
        for mask in facet_family(pk).subsets():
            for k in pk.K:
                assert not subset_in_opposite_halfspace(mask, k, rt)


@given(parabolics(max_a=5, max_bcd=4))
def test_hyperplanes_pairwise_adjacent(pk):
    g = intersection_graph(pk)
    hyps = [lab for lab in g.labels if not lab.is_subset]
    for i, a in enumerate(hyps):
        for b in hyps[i + 1:]:
            assert g.adjacent(a, b)


@given(parabolics(max_a=5, max_bcd=4))
def test_graph_symmetric_and_deterministic(pk):
    g = intersection_graph(pk)
    m = g.matrix()
    assert all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(len(m)))
    assert all(not m[i][i] for i in range(len(m)))
    from partpoly.facetcomb import build_graph

    assert build_graph(g.labels, pk.rstype).rows == g.rows


@given(parabolics(max_a=5, max_bcd=4))
def test_c_matches_b(pk):
    if pk.rstype.family not in "BC":
        return
    other = RSType("C" if pk.rstype.family == "B" else "B", pk.rstype.n)
    pk2 = ParabolicK(other, pk.K)
    assert facet_family(pk).labels == facet_family(pk2).labels
    assert intersection_graph(pk).rows == intersection_graph(pk2).rows
