from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from partpoly.rootsys import RSType
from partpoly.weyl import (
    BudgetExceeded,
    ParabolicK,
    all_K,
    bar,
    enumerate_group,
    enumerate_parabolic,
    group_order,
    mask_of,
    orbit_decomposition,
    simple_reflection,
    subset_orbit_and_stabilizer,
)

from conftest import parabolics


def test_b3_last_reflection_swaps_n_and_bar():
    rt = RSType("B", 3)
    s3 = simple_reflection(rt, 3)
    assert s3(3) == bar(3, 3) and s3(1) == 1 and s3(2) == 2


def test_d3_last_reflection():
    rt = RSType("D", 3)
    s3 = simple_reflection(rt, 3)
    assert s3(2) == bar(3, 3) and s3(3) == bar(2, 3) and s3(1) == 1


def test_a4_middle_reflection():
    s2 = simple_reflection(RSType("A", 4), 2)
    assert s2.images == (1, 3, 2, 4)


@pytest.mark.parametrize("rt,size", [(RSType("A", 3), 6), (RSType("B", 2), 8), (RSType("D", 3), 24), (RSType("C", 3), 48)])
def test_group_sizes(rt, size):
    assert len(list(enumerate_group(rt))) == size == group_order(rt)


def test_d_is_even_part_of_b():
    n = 4
    b = set(enumerate_group(RSType("B", n)))
    d = set(enumerate_group(RSType("D", n)))
    assert d <= b
    assert d == {w for w in b if w.negative_count(n) % 2 == 0}


def test_enumeration_is_lexicographic():
    elems = [w.images for w in enumerate_group(RSType("B", 3))]
    assert elems == sorted(elems)


def test_budget():
    with pytest.raises(BudgetExceeded):
        list(enumerate_group(RSType("B", 4), budget=100))


@pytest.mark.parametrize(
    "rt,K,size",
    [(RSType("A", 5), (1, 2, 4), 12), (RSType("A", 5), (), 1), (RSType("D", 3), (2, 3), 4), (RSType("B", 3), (1, 2, 3), 48)],
)
def test_parabolic_sizes(rt, K, size):
    assert len(enumerate_parabolic(ParabolicK(rt, K))) == size


def _parts(pk):
    return sorted(sorted(p) for p in (mask_elements(m) for m in orbit_decomposition(pk).masks()))


def mask_elements(m):
    return [i + 1 for i in range(m.bit_length()) if m >> i & 1]


def test_orbits_b3():
    rt = RSType("B", 3)
    got = _parts(ParabolicK(rt, (2, 3)))
    assert got == sorted([[1], [bar(1, 3)], sorted([2, 3, bar(3, 3), bar(2, 3)])])


def test_orbits_d3():
    rt = RSType("D", 3)
    got = _parts(ParabolicK(rt, (1, 3)))
    assert got == sorted([sorted([1, 2, bar(3, 3)]), sorted([3, bar(2, 3), bar(1, 3)])])


def test_orbits_trivial():
    assert _parts(ParabolicK(RSType("A", 3), ())) == [[1], [2], [3]]


def test_act_on_subset_examples():
    assert simple_reflection(RSType("A", 3), 1).act_on_subset(0b001) == 0b010
    rt = RSType("B", 2)
    assert simple_reflection(rt, 2).act_on_subset(mask_of([1, 2])) == mask_of([1, bar(2, 2)])


def test_orbit_stabilizer_examples():
    rt = RSType("A", 3)
    orbit, stab = subset_orbit_and_stabilizer(ParabolicK(rt, (1,)), 0b001)
    assert orbit == (0b001, 0b010) and stab == 1
    orbit, _ = subset_orbit_and_stabilizer(ParabolicK(rt, (1, 2)), 0b011)
    assert len(orbit) == 3


@given(parabolics(max_a=5, max_bcd=4), st.data())
def test_orbit_stabilizer_theorem(pk, data):
    rt = pk.rstype
    mask = data.draw(st.integers(1, (1 << rt.ground_size) - 1))
    orbit, stab = subset_orbit_and_stabilizer(pk, mask)
    assert len(orbit) * stab == len(enumerate_parabolic(pk))


@given(parabolics(max_a=5, max_bcd=4))
def test_orbit_decomposition_matches_brute_force(pk):
    group = enumerate_parabolic(pk)
    seen, parts = set(), []
    for i in range(1, pk.rstype.ground_size + 1):
        if i in seen:
            continue
        orb = sorted({w(i) for w in group})
        seen.update(orb)
        parts.append(orb)
    assert sorted(parts) == _parts(pk)


@given(parabolics(max_a=5, max_bcd=4))
def test_parabolic_is_closed_group(pk):
    group = set(enumerate_parabolic(pk))
    for g in pk.generators():
        assert all(g * w in group for w in group)
    for w in group:
        assert w.inverse() in group


def test_action_is_homomorphism_on_vectors():
    rt = RSType("C", 3)
    elems = list(enumerate_group(rt))
    x = (3, -5, 7)
    for u, v in product(elems[::7], elems[::11]):
        assert (u * v).act_on_vector(x) == u.act_on_vector(v.act_on_vector(x))


def test_all_K_count():
    assert len(list(all_K(RSType("D", 4)))) == 16
