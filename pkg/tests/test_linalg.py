from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from partpoly import linalg

small = st.integers(-4, 4)
matrices = st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=1, max_size=4)
)


def test_rref_identity():
    r, piv = linalg.rref([[2, 0], [0, 3]])
    assert r == [[1, 0], [0, 1]] and piv == [0, 1]


def test_rank_of_dependent_rows():
    assert linalg.rank([[1, 2, 3], [2, 4, 6], [0, 1, 1]]) == 2


def test_solve_inconsistent():
    assert linalg.solve([[1, 1], [1, 1]], [1, 2]) is None


def test_solve_fractions():
    x = linalg.solve([[2, 1], [1, 3]], [1, 2])
    assert x == [Fraction(1, 5), Fraction(3, 5)]


@given(matrices)
def test_nullspace_is_killed(rows):
    ncols = len(rows[0])
    basis = linalg.nullspace(rows, ncols)
    assert len(basis) == ncols - linalg.rank(rows, ncols)
    for v in basis:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


@given(matrices, st.lists(small, min_size=4, max_size=4))
def test_rowspace_membership(rows, coeffs):
    ncols = len(rows[0])
    space = linalg.RowSpace(rows, ncols)
    combo = [sum(c * r[j] for c, r in zip(coeffs, rows)) for j in range(ncols)]
    assert space.contains(combo)
    assert space.dim == linalg.rank(rows, ncols)


@pytest.mark.parametrize("rows,expected", [([[0, 0]], 0), ([[1, 0], [0, 0]], 1), ([[1, 1], [1, -1]], 2)])
def test_rank_cases(rows, expected):
    assert linalg.rank(rows) == expected
