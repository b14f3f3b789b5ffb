import pytest
from hypothesis import given
from hypothesis import strategies as st

from partpoly.polynomial import IntPoly

coeffs = st.lists(st.integers(-20, 20), max_size=6)


def test_trim_and_degree():
    p = IntPoly([1, 2, 0, 0])
    assert p.to_list() == [1, 2] and p.degree == 1


def test_str():
    assert str(IntPoly([1, 9, 17, 9, 1])) == "1 + 9t + 17t^2 + 9t^3 + t^4"


def test_exact_div_rejects_remainder():
    with pytest.raises(ValueError):
        IntPoly([1, 3]).exact_div(2)


@given(coeffs, coeffs, st.integers(-3, 3))
def test_ring_laws_at_a_point(a, b, t):
    p, q = IntPoly(a), IntPoly(b)
    assert (p + q)(t) == p(t) + q(t)
    assert (p * q)(t) == p(t) * q(t)


@given(coeffs, st.integers(-3, 3), st.integers(-3, 3))
def test_shift(a, s, t):
    p = IntPoly(a)
    assert p.shift(s)(t) == p(t + s)


def test_palindromic():
    assert IntPoly([1, 4, 1]).is_palindromic()
    assert not IntPoly([1, 2]).is_palindromic()
