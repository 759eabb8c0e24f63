from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rsinv.exact import (
    PowerSeries,
    as_matrix,
    det,
    det_one_minus_gt,
    format_rational,
    identity,
    kernel_basis,
    mat_mul,
    mat_vec,
    parse_rational,
    rank,
    series_invert,
    span,
    span_complement,
)

small = st.integers(-4, 4)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def test_kernel_examples():
    assert kernel_basis(as_matrix([[1, 1], [1, 1]])) == span([(1, -1)], 2)
    assert kernel_basis(identity(3)).dim == 0
    # [[0,0],[1,0]] v = (0, v1): v1 = 0
    assert kernel_basis(as_matrix([[0, 0], [1, 0]])) == span([(0, 1)], 2)


@settings(max_examples=60)
@given(st.integers(1, 4), st.integers(1, 5), st.data())
def test_rank_nullity(r, c, data):
    m = as_matrix(data.draw(matrices(r, c)))
    ker = kernel_basis(m)
    assert ker.dim + rank(m) == c
    for v in ker.basis:
        assert all(x == 0 for x in mat_vec(m, v))


def test_span_complement():
    plane = span([(1, 0), (0, 1)], 2)
    extra = span_complement(plane, span([(1, 0)], 2))
    assert len(extra) == 1 and span([(1, 0), extra[0]], 2).dim == 2
    assert span_complement(plane, plane) == []
    space = span([(1, 0, 0), (0, 1, 0)], 3)
    sub = span([(1, 1, 0)], 3)
    extra = span_complement(space, sub)
    assert len(extra) == 1
    assert extra[0] in space and span([(1, 1, 0), extra[0]], 3) == space


def test_span_complement_rejects_non_subspace():
    with pytest.raises(ValueError):
        span_complement(span([(1, 0, 0)], 3), span([(0, 1, 0)], 3))


def test_det_one_minus_gt_examples():
    assert det_one_minus_gt(as_matrix([[0, -1], [1, 0]]), 4).coeffs == (1, 0, 1, 0, 0)
    assert det_one_minus_gt(identity(2), 3).coeffs == (1, -2, 1, 0)
    assert det_one_minus_gt(as_matrix([[-1, 0], [0, -1]]), 2).coeffs == (1, 2, 1)


@settings(max_examples=40)
@given(st.integers(1, 3), st.data())
def test_det_one_minus_gt_matches_determinant(d, data):
    g = as_matrix(data.draw(matrices(d, d)))
    p = det_one_minus_gt(g, d)
    # evaluate det(I - g t) at a few rational t directly
    for t in (F(0), F(1), F(-2), F(1, 3)):
        direct = det(tuple(tuple((1 if i == j else 0) - t * g[i][j] for j in range(d)) for i in range(d)))
        assert sum(c * t ** k for k, c in enumerate(p.coeffs)) == direct
    assert p[0] == 1


def test_series_invert_examples():
    geo = series_invert(PowerSeries.from_coeffs([1, -1], 6))
    assert geo.coeffs == (1,) * 7
    alt = series_invert(PowerSeries.from_coeffs([1, 0, 1], 6))
    assert alt.coeffs == (1, 0, -1, 0, 1, 0, -1)
    assert series_invert(PowerSeries.from_coeffs([2], 0)).coeffs == (F(1, 2),)
    with pytest.raises(ZeroDivisionError):
        series_invert(PowerSeries.from_coeffs([0, 1], 3))


@given(st.lists(st.fractions(max_denominator=5), min_size=1, max_size=8).filter(lambda c: c[0] != 0))
def test_series_invert_property(coeffs):
    p = PowerSeries(tuple(coeffs))
    one = p * series_invert(p)
    assert one.coeffs == (1,) + (0,) * p.N


def test_rational_round_trip():
    assert parse_rational("3/6") == F(1, 2)
    assert parse_rational("-4") == -4
    assert format_rational(F(4, 2)) == "2"
    assert format_rational(F(-1, 3)) == "-1/3"
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("x")


def test_commuting_product_constant_term():
    g = as_matrix([[0, -1], [1, 0]])
    assert det_one_minus_gt(mat_mul(g, g), 3)[0] == 1
