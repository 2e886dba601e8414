from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from sasaki.exact import (DimensionError, Mat, SingularMatrixError, det, fmt_q, kernel, q, rank,
                          solve_linear)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def mats(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def sym(rows):
    return sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in r] for r in rows])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: mats(n, n)))
def test_det_matches_sympy(rows):
    assert det(Mat.from_rows(rows)) == Fraction(str(sym(rows).det()))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(lambda c: mats(r, c))))
def test_rank_and_kernel(rows):
    A = Mat.from_rows(rows)
    assert rank(A) == sym(rows).rank()
    K = kernel(A)
    assert len(K) == A.cols - rank(A)
    for v in K:
        assert all(x == 0 for x in A @ v)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: mats(n, n)))
def test_inverse(rows):
    A = Mat.from_rows(rows)
    if det(A) == 0:
        with pytest.raises(SingularMatrixError):
            A.inverse()
    else:
        assert A @ A.inverse() == Mat.identity(A.rows)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.tuples(mats(r, c), st.lists(small, min_size=r, max_size=r)))))
def test_solve_agrees_with_consistency(data):
    rows, b = data
    A = Mat.from_rows(rows)
    x = solve_linear(A, b)
    consistent = sym(rows).rank() == sym(rows).row_join(sym([[v] for v in b])).rank()
    assert (x is not None) == consistent
    if x is not None:
        assert A @ x == tuple(b)


def test_big_numerators_stay_exact():
    # Hilbert matrix: determinant has a huge denominator
    n = 9
    H = Mat.from_rows([[Fraction(1, i + j + 1) for j in range(n)] for i in range(n)])
    assert det(H) == Fraction(str(sp.Matrix(n, n, lambda i, j: sp.Rational(1, i + j + 1)).det()))
    assert H @ H.inverse() == Mat.identity(n)


def test_q_refuses_floats():
    assert q("3/6") == Fraction(1, 2)
    with pytest.raises(TypeError):
        q(0.5)
    with pytest.raises(TypeError):
        q(True)


def test_fmt_q():
    assert fmt_q(Fraction(-4, 2)) == "-2"
    assert fmt_q(Fraction(3, -9)) == "-1/3"


def test_shape_errors():
    A = Mat.from_rows([[1, 2, 3]])
    with pytest.raises(DimensionError):
        det(A)
    with pytest.raises(DimensionError):
        A @ A
    with pytest.raises(DimensionError):
        solve_linear(A, [1, 2])
