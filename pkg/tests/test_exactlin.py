from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from higher_nakayama import exactlin as xl

small = st.integers(min_value=-4, max_value=4)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_rref_known():
    R, piv = xl.rref(xl.mat([[2, 4, 1], [1, 2, 1]]))
    assert piv == [0, 2]
    assert R.tolist() == [[1, 2, 0], [0, 0, 1]]


def test_rank_and_kernel_of_singular():
    A = xl.mat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    r, ker = xl.rank_kernel(A)
    assert r == 2 and len(ker) == 1
    assert xl.is_zero(A @ ker[0])


def test_entries_stay_exact():
    A = xl.mat([[3, 1], [1, 3]])
    x = xl.solve(A, [1, 0])
    assert all(isinstance(v, F) for v in x.flat)
    assert x[:, 0].tolist() == [F(3, 8), F(-1, 8)]


def test_solve_inconsistent_returns_none():
    assert xl.solve(xl.mat([[1, 1], [1, 1]]), [0, 1]) is None


def test_solve_shape_mismatch():
    with pytest.raises(ValueError):
        xl.solve(xl.mat([[1, 1]]), [1, 2])


def test_floats_rejected():
    with pytest.raises((TypeError, ValueError)):
        xl.mat([[0.5]])


def test_json_roundtrip():
    A = xl.mat([[F(1, 3), -2], [0, F(7, 2)]])
    data = xl.mat_to_json(A)
    assert data == [["1/3", "-2"], ["0", "7/2"]]
    assert (xl.mat_from_json(data) == A).all()


def test_block_diag():
    B = xl.block_diag([xl.identity(1), xl.mat([[2, 3]])])
    assert B.shape == (2, 3)
    assert B.tolist() == [[1, 0, 0], [0, 2, 3]]


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_of_transpose(rows):
    A = xl.mat(rows)
    assert xl.rank(A) == xl.rank(A.T.copy())


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_nullity(rows):
    A = xl.mat(rows)
    r, ker = xl.rank_kernel(A)
    assert r + len(ker) == A.shape[1]
    for v in ker:
        assert xl.is_zero(A @ v)
    if ker:
        K = np.hstack(ker)
        assert xl.rank(K) == len(ker)


@settings(max_examples=80, deadline=None)
@given(matrices(), st.data())
def test_solve_recovers_consistent_systems(rows, data):
    A = xl.mat(rows)
    x0 = xl.column(data.draw(st.lists(small, min_size=A.shape[1], max_size=A.shape[1])))
    b = A @ x0
    x = xl.solve(A, b)
    assert x is not None
    assert (A @ x == b).all()
