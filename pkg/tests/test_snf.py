from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flagcoh.determinants import exact_det
from flagcoh.snf import (
    CokernelStructure,
    IntMatrix,
    coker_dim_mod_p,
    cokernel,
    is_prime,
    rank_mod_p,
    smith,
)

small_matrices = st.integers(1, 4).flatmap(
    lambda nr: st.integers(1, 4).flatmap(
        lambda nc: st.lists(
            st.lists(st.integers(-9, 9), min_size=nc, max_size=nc),
            min_size=nr,
            max_size=nr,
        ).map(lambda rows: IntMatrix.from_rows(rows, nc))
    )
)


def test_int_matrix_shape_validation():
    with pytest.raises(ValueError):
        IntMatrix(2, 2, ((1, 2),))
    with pytest.raises(ValueError):
        IntMatrix(1, 2, ((1,),))
    empty = IntMatrix(1, 0, ((),))
    assert cokernel(empty) == CokernelStructure(0, ())
    wide = IntMatrix(0, 3, ())
    assert cokernel(wide) == CokernelStructure(3, ())


def test_smith_known_matrix():
    mat = IntMatrix.from_rows([[3, 3, 0], [6, 3, 3], [3, 6, 3]])
    factors, rank = smith(mat)
    assert factors == (3, 3, 6)
    assert rank == 3
    assert cokernel(mat) == CokernelStructure(0, (3, 3, 6))


def test_smith_diagonal_reordering():
    mat = IntMatrix.from_rows([[6, 0], [0, 4]])
    factors, _ = smith(mat)
    assert factors == (2, 12)


def test_cokernel_with_free_part():
    mat = IntMatrix.from_rows([[2, 0, 0]])
    assert cokernel(mat) == CokernelStructure(2, (2,))


@given(small_matrices)
def test_invariant_factors_form_divisibility_chain(mat):
    factors, rank = smith(mat)
    assert rank == len(factors)
    assert all(f > 0 for f in factors)
    for a, b in zip(factors, factors[1:]):
        assert b % a == 0


@given(small_matrices)
def test_factor_product_matches_determinant_when_square(mat):
    if mat.nrows != mat.ncols:
        return
    det = exact_det(mat)
    factors, rank = smith(mat)
    if det == 0:
        assert rank < mat.nrows
    else:
        prod = 1
        for f in factors:
            prod *= f
        assert prod == abs(det)


@given(small_matrices)
def test_first_factor_is_entry_gcd(mat):
    g = 0
    for row in mat.rows:
        for v in row:
            g = gcd(g, v)
    factors, _ = smith(mat)
    if g == 0:
        assert factors == ()
    else:
        assert factors[0] == g


@given(small_matrices, st.sampled_from([2, 3, 5, 7]))
def test_mod_p_rank_consistent_with_smith(mat, p):
    factors, rank = smith(mat)
    expected = sum(1 for f in factors if f % p)
    assert rank_mod_p(mat, p) == expected
    assert coker_dim_mod_p(mat, p) == mat.ncols - expected


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    with pytest.raises(ValueError):
        rank_mod_p(IntMatrix.from_rows([[1]]), 4)
