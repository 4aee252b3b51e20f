from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flagcoh.determinants import (
    complement_ordered_matrix,
    exact_det,
    generalized_simplified_det,
    krattenthaler_det,
    proctor_det,
    simplified_det,
)
from flagcoh.lattice import enumerate_dominant_s
from flagcoh.reduced_matrix import build_matrix, build_sets
from flagcoh.snf import IntMatrix

square_matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-6, 6), min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    ).map(IntMatrix.from_rows)
)


def _leibniz_det(mat):
    n = mat.nrows
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = 1
        for i, j in enumerate(perm):
            term *= mat.rows[i][j]
        total += sign * term
    return total


def test_exact_det_known():
    assert exact_det(IntMatrix(0, 0, ())) == 1
    assert exact_det(IntMatrix.from_rows([[5]])) == 5
    assert exact_det(IntMatrix.from_rows([[1, 2], [3, 4]])) == -2
    assert exact_det(IntMatrix.from_rows([[3, 3, 0], [6, 3, 3], [3, 6, 3]])) == -54
    with pytest.raises(ValueError):
        exact_det(IntMatrix(1, 2, ((1, 2),)))


@given(square_matrices)
def test_bareiss_matches_leibniz(mat):
    assert exact_det(mat) == _leibniz_det(mat)


def test_proctor_worked_example():
    # |det| of the (5,3,1) wall matrix for n=4, d=3
    assert abs(proctor_det(4, 1, 3, (2, 2, 1))) == 54


def test_proctor_parameter_validation():
    with pytest.raises(ValueError):
        proctor_det(4, 1, 3, (2, 2))  # wrong profile length
    with pytest.raises(ValueError):
        proctor_det(4, 1, 3, (2, 2, 2))  # sum != n + k
    with pytest.raises(ValueError):
        proctor_det(2, 1, 2, (2, 1))  # k > n - 2


def test_sign_convention_at_k_zero():
    # k = 0: 1x1 matrix with positive multinomial entry, sign must be +1
    assert proctor_det(2, 0, 2, (1, 1)) == 2
    assert proctor_det(3, 0, 2, (2, 1)) == 3


def test_krattenthaler_known():
    assert krattenthaler_det(2, 1, 0) == 2
    assert krattenthaler_det(4, 3, 1) == abs(proctor_det(4, 1, 2, (2, 3)))
    with pytest.raises(ValueError):
        krattenthaler_det(3, 4, 0)
    with pytest.raises(ValueError):
        krattenthaler_det(3, 2, 3)


def test_simplified_requires_large_first_part():
    with pytest.raises(ValueError):
        simplified_det(4, 2, 2, (1, 5))
    with pytest.raises(ValueError):
        generalized_simplified_det(4, 2, 2, (2, 4), i=3)


def _wall_cases(d, n_max):
    for n in range(1, n_max + 1):
        for s in enumerate_dominant_s(n, n, d):
            if s[0] >= n:
                yield n, s


@pytest.mark.parametrize("d", [2, 3, 4])
def test_product_formula_matches_direct_determinant(d):
    for n, s in _wall_cases(d, 6):
        spec = build_sets(n, n, d, s)
        direct = exact_det(build_matrix(spec))
        closed = proctor_det(n, spec.k, d, spec.h)
        assert abs(direct) == abs(closed), (n, s)


@pytest.mark.parametrize("d", [2, 3])
def test_signed_formula_matches_complement_ordered_matrix(d):
    for n, s in _wall_cases(d, 6):
        spec = build_sets(n, n, d, s)
        signed = exact_det(complement_ordered_matrix(n, spec.k, d, spec.h))
        assert signed == proctor_det(n, spec.k, d, spec.h), (n, s)


@pytest.mark.parametrize("d", [2, 3])
def test_multinomial_quotient_forms_agree(d):
    for n, s in _wall_cases(d, 6):
        spec = build_sets(n, n, d, s)
        closed = proctor_det(n, spec.k, d, spec.h)
        for i in range(1, d + 1):
            if spec.h[i - 1] >= spec.k:
                assert (
                    generalized_simplified_det(n, spec.k, d, spec.h, i) == closed
                ), (n, s, i)


def test_binomial_quotient_matches_wall_determinant_rank_two():
    for n, s in _wall_cases(2, 8):
        spec = build_sets(n, n, 2, s)
        direct = exact_det(build_matrix(spec))
        assert abs(krattenthaler_det(n, s[1], spec.k)) == abs(direct), (n, s)


@given(st.integers(2, 10), st.data())
def test_binomial_quotient_is_always_a_positive_integer(n, data):
    t = data.draw(st.integers(0, n))
    k = data.draw(st.integers(0, t))
    val = krattenthaler_det(n, t, k)
    assert val > 0
    check = Fraction(1)
    from math import comb

    for i in range(k + 1):
        check *= Fraction(comb(n, t - i), comb(n, i))
    assert val == check
