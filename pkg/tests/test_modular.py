from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagcoh.lattice import enumerate_dominant_s
from flagcoh.modular import (
    doty_E,
    doty_factor_weight,
    epp_check,
    hd1_dim_mod_p,
    hd_dim_mod_p,
    lambda_r_check,
    main3_deficit_check,
    multiplicity_report,
    no_p_torsion_check,
    p_adic_valuation,
    wall_nu,
)
from flagcoh.reduced_matrix import build_matrix, build_sets, weight_space_report
from flagcoh.snf import coker_dim_mod_p


def test_p_adic_valuation():
    assert p_adic_valuation(54, 3) == 3
    assert p_adic_valuation(-8, 2) == 3
    assert p_adic_valuation(7, 3) == 0
    with pytest.raises(ValueError):
        p_adic_valuation(0, 2)


@settings(deadline=None)
@given(
    st.integers(2, 3),
    st.integers(1, 4),
    st.integers(1, 4),
    st.sampled_from([2, 3, 5]),
)
def test_mod_p_dimensions_match_gf_p_elimination(d, m, n, p):
    # the SNF route (free rank plus p-divisible factors) must agree with a
    # direct rank computation over the field with p elements
    for s in enumerate_dominant_s(m, n, d):
        rep = weight_space_report(m, n, d, s)
        if rep.n_rows == 0 and rep.n_cols == 0 and rep.cokernel.is_zero:
            continue
        spec = build_sets(m, n, d, s)
        mat = build_matrix(spec)
        assert hd_dim_mod_p(rep, p) == coker_dim_mod_p(mat, p)


def test_worked_example_mod_three():
    records = {
        rec.nu: rec.mod_p[3][1]
        for rec in multiplicity_report(4, 4, 3, (3,))
        if rec.mod_p[3][1]
    }
    assert records == {(1, 0, 2): 1, (1, 1, 0): 1, (0, 0, 1): 3}


def test_hd1_includes_tor_contribution():
    rep = weight_space_report(4, 4, 3, (5, 3, 1))
    assert rep.kernel_rank == 0
    assert hd1_dim_mod_p(rep, 3) == 3
    assert hd1_dim_mod_p(rep, 2) == 1  # factors (3,3,6): only 6 is even
    assert hd_dim_mod_p(rep, 5) == 0


@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("n", range(0, 5))
def test_no_small_prime_torsion(d, n):
    for p in (2, 3, 5, 7, 11, 13):
        if p > n:
            assert no_p_torsion_check(n, d, p)


def test_no_p_torsion_check_validates_arguments():
    with pytest.raises(ValueError):
        no_p_torsion_check(3, 2, 3)
    with pytest.raises(ValueError):
        no_p_torsion_check(3, 2, 4)


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("d", [2, 3])
def test_prime_wall_weights(p, d):
    assert epp_check(p, d)


@pytest.mark.parametrize("p", [2, 3])
def test_lambda_r_multiplicity_one(p):
    for r in range(p):
        assert lambda_r_check(p, 3, r)


def test_lambda_r_rejects_out_of_range():
    with pytest.raises(ValueError):
        lambda_r_check(3, 2, 2)  # r = p-1 needs rank >= 3


def test_wall_nu():
    assert wall_nu(18, 9, 0) == (8, 0)
    assert wall_nu(18, 10, 3) == (3, 1)
    assert wall_nu(18, 3, 0) == (2, 12)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_digit_lattice_is_a_cube(p):
    for a in range(2, p):
        for dexp in (1, 2, 3):
            m = a * p**dexp - 2
            assert doty_E(m, p) == sorted(product((0, 1), repeat=dexp))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_factor_weights_closed_forms(p):
    # the three families of simple factors of H^0(ap^d-2, 0): the socle
    # weight, the middle-layer weights and the top-layer weight; dualizing
    # (coordinate swap) gives the weights inside V(0, ap^d-2)
    for a in range(2, p):
        for dexp in (1, 2, 3):
            m = a * p**dexp - 2
            n = a * p**dexp
            q = p**dexp
            top = doty_factor_weight((1,) * dexp, m, p)
            assert (top[1], top[0]) == (q - 1, (a - 2) * q)
            assert (top[1], top[0]) == wall_nu(n, q, 0)
            for i in range(1, dexp):
                e_i = tuple(0 if u == i else 1 for u in range(1, dexp + 1))
                w = doty_factor_weight(e_i, m, p)
                assert (w[1], w[0]) == wall_nu(n, q + p ** (i - 1), p**i)
            e_d = (1,) * (dexp - 1) + (0,)
            w = doty_factor_weight(e_d, m, p)
            assert (w[1], w[0]) == wall_nu(n, p ** (dexp - 1), 0)


def test_doty_validates_arguments():
    with pytest.raises(ValueError):
        doty_E(5, 4)
    with pytest.raises(ValueError):
        doty_E(-1, 3)
    with pytest.raises(ValueError):
        doty_factor_weight((1, 1), 16, 2)


@pytest.mark.parametrize("p", [2, 3])
def test_deficit_character(p):
    for a in range(1, p):
        for dexp in (1, 2):
            for r in range(p):
                n = a * p**dexp + r
                if n > 18:
                    continue
                rep = main3_deficit_check(p, a, dexp, r)
                assert rep.ok, (p, a, dexp, r, rep.failures)
                assert all(v >= 0 for v in rep.deficits.values())
                if a == 1:
                    assert not any(rep.deficits.values())
                else:
                    assert rep.deficits[rep.support_weight] == 1


def test_deficit_check_validates_arguments():
    with pytest.raises(ValueError):
        main3_deficit_check(4, 1, 1, 0)
    with pytest.raises(ValueError):
        main3_deficit_check(3, 3, 1, 0)
    with pytest.raises(ValueError):
        main3_deficit_check(3, 1, 0, 0)
