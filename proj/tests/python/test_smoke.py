from fractions import Fraction

import pytest

import hyperpf


def test_pair_correlation_beta16_m4():
    rep = hyperpf.pair_correlation(16, 4)
    assert rep["r_coeffs"][32] == 12870
    assert rep["r_coeffs"][0] == 4465830320120
    assert rep["fourier"][32] == 25740
    assert rep["normalization"]["den"] == 99561092450391000


def test_thread_count_does_not_change_output():
    assert hyperpf.pair_correlation(16, 5, threads=1) == hyperpf.pair_correlation(16, 5, threads=4)


def test_partition_function_three_ways():
    for beta, L, M in [(4, 2, 2), (4, 2, 3), (16, 4, 2)]:
        pf = hyperpf.partition_function(L, M)
        assert pf == hyperpf.dyson_rhs(beta, M) == hyperpf.ct_partition(beta, M)
        assert pf == hyperpf.ct_partition(beta, M, signed_form=True)


def test_classical_pfaffian():
    rows = [[0, 1, 2, 3], [-1, 0, 4, 5], [-2, -4, 0, 6], [-3, -5, -6, 0]]
    assert hyperpf.hyperpfaffian_2form(rows) == 1 * 6 - 2 * 5 + 3 * 4
    half = [[0, Fraction(1, 2)], [Fraction(-1, 2), 0]]
    assert hyperpf.hyperpfaffian_2form(half) == Fraction(1, 2)


def test_one_point_function_is_density():
    res = hyperpf.r_m(4, 3, ["1/3"])
    assert res["value"] == (3, 0)


def test_gram_vector_shape():
    w = hyperpf.gram_vector(2, 2)
    assert w["term_count"] == 2
    assert [(t["indices"], t["coeff"]) for t in w["terms"]] == [([0, 3], 3), ([1, 2], 1)]


def test_verify_and_grid():
    assert hyperpf.verify("dyson", 2, 3)["ok"]
    assert hyperpf.verify("jacobi", 2, 2, 1, 3)["ok"]
    assert all(r["ok"] for r in hyperpf.default_grid())
    with pytest.raises(ValueError):
        hyperpf.verify("nope")


def test_samples_and_errors():
    rows = hyperpf.pair_samples(16, 4, points=5)
    assert len(rows) == 5 and rows[0] == (0.0, 0.0)
    with pytest.raises(ValueError):
        hyperpf.pair_correlation(6, 3)
    with pytest.raises(hyperpf.BudgetExceeded):
        hyperpf.pair_correlation(36, 6)
