import math
from fractions import Fraction

import pytest

from svjack.selberg import (
    DomainError,
    SelbergPoleError,
    aomoto_closed,
    aomoto_ratio_exact,
    aomoto_recursion_check,
    check_selberg_domain,
    i0_closed,
    montecarlo_symmetrized_moment,
    selberg_closed,
    selberg_montecarlo,
    selberg_quadrature,
    vanishing_check,
    vanishing_moment_exact,
)


def test_selberg_n1_is_beta():
    # S_1(a, b, g) = B(a, b); gamma drops out
    for a, b in [(1.0, 1.0), (2.0, 2.0), (0.5, 1.5)]:
        expected = math.gamma(a) * math.gamma(b) / math.gamma(a + b)
        assert selberg_closed(1, a, b, 0.7) == pytest.approx(expected, rel=1e-12)


def test_selberg_s2_111_equals_one_sixth():
    # int int (x - y)^2 over the unit square = 1/6
    assert selberg_closed(2, 1, 1, 1) == pytest.approx(1 / 6, rel=1e-12)


def test_selberg_s3_closed_positive():
    v = selberg_closed(3, 1, 1, 0.5)
    assert v > 0 and math.isfinite(v)


def test_selberg_pole_detection():
    with pytest.raises(SelbergPoleError):
        selberg_closed(2, 0.25, 1, -0.25)  # alpha + gamma = 0 hits gamma(0)


def test_domain_predicate():
    assert check_selberg_domain(2, 1, 1, 1)
    assert not check_selberg_domain(2, -1, 1, 1)
    assert not check_selberg_domain(2, 1, 1, -0.6)


def test_aomoto_k1_shifts_alpha():
    # S_1((1); a, b) = B(a+1, b) = B(a, b) * a/(a+b)
    a, b = 1.5, 2.5
    assert aomoto_closed(1, 1, a, b, 0.3) == pytest.approx(
        selberg_closed(1, a, b, 0.3) * a / (a + b), rel=1e-12)


def test_aomoto_n2_k1_value():
    # int int x (x-y)^2 = 1/12: ratio (a + g)/(a + b + 2g) = 1/2 at a=b=g=1
    assert aomoto_closed(2, 1, 1, 1, 1) == pytest.approx(1 / 12, rel=1e-12)


def test_aomoto_specialization_vanishes_exactly():
    for r in (2, 3, 4):
        for k in range(1, r + 1):
            assert aomoto_ratio_exact(r, Fraction(-1, 8), k) == 0
    assert aomoto_ratio_exact(2, Fraction(-1, 8), 0) == 1


def test_i0_closed_finite():
    v = i0_closed(2, -0.25)
    assert math.isfinite(v) and v != 0


def test_quadrature_beta22():
    val, err = selberg_quadrature(1, 2, 2, 1)
    assert val == pytest.approx(1 / 6, abs=1e-12)
    assert err < 1e-12


def test_quadrature_s2():
    val, err = selberg_quadrature(2, 1, 1, 1)
    assert val == pytest.approx(1 / 6, abs=1e-8)


def test_quadrature_rejects_large_n():
    with pytest.raises(ValueError):
        selberg_quadrature(3, 1, 1, 1)


def test_montecarlo_s3_within_three_sigma():
    closed = selberg_closed(3, 1, 1, 1)
    est, err = selberg_montecarlo(3, 1, 1, 1, samples=200_000, seed=42)
    assert abs(est - closed) < 3 * err
    assert abs(est - closed) / closed < 1e-2


def test_montecarlo_deterministic_given_seed():
    a = selberg_montecarlo(2, 1, 1, 1, samples=10_000, seed=5)
    b = selberg_montecarlo(2, 1, 1, 1, samples=10_000, seed=5)
    assert a == b


def test_montecarlo_budget_guard():
    from svjack.selberg import BudgetExceeded
    with pytest.raises(BudgetExceeded):
        selberg_montecarlo(2, 1, 1, 1, samples=10 ** 9)


def test_alpha_beta_symmetry_numeric():
    # S_n is invariant under alpha <-> beta (x -> 1-x)
    v1, e1 = selberg_quadrature(2, 2, 3, 1)
    v2, e2 = selberg_quadrature(2, 3, 2, 1)
    assert v1 == pytest.approx(v2, rel=1e-10)


def test_moment_permutation_symmetry():
    r1, e1 = montecarlo_symmetrized_moment(3, 1, 1, 1, (2, 1, 0),
                                           samples=150_000, seed=9)
    r2, e2 = montecarlo_symmetrized_moment(3, 1, 1, 1, (0, 2, 1),
                                           samples=150_000, seed=10)
    assert abs(r1 - r2) < 3 * (e1 + e2)


def test_recursion_report():
    rep = aomoto_recursion_check(2, 1.0, 1.0, 1.0)
    assert rep["corrected_all_ok"]
    # the transcribed form disagrees with the closed product here
    assert not rep["transcribed_all_ok"]
    ks = [row["k"] for row in rep["rows"]]
    assert ks == [1, 2]


def test_recursion_randomized_domain_sweep():
    import random
    rng = random.Random(4)
    for _ in range(6):
        n = rng.choice([2, 3, 4])
        a = rng.uniform(0.5, 3.0)
        b = rng.uniform(0.5, 3.0)
        g = rng.uniform(0.1, 1.5)
        rep = aomoto_recursion_check(n, a, b, g)
        assert rep["corrected_all_ok"]


# --- torus vanishing ----------------------------------------------------------

def test_exact_constant_term_r2_t1():
    # CT[(z1 - z2)^2 / (z1 z2)] = -2 under the doubled-exponent encoding
    assert vanishing_moment_exact(2, 1, (0, 0)) == -2
    assert vanishing_moment_exact(2, 1, (1, 0)) == 0
    assert vanishing_moment_exact(2, 1, (2, 1)) == 0


def test_exact_constant_term_halfinteger_t():
    # r = 2, t = 1/2: single-valued after the square-root substitution; the
    # vacuum moment vanishes as well here (the integrand is odd under
    # w_1 -> -w_1), while every |m| != 0 moment vanishes by homogeneity
    assert vanishing_moment_exact(2, Fraction(1, 2), (0, 0)) == 0
    assert vanishing_moment_exact(2, Fraction(1, 2), (1, 0)) == 0
    assert vanishing_moment_exact(3, 1, (0, 0, 0)) == -6  # Dyson constant term
    assert vanishing_moment_exact(3, 1, (1, 0, 0)) == 0


def test_vanishing_check_reports():
    rep = vanishing_check(2, Fraction(1, 2), (1, 0), samples=40_000, seed=7)
    assert rep["consistent_with_zero"]
    assert rep["exact_moment"] == "0"
    assert not rep["inconclusive"]


def test_vanishing_check_zero_moment_is_normalizer():
    rep = vanishing_check(2, 1, (0, 0), samples=20_000, seed=3)
    assert rep["consistent_with_zero"] is None
    assert rep["exact_moment"] == rep["exact_normalizer"] == "-2"


def test_vanishing_check_multi_index():
    rep = vanishing_check(3, Fraction(1, 2), (2, 1, 0), samples=40_000, seed=11)
    assert rep["consistent_with_zero"]
    assert rep["exact_moment"] == "0"


def test_vanishing_domain_guard():
    with pytest.raises(DomainError):
        vanishing_check(2, Fraction(1, 3), (1, 0))
