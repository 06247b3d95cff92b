"""Truncated Laurent series in 1/lam and the quartic's series roots.

The independent oracle here is the defining equation itself: every lifted
root is substituted back into the quartic and the residual must be zero
through the advertised precision. Pinned windows cover the geometric
series, the four root expansions, rational-function expansion, precision
bookkeeping and the error surface.
"""

import random
from fractions import Fraction

import pytest

import conftest
import property_suites
from thueff.errors import NotASimpleRoot, PrecisionUnderflow, ZeroDivisor
from thueff.laurent import (
    LaurentSeries,
    constant,
    expand_ratfunc,
    f_lambda_at_series,
    f_tilde_at_series,
    hensel_lift,
    monomial,
    poly_series,
    precision_cap,
    quartic_roots,
    series_arith,
    zero_to_order,
)
from thueff.polynomials import LAM, ONE, Poly, RatFunc


# -- arithmetic on explicit windows ---------------------------------------------


def test_inv_geometric_series():
    s = LaurentSeries(0, [1, -1, 0, 0], 4)  # 1 - 1/lam, exact to order 4
    assert s.inv() == LaurentSeries(0, [1, 1, 1, 1], 4)


def test_mul_by_monomial_shifts_root_window():
    alpha2 = quartic_roots(4)[1]
    assert alpha2 == LaurentSeries(1, [-1, 0, 5], 4)
    shifted = monomial(1, 8) * alpha2
    assert shifted == LaurentSeries(2, [-1, 0, 5], 5)


def test_add_own_negation_is_zero_to_order():
    s = LaurentSeries(-1, [2, 0, 7, 1], 3)
    total = series_arith("add", s, s.scale(-1))
    assert not total.resolved
    assert total.order == 3


def test_pow_matches_repeated_product():
    rng = random.Random(20260811)
    for _ in range(100):
        s = conftest.rand_series(rng)
        assert s ** 3 == s * s * s
        assert s ** 1 == s


def test_inv_of_zero_window_raises():
    with pytest.raises(ZeroDivisor):
        zero_to_order(4).inv()


def test_series_arith_dispatch_errors():
    s = constant(1, 4)
    with pytest.raises(ValueError):
        series_arith("inv", s, s)
    with pytest.raises(ValueError):
        series_arith("add", s)
    with pytest.raises(ValueError):
        series_arith("compose", s, s)


# -- expansion of rational functions ----------------------------------------------


def test_expand_polynomial_is_its_own_expansion():
    s = expand_ratfunc(RatFunc(Poly((16, 0, 1))), 4)
    assert s.lead == -2
    assert s.coeffs == (1, 0, 16, 0, 0, 0)
    assert s.order == 4


def test_expand_simple_pole_alternates():
    s = expand_ratfunc(RatFunc(ONE, Poly((1, 1))), 5)
    assert s == LaurentSeries(1, [1, -1, 1, -1], 5)


def test_expand_cancels_removable_factor():
    s = expand_ratfunc(RatFunc(Poly((-1, 0, 1)), Poly((-1, 1))), 3)
    assert s == LaurentSeries(-1, [1, 1, 0, 0], 3)


def test_expand_zero_input():
    assert expand_ratfunc(RatFunc(Poly(())), 6) == zero_to_order(6)


def test_expand_matches_defining_product_random():
    # oracle: expansion times the denominator reproduces the numerator
    rng = random.Random(20260812)
    for _ in range(200):
        f = conftest.rand_ratfunc(rng, max_deg=3, nonzero=True)
        order = rng.randint(1, 9)
        s = expand_ratfunc(f, order)
        den_deg = len(f.den.coeffs) - 1
        num_deg = len(f.num.coeffs) - 1
        back = s * poly_series(f.den, order + den_deg + 4)
        if back.order > -num_deg:
            num = poly_series(f.num, back.order)
        else:
            num = zero_to_order(back.order)  # window ends before the lead
        assert not (back - num).resolved


# -- Hensel lifting and the four roots ---------------------------------------------


def test_lift_at_seed_one():
    assert hensel_lift(1, 4) == LaurentSeries(0, [1, -2, 2, 8], 4)


def test_lift_at_seed_zero():
    assert hensel_lift(0, 4) == LaurentSeries(1, [-1, 0, 5], 4)


def test_lift_at_seed_minus_one():
    assert hensel_lift(-1, 4) == LaurentSeries(0, [-1, -2, -2, 8], 4)


def test_lift_rejects_non_simple_seed():
    with pytest.raises(NotASimpleRoot):
        hensel_lift(2, 4)


def test_lift_rejects_bad_order():
    with pytest.raises(ValueError):
        hensel_lift(1, 0)


def test_roots_low_order_windows():
    r = quartic_roots(2)
    assert r[3] == LaurentSeries(-1, [1, 0, 5], 2)
    assert r[3].pretty() == "λ + 5/λ"
    leads = tuple(s.lead for s in quartic_roots(1))
    assert leads == (0, 1, 0, -1)


def test_roots_pairwise_distinct_at_order_one():
    r = quartic_roots(1)
    for i in range(4):
        for j in range(i + 1, 4):
            assert (r[i].lead, r[i].coeffs) != (r[j].lead, r[j].coeffs)


def test_root_residuals_vanish_to_precision():
    for order in (4, 8, 16):
        for s in quartic_roots(order):
            tilde = f_tilde_at_series(s)
            full = f_lambda_at_series(s)
            assert not tilde.resolved
            assert tilde.order >= order - 2
            assert not full.resolved
            assert full.order >= order - 3


def test_lift_prefixes_are_stable():
    for order in (3, 5, 9):
        small = quartic_roots(order)
        big = quartic_roots(2 * order)
        for a, b in zip(small, big):
            assert b.truncate(order) == a


# -- precision bookkeeping ----------------------------------------------------------


def test_coeff_at_past_order_is_an_error():
    s = quartic_roots(4)[0]
    assert s.coeff_at(3) == 8
    assert s.coeff_at(-5) == 0
    with pytest.raises(PrecisionUnderflow):
        s.coeff_at(4)


def test_unresolved_lead_properties_raise():
    z = zero_to_order(5)
    with pytest.raises(PrecisionUnderflow):
        z.valuation
    with pytest.raises(PrecisionUnderflow):
        z.leading_coeff


def test_monomial_and_poly_series_window_guards():
    with pytest.raises(ValueError):
        monomial(4, 4)
    with pytest.raises(ValueError):
        poly_series(LAM, -1)


def test_precision_cap_environment_override(monkeypatch):
    assert precision_cap() == 1024
    monkeypatch.setenv("THUEFF_PRECISION_CAP", "64")
    assert precision_cap() == 64
    monkeypatch.setenv("THUEFF_PRECISION_CAP", "zero")
    with pytest.raises(ValueError):
        precision_cap()


# -- text and JSON forms -------------------------------------------------------------


def test_pretty_pinned_strings():
    assert quartic_roots(4)[0].pretty() == "1 - 2/λ + 2/λ^2 + 8/λ^3"
    assert zero_to_order(3).pretty() == "0"
    assert LaurentSeries(1, [Fraction(1, 2)], 2).pretty() == "(1/2)/λ"
    assert LaurentSeries(-2, [1, 0, -3], 1).pretty() == "λ^2 - 3"


def test_json_round_trip():
    rng = random.Random(20260813)
    for _ in range(100):
        s = conftest.rand_series(rng)
        assert LaurentSeries.from_json(s.to_json()) == s


# -- the randomized valuation battery (full size in the acceptance gate) -------------


def test_series_valuation_axioms_smoke():
    assert property_suites.series_valuation_axioms(300) == 300
