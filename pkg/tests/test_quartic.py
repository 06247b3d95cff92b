"""Arithmetic in the quotient ring Q(lam)[alpha] / (alpha^4 - lam*alpha^3 - 6*alpha^2 + lam*alpha + 1).

Multiplication is the oracle for every claimed inverse (a * a^-1 == 1)
and the minimal polynomial is the oracle for every claimed conjugate
(f(conjugate) == 0); both are asserted before the pinned closed forms.
Seeded random loops exercise the ring axioms, norms, the Galois action
and the Siegel residual at smoke size (full size in the acceptance gate).
"""

import random
from fractions import Fraction

import pytest

import conftest
import property_suites
from thueff import quartic
from thueff.errors import ZeroDivisor
from thueff.polynomials import LAM, ONE as P_ONE, Poly, RatFunc
from thueff.quartic import (
    ALPHA,
    ONE,
    REWRITE_ROW,
    ZERO,
    RingElem,
    coefficients,
    conjugates,
    elem_from_xy,
    f_lambda_eval,
    galois,
    min_poly_value,
    norm,
    ring_inv,
    ring_mul,
    ring_pow,
    unit_from_exponents,
)

LAM_RF = RatFunc(LAM)


# -- the rewrite rule and the minimal polynomial ----------------------------------


def test_alpha_fourth_power_rewrites():
    got = ring_mul(ALPHA, ring_pow(ALPHA, 3))
    assert got == RingElem.of(-1, -LAM_RF, 6, LAM_RF)
    assert got == RingElem(*REWRITE_ROW)


def test_min_poly_kills_alpha():
    assert min_poly_value(ALPHA) == ZERO


def test_identity_element():
    rng = random.Random(20260821)
    for _ in range(50):
        b = conftest.rand_elem(rng)
        assert ring_mul(ONE, b) == b
        assert ring_mul(b, ONE) == b


# -- inverses, with the multiplication oracle first -------------------------------


def test_inverse_of_alpha_plus_one_against_mul_oracle():
    quarter = RatFunc(Poly((Fraction(1, 4),)))
    closed_form = RingElem.of(
        quarter * RatFunc(Poly((5,))),
        quarter * RatFunc(Poly((-5, 1))),
        quarter * RatFunc(Poly((-1, -1))),
        quarter,
    )
    assert ring_mul(ALPHA + ONE, closed_form) == ONE
    assert ring_inv(ALPHA + ONE) == closed_form


def test_inverse_of_alpha_plus_one_coefficients():
    c0, c1, c2, c3 = coefficients(ring_inv(ALPHA + ONE))
    assert c0 == RatFunc(Poly((Fraction(5, 4),)))
    assert c1 == RatFunc(Poly((Fraction(-5, 4), Fraction(1, 4))))
    assert c2 == RatFunc(Poly((Fraction(-1, 4), Fraction(-1, 4))))
    assert c3 == RatFunc(Poly((Fraction(1, 4),)))


def test_inverse_of_alpha_against_mul_oracle():
    # from the minimal polynomial: alpha * (alpha^3 - lam*alpha^2 - 6*alpha + lam) = -1
    cubic = RingElem.of(LAM_RF, -6, -LAM_RF, 1)
    assert ring_mul(ALPHA, cubic) == -ONE
    assert ring_inv(ALPHA) == -cubic
    assert ring_mul(ALPHA, ring_inv(ALPHA)) == ONE


def test_inverse_of_alpha_minus_one_against_mul_oracle():
    got = ring_inv(ALPHA - ONE)
    assert ring_mul(ALPHA - ONE, got) == ONE
    quarter = RatFunc(Poly((Fraction(1, 4),)))
    closed_form = RingElem.of(
        quarter * RatFunc(Poly((-5,))),
        quarter * RatFunc(Poly((-5, -1))),
        quarter * RatFunc(Poly((1, -1))),
        quarter,
    )
    assert got == closed_form


def test_inverse_of_one():
    assert ring_inv(ONE) == ONE


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisor):
        ring_inv(ZERO)


def test_random_inverses_via_mul_oracle():
    rng = random.Random(20260822)
    for _ in range(100):
        a = conftest.rand_elem(rng, nonzero=True, rational_every=8)
        assert ring_mul(a, ring_inv(a)) == ONE


# -- the Galois action --------------------------------------------------------------


def test_galois_identity_automorphism():
    rng = random.Random(20260823)
    for _ in range(50):
        a = conftest.rand_elem(rng)
        assert galois(a, 1) == a


def test_galois_images_are_roots():
    for i in (1, 2, 3, 4):
        assert min_poly_value(galois(ALPHA, i)) == ZERO


def test_galois_two_is_mobius_image():
    expected = ring_mul(ALPHA - ONE, ring_inv(ALPHA + ONE))
    assert galois(ALPHA, 2) == expected


def test_galois_three_is_negated_inverse():
    assert galois(ALPHA, 3) == RingElem.of(LAM_RF, -6, -LAM_RF, 1)
    assert galois(ALPHA, 3) == -ring_inv(ALPHA)


def test_galois_composition_on_alpha():
    for i in (1, 2, 3, 4):
        for j in (1, 2, 3, 4):
            k = ((i - 1) + (j - 1)) % 4 + 1
            assert galois(galois(ALPHA, i), j) == galois(ALPHA, k)


def test_galois_bad_index_rejected():
    with pytest.raises(ValueError):
        galois(ALPHA, 5)


def test_conjugates_table_matches_galois():
    table = conjugates()
    assert len(table) == 4
    for i, c in enumerate(table, start=1):
        assert c == galois(ALPHA, i)


# -- construction from (x, y) pairs and the norm form --------------------------------


def test_elem_from_xy_pinned():
    assert elem_from_xy(P_ONE, Poly(())) == ONE
    assert elem_from_xy(Poly(()), Poly((-1,))) == ALPHA
    assert elem_from_xy(LAM, P_ONE) == RingElem.of(LAM_RF, -1)


def test_norm_of_alpha_is_one():
    assert norm(ALPHA) == RatFunc(1)


def test_norm_of_one_plus_alpha_combination():
    assert norm(elem_from_xy(P_ONE, P_ONE)) == RatFunc(-4)


def test_norm_of_one():
    assert norm(ONE) == RatFunc(1)


def test_f_lambda_eval_pinned():
    assert f_lambda_eval(P_ONE, Poly(())) == RatFunc(1)
    assert f_lambda_eval(P_ONE, Poly((-1,))) == RatFunc(-4)
    assert f_lambda_eval(Poly(()), P_ONE) == RatFunc(1)


def test_coefficients_pinned():
    assert coefficients(ALPHA - ONE) == (RatFunc(-1), RatFunc(1), RatFunc(0), RatFunc(0))
    square = ring_mul(ALPHA - ONE, ALPHA - ONE)
    assert coefficients(square) == (RatFunc(1), RatFunc(-2), RatFunc(1), RatFunc(0))


# -- units from exponent triples ------------------------------------------------------


def test_unit_generators():
    assert unit_from_exponents(1, 0, 0) == ALPHA - ONE
    assert unit_from_exponents(0, 1, 0) == ALPHA
    assert unit_from_exponents(0, 0, 1) == ALPHA + ONE
    assert unit_from_exponents(0, 0, 0) == ONE


def test_unit_negative_exponents_invert():
    assert unit_from_exponents(-1, 0, 0) == ring_inv(ALPHA - ONE)
    rng = random.Random(20260824)
    for _ in range(40):
        r, s, t = conftest.rand_exponents(rng, bound=3)
        u = unit_from_exponents(r, s, t)
        v = unit_from_exponents(-r, -s, -t)
        assert ring_mul(u, v) == ONE


def test_ring_pow_edge_cases():
    a = ALPHA + ONE
    assert ring_pow(a, 0) == ONE
    assert ring_pow(a, -2) == ring_mul(ring_inv(a), ring_inv(a))
    with pytest.raises(ZeroDivisor):
        ring_pow(ZERO, -1)


# -- JSON form -------------------------------------------------------------------------


def test_ring_elem_json_round_trip():
    rng = random.Random(20260825)
    for _ in range(60):
        a = conftest.rand_elem(rng, rational_every=4)
        assert RingElem.from_json(a.to_json()) == a


# -- randomized batteries at smoke size ------------------------------------------------


def test_ring_axioms_smoke():
    assert property_suites.ring_axioms(150) == 150


def test_norm_multiplicativity_smoke():
    assert property_suites.norm_multiplicativity(150) == 150


def test_norm_form_factorization_smoke():
    assert property_suites.norm_form_factorization(200) == 200


def test_siegel_residual_smoke():
    assert property_suites.siegel_residual(200) == 200


def test_galois_composition_smoke():
    assert property_suites.galois_composition(200) == 200
