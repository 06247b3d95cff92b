"""Seeded random builders shared across the test suite.

Every randomized test owns its ``random.Random`` instance, so a failure
reproduces from the seed in the test body alone.  The builders below
take that generator as their first argument and never touch global
state.
"""

from fractions import Fraction

from thueff.laurent import LaurentSeries
from thueff.polynomials import Poly, RatFunc
from thueff.quartic import RingElem


def rand_fraction(rng, lo=-9, hi=9, max_den=9):
    """A fraction with numerator in [lo, hi] and denominator in [1, max_den]."""
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_poly(rng, max_deg=4, lo=-9, hi=9, nonzero=False):
    """Integer-coefficient polynomial of degree <= max_deg (zero allowed)."""
    while True:
        coeffs = [rng.randint(lo, hi) for _ in range(rng.randint(1, max_deg + 1))]
        p = Poly(coeffs)
        if p or not nonzero:
            return p


def rand_ratfunc(rng, max_deg=4, lo=-9, hi=9, nonzero=False):
    """Random numerator over a random nonzero denominator."""
    while True:
        q = RatFunc(
            rand_poly(rng, max_deg, lo, hi),
            rand_poly(rng, max_deg, lo, hi, nonzero=True),
        )
        if q or not nonzero:
            return q


def rand_elem(rng, max_deg=1, lo=-9, hi=9, nonzero=False, rational_every=0):
    """Ring element with polynomial coefficients of degree <= max_deg.

    ``rational_every = n`` makes roughly one element in n carry a genuine
    rational-function coefficient; the common all-polynomial case keeps
    the heavy property loops fast.
    """
    while True:
        coeffs = [RatFunc(rand_poly(rng, max_deg, lo, hi)) for _ in range(4)]
        if rational_every and rng.randrange(rational_every) == 0:
            i = rng.randrange(4)
            coeffs[i] = coeffs[i] / RatFunc(rand_poly(rng, 1, lo, hi, nonzero=True))
        e = RingElem(*coeffs)
        if e or not nonzero:
            return e


def rand_series(rng, max_width=6, lo=-9, hi=9):
    """Resolved Laurent series: random lead, window of 1..max_width terms."""
    lead = rng.randint(-5, 5)
    width = rng.randint(1, max_width)
    coeffs = [rand_fraction(rng, lo, hi) for _ in range(width)]
    head = rng.randint(lo, hi)
    coeffs[0] = Fraction(head if head else 1)
    return LaurentSeries(lead, coeffs, lead + width)


def rand_exponents(rng, bound=3):
    """A unit-exponent triple with each entry in [-bound, bound]."""
    return (
        rng.randint(-bound, bound),
        rng.randint(-bound, bound),
        rng.randint(-bound, bound),
    )
