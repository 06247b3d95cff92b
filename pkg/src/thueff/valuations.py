"""Valuation vectors at the four infinite places, and the induced height.

Every embedding of K = Q(lam)[alpha]/(f) into Q((1/lam)) sends alpha to
one of the four series roots of f.  The valuation vector of a nonzero
element collects the order of vanishing at infinity of its image under
each embedding, measured in units of ``a`` = deg(lam(T)); with lam of
degree ``a`` in the ground variable, an entry w means actual valuation
w*a.  Heights come from the negative part: H(z) = -sum(min(0, w_i)).

Substituting a truncated root series can only vanish to finite order for
a nonzero element, so leads are resolved by adaptive doubling of the
working order, starting at the Laurent default and giving up (with
PrecisionUnderflow) only at the precision cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import PrecisionUnderflow, ZeroElement
from .laurent import (
    DEFAULT_ORDER,
    LaurentSeries,
    expand_ratfunc,
    precision_cap,
    quartic_roots,
)
from .quartic import RingElem


@dataclass(frozen=True)
class ValuationVector:
    """(w1, w2, w3, w4) in units of a = deg lam."""

    w: tuple[int, int, int, int]

    def __iter__(self):
        return iter(self.w)

    def __getitem__(self, i: int) -> int:
        return self.w[i]

    def __add__(self, other: ValuationVector) -> ValuationVector:
        return ValuationVector(tuple(x + y for x, y in zip(self.w, other.w)))

    def __sub__(self, other: ValuationVector) -> ValuationVector:
        return ValuationVector(tuple(x - y for x, y in zip(self.w, other.w)))

    def scaled(self, k: int) -> ValuationVector:
        return ValuationVector(tuple(k * x for x in self.w))

    @property
    def total(self) -> int:
        return sum(self.w)

    @property
    def height(self) -> int:
        return -sum(min(0, x) for x in self.w)

    def to_json(self) -> dict:
        return {"w": list(self.w), "unit": "a"}


@lru_cache(maxsize=None)
def _root_powers(order: int) -> tuple[tuple[LaurentSeries, ...], ...]:
    """(S_i^0 unused, S_i, S_i^2, S_i^3) for each of the four roots."""
    table = []
    for s in quartic_roots(order):
        s2 = s * s
        table.append((None, s, s2, s2 * s))
    return tuple(table)


def _embed(a: RingElem, i: int, order: int) -> LaurentSeries:
    """Image of ``a`` under the embedding alpha -> i-th root series."""
    powers = _root_powers(order)[i - 1]
    acc = expand_ratfunc(a.c0, order + 8)
    for c, p in zip(a.coeffs[1:], powers[1:]):
        if c:
            acc = acc + expand_ratfunc(c, order + 8) * p
    return acc


def embed_series(a: RingElem, i: int, order: int) -> LaurentSeries:
    """Public window into the i-th embedding at a fixed working order."""
    if i not in (1, 2, 3, 4):
        raise ValueError(f"embedding index must be 1..4, got {i}")
    return _embed(a, i, order)


def valuation_vector(a: RingElem, start_order: int | None = None) -> ValuationVector:
    """Valuations of a nonzero element at the four infinite places."""
    if not a:
        raise ZeroElement("the zero element has no valuation vector")
    order = start_order or DEFAULT_ORDER
    cap = precision_cap()
    while True:
        images = [_embed(a, i, order) for i in (1, 2, 3, 4)]
        if all(s.resolved for s in images):
            return ValuationVector(tuple(s.lead for s in images))
        if order >= cap:
            raise PrecisionUnderflow(
                f"valuation lead unresolved at the precision cap ({cap})"
            )
        order = min(2 * order, cap)


def height_infinity(a: RingElem, start_order: int | None = None) -> int:
    """H(a) = -sum(min(0, w_i)), in units of a = deg lam."""
    return valuation_vector(a, start_order).height


def ratio_valuation_vector(
    a: RingElem, b: RingElem, start_order: int | None = None
) -> ValuationVector:
    """Valuation vector of a/b, computed without ring division."""
    return valuation_vector(a, start_order) - valuation_vector(b, start_order)


def unit_valuation_identity(r: int, s: int, t: int) -> ValuationVector:
    """Closed-form vector of (alpha-1)^r * alpha^s * (alpha+1)^t.

    The three fundamental units have vectors (1,0,0,-1), (0,1,0,-1) and
    (0,0,1,-1); the identity is their integer combination.
    """
    return ValuationVector((r, s, t, -(r + s + t)))


@dataclass(frozen=True)
class VandermondeReport:
    vector: ValuationVector
    leading_coeff: object  # Fraction of the embedding-1 leading term


def _rotated_indices(k: int) -> list[int]:
    return [((m + k - 1) % 4) for m in range(4)]


def vandermonde_report(start_order: int | None = None) -> VandermondeReport:
    """Valuations of prod_{i<j} (root_j - root_i) under each embedding.

    The k-th embedding permutes the roots cyclically, so each entry is
    the lead of the same product with rotated root indices.
    """
    order = start_order or DEFAULT_ORDER
    cap = precision_cap()
    while True:
        roots = quartic_roots(order)
        products = []
        for k in range(1, 5):
            idx = _rotated_indices(k)
            prod = None
            for i in range(4):
                for j in range(i + 1, 4):
                    d = roots[idx[j]] - roots[idx[i]]
                    prod = d if prod is None else prod * d
            products.append(prod)
        if all(p.resolved for p in products):
            vec = ValuationVector(tuple(p.lead for p in products))
            return VandermondeReport(vec, products[0].leading_coeff)
        if order >= cap:
            raise PrecisionUnderflow(
                f"Vandermonde lead unresolved at the precision cap ({cap})"
            )
        order = min(2 * order, cap)


def vandermonde_valuation(start_order: int | None = None) -> ValuationVector:
    return vandermonde_report(start_order).vector


def clear_caches() -> None:
    _root_powers.cache_clear()
