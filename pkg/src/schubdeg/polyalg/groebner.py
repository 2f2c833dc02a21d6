"""
Buchberger's algorithm with the normal selection strategy and Gebauer–Möller pair updates,
run on sympy PolyElements of a ring carrying the requested term order.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import structlog
from sympy import QQ
from sympy.polys.groebnertools import spoly
from sympy.polys.rings import PolyElement, PolyRing

from schubdeg.config import RESOURCE_CAPS, ResourceCaps
from schubdeg.polyalg.orders import TermOrder
from schubdeg.polyalg.ring import Monomial, MPoly, Ring, to_fraction

logger = structlog.get_logger("schubdeg.polyalg.groebner")


class ResourceCapExceededError(Exception):
    pass


@lru_cache(maxsize=None)
def order_ring(ring: Ring, order: TermOrder) -> PolyRing:
    """sympy ring over the names of `ring` whose leading terms follow `order`."""
    return PolyRing(ring.sympy_ring.symbols, QQ, order.key_for(ring))


def buchberger(
    polys: Sequence[PolyElement], sympy_ring: PolyRing, caps: ResourceCaps = RESOURCE_CAPS
) -> list[PolyElement]:
    """
    Reduced Groebner basis of the ideal spanned by `polys`, monic and sorted
    by leading monomial, highest first. The zero ideal gives [].
    """
    key = sympy_ring.order
    monomial_div = sympy_ring.monomial_div
    monomial_lcm = sympy_ring.monomial_lcm
    monomial_mul = sympy_ring.monomial_mul
    f: list[PolyElement] = []
    leads: list[Monomial] = []

    def add(poly: PolyElement) -> int:
        poly = poly.monic()
        degree = max(sum(m) for m in poly)
        if degree > caps.max_degree:
            raise ResourceCapExceededError(
                f"Groebner basis element of degree {degree} exceeds max_degree={caps.max_degree}"
            )
        f.append(poly)
        leads.append(poly.LM)
        return len(f) - 1

    def update(basis: set[int], pairs: set[tuple[int, int]], ih: int):
        mh = leads[ih]

        candidates = basis.copy()
        new_pairs = set()
        while candidates:
            ig = candidates.pop()
            mg = leads[ig]
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(ip: int) -> bool:
                return monomial_div(lcm_hg, monomial_lcm(mh, leads[ip])) is not None

            if monomial_mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(ipx) for ipx in candidates)
                and not any(lcm_divides(pair[1]) for pair in new_pairs)
            ):
                new_pairs.add((ih, ig))

        # coprime leading monomials never need reducing
        kept_new = {
            (ih, ig)
            for ih, ig in new_pairs
            if monomial_mul(mh, leads[ig]) != monomial_lcm(mh, leads[ig])
        }

        kept_old = set()
        for ig1, ig2 in pairs:
            lcm12 = monomial_lcm(leads[ig1], leads[ig2])
            if (
                monomial_div(lcm12, mh) is None
                or monomial_lcm(leads[ig1], mh) == lcm12
                or monomial_lcm(leads[ig2], mh) == lcm12
            ):
                kept_old.add((ig1, ig2))

        new_basis = {ig for ig in basis if monomial_div(leads[ig], mh) is None}
        new_basis.add(ih)
        if len(new_basis) > caps.max_basis_size:
            raise ResourceCapExceededError(
                f"Groebner basis grew past max_basis_size={caps.max_basis_size}"
            )
        return new_basis, kept_old | kept_new

    def pair_key(pair: tuple[int, int]):
        lcm = monomial_lcm(leads[pair[0]], leads[pair[1]])
        return (sum(lcm), key(lcm), pair)

    def divisors(indices) -> list[PolyElement]:
        return [f[i] for i in sorted(indices, key=lambda i: key(leads[i]))]

    inputs = [p for p in polys if p]
    if not inputs:
        return []
    for poly in inputs:
        add(poly)

    basis: set[int] = set()
    pairs: set[tuple[int, int]] = set()
    for ih in sorted(range(len(f)), key=lambda i: (key(leads[i]), i)):
        basis, pairs = update(basis, pairs, ih)

    processed = 0
    while pairs:
        pair = min(pairs, key=pair_key)
        pairs.remove(pair)
        processed += 1
        if processed > caps.max_pairs:
            raise ResourceCapExceededError(f"More than max_pairs={caps.max_pairs} S-pairs")
        h = spoly(f[pair[0]], f[pair[1]], sympy_ring).rem(divisors(basis))
        if h:
            basis, pairs = update(basis, pairs, add(h))

    reduced = []
    for ig in basis:
        h = f[ig].rem(divisors(basis - {ig}))
        if h:
            reduced.append(h.monic())
    reduced.sort(key=lambda p: key(p.LM), reverse=True)
    logger.debug(f"Groebner basis of {len(reduced)} elements after {processed} S-pairs")
    return reduced


def reduced_groebner_basis(
    polys: Sequence[MPoly], ring: Ring, order: TermOrder, caps: ResourceCaps = RESOURCE_CAPS
) -> list[MPoly]:
    for poly in polys:
        if poly.ring != ring:
            raise ValueError(f"Generator {poly} is not in ring {ring.names}")
    sympy_ring = order_ring(ring, order)
    basis = buchberger([poly.element.set_ring(sympy_ring) for poly in polys], sympy_ring, caps)
    return [ring.from_element(g) for g in basis]


def reduce_modulo(poly: MPoly, basis: Sequence[MPoly], order: TermOrder) -> MPoly:
    """Remainder of `poly` by a monic basis (full reduction)."""
    sympy_ring = order_ring(poly.ring, order)
    divisors = [g.element.set_ring(sympy_ring) for g in basis]
    return poly.ring.from_element(poly.element.set_ring(sympy_ring).rem(divisors))


def lead_term(poly: MPoly, order: TermOrder) -> tuple[Monomial, Fraction]:
    if poly.is_zero:
        raise ValueError("The zero polynomial has no leading term")
    monomial, coefficient = poly.element.set_ring(order_ring(poly.ring, order)).LT
    return monomial, to_fraction(coefficient)


def exact_quotient(dividend: MPoly, divisor: MPoly) -> MPoly:
    """Quotient of an exact division; raises ValueError when `divisor` does not divide."""
    if divisor.is_zero:
        raise ZeroDivisionError("Division by the zero polynomial")
    quotient, remainder = dividend.element.div(divisor.element)
    if remainder:
        raise ValueError(f"{divisor} does not divide {dividend}")
    return MPoly.wrap(dividend.ring, quotient)
