"""
K-polynomials of quotients S/I by pivoting on the initial monomial ideal, and
the multidegrees read off from them.
"""

from functools import lru_cache
from math import comb
from typing import Sequence

import structlog
from pydantic import BaseModel, ConfigDict

from schubdeg.polyalg.groebner import lead_term
from schubdeg.polyalg.ideal import GREVLEX, Ideal, IdealError
from schubdeg.polyalg.kclass import KElem
from schubdeg.polyalg.monomial import minimalize, support
from schubdeg.polyalg.orders import TermOrder
from schubdeg.polyalg.ring import Monomial, MPoly, Ring, linear_form, root_ring

logger = structlog.get_logger("schubdeg.polyalg.hilbert")

Weights = Sequence[Sequence[int]]


class KPolynomialReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    kpolynomial: MPoly
    multidegree: MPoly
    codimension: int


def _add(a: dict[Monomial, int], b: dict[Monomial, int], shift: Monomial | None = None):
    result = dict(a)
    for m, c in b.items():
        if shift is not None:
            m = tuple(x + y for x, y in zip(m, shift))
        value = result.get(m, 0) + c
        if value:
            result[m] = value
        else:
            result.pop(m, None)
    return result


def _coprime_product(monomials: tuple[Monomial, ...], nvars: int) -> dict[Monomial, int]:
    result: dict[Monomial, int] = {(0,) * nvars: 1}
    for m in monomials:
        result = _add(result, {k: -c for k, c in result.items()}, shift=m)
    return result


def _pairwise_coprime(supports: list[frozenset[int]]) -> bool:
    seen: set[int] = set()
    for s in supports:
        if s & seen:
            return False
        seen |= s
    return True


def _strategy(monomials: tuple[Monomial, ...]) -> int:
    """Variable occurring in the most generators; lowest index on ties."""
    nvars = len(monomials[0])
    counts = [sum(1 for m in monomials if m[i]) for i in range(nvars)]
    return max(range(nvars), key=lambda i: (counts[i], -i))


@lru_cache(maxsize=4096)
def _kpolynomial(monomials: tuple[Monomial, ...], nvars: int) -> dict[Monomial, int]:
    if not monomials:
        return {(0,) * nvars: 1}
    if any(not any(m) for m in monomials):
        return {}
    if _pairwise_coprime([support(m) for m in monomials]):
        return _coprime_product(monomials, nvars)
    x = _strategy(monomials)
    unit_x = tuple(1 if i == x else 0 for i in range(nvars))
    with_x = tuple(minimalize([m for m in monomials if not m[x]] + [unit_x]))
    colon_x = tuple(minimalize([m[:x] + (max(m[x] - 1, 0),) + m[x + 1 :] for m in monomials]))
    return _add(_kpolynomial(with_x, nvars), _kpolynomial(colon_x, nvars), shift=unit_x)


def kpolynomial_ring(ring: Ring) -> Ring:
    return Ring(names=tuple(f"t_{name}" for name in ring.names))


def kpolynomial(ideal: Ideal, order: TermOrder = GREVLEX) -> MPoly:
    """
    Finely graded K-polynomial of S/in(I) in variables t_<name>; it specializes
    to the K-polynomial of S/I under any grading for which I is homogeneous.
    """
    if ideal.is_zero:
        return kpolynomial_ring(ideal.ring).one()
    leading = tuple(minimalize(lead_term(g, order)[0] for g in ideal.groebner(order)))
    terms = _kpolynomial(leading, ideal.ring.nvars)
    logger.debug(f"K-polynomial from {len(leading)} initial monomials, {len(terms)} terms")
    return MPoly(kpolynomial_ring(ideal.ring), terms)


def _check_weights(ideal: Ideal, weights: Weights) -> int:
    if len(weights) != ideal.ring.nvars:
        raise IdealError(f"{len(weights)} weights for {ideal.ring.nvars} variables")
    ranks = {len(w) for w in weights}
    if len(ranks) != 1:
        raise IdealError("All weights must have the same length")
    return ranks.pop()


def graded_kpolynomial(ideal: Ideal, weights: Weights, order: TermOrder = GREVLEX) -> KElem:
    """K-polynomial with t_x ↦ e^{-weight(x)}."""
    rank = _check_weights(ideal, weights)
    result = KElem.zero(rank)
    for monomial, coefficient in kpolynomial(ideal, order).terms.items():
        exponent = tuple(
            -sum(e * w[k] for e, w in zip(monomial, weights)) for k in range(rank)
        )
        result = result + KElem(rank, {exponent: int(coefficient)})
    return result


def _truncated_power(form: MPoly, exponent: int, degree: int) -> MPoly:
    """(1 - form)^exponent up to total degree `degree`."""
    ring = form.ring
    result = ring.zero()
    power = ring.one()
    for k in range(min(exponent, degree) + 1):
        result = result + power * (comb(exponent, k) * (-1) ** k)
        power = power * form
    return result


def multidegree(ideal: Ideal, weights: Weights, ring: Ring | None = None) -> MPoly:
    """
    Degree-c part of K(1 - μ) with c the codimension, in the root ring a1..ar
    unless another ring with as many variables is supplied.
    """
    rank = _check_weights(ideal, weights)
    target = ring or root_ring(rank)
    codim = ideal.codimension()
    if codim > ideal.ring.nvars:
        return target.zero()
    forms = [linear_form(target, w) for w in weights]
    result = target.zero()
    cache: dict[tuple[int, int], MPoly] = {}
    for monomial, coefficient in kpolynomial(ideal).terms.items():
        term = target.constant(coefficient)
        for index, exponent in enumerate(monomial):
            if exponent:
                key = (index, exponent)
                if key not in cache:
                    cache[key] = _truncated_power(forms[index], exponent, codim)
                term = (term * cache[key]).truncate(codim)
        result = result + term
    return result.homogeneous_part(codim)


def standard_weights(ring: Ring) -> list[tuple[int]]:
    return [(1,)] * ring.nvars


def kpoly_and_multidegree(
    ideal: Ideal, order: TermOrder = GREVLEX, weights: Weights | None = None
) -> KPolynomialReport:
    weights = weights if weights is not None else standard_weights(ideal.ring)
    codim = ideal.codimension()
    return KPolynomialReport(
        kpolynomial=kpolynomial(ideal, order),
        multidegree=multidegree(ideal, weights),
        codimension=codim,
    )


def degree(ideal: Ideal) -> int:
    """Standard-graded degree; the multidegree under all weights 1 is degree * a1^c."""
    value = multidegree(ideal, standard_weights(ideal.ring))
    if value.is_zero:
        return 0
    return int(next(iter(value.terms.values())))
