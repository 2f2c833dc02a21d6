from enum import Enum

import structlog
from pydantic import BaseModel, ConfigDict, computed_field

from schubdeg.polyalg.ideal import Ideal, intersect_all
from schubdeg.polyalg.monomial import MonomialIdealError, minimal_primes_monomial
from schubdeg.polyalg.ring import Ring
from schubdeg.simplicial.complex import Label, SimplicialComplex
from schubdeg.simplicial.shelling import find_shelling

logger = structlog.get_logger("schubdeg.gvd.certificates")


class NonMonomialIdealError(Exception):
    pass


class Verdict(str, Enum):
    CERTIFIED = "certified"
    HYPOTHESIS_FAILED = "hypothesis-failed"


class RLLCertificate(BaseModel):
    """
    Evidence that a monomial limit is reduced: every component is generically
    reduced, all components have the same dimension, there are no embedded
    components, and the components can be added one at a time along a shelling
    of the facets they span.
    """

    model_config = ConfigDict(frozen=True)

    components: list[tuple[str, ...]]
    generically_reduced: bool
    equidimensional: bool
    without_embedded: bool
    shelling_order: list[tuple[Label, ...]] | None
    verdict: Verdict
    witness: str | None = None

    @computed_field  # type: ignore[misc]
    @property
    def certified(self) -> bool:
        return self.verdict == Verdict.CERTIFIED


def _monomial_basis(ideal: Ideal) -> list[tuple[int, ...]]:
    basis = ideal.groebner()
    if not all(g.is_monomial for g in basis):
        raise NonMonomialIdealError(
            f"Reduced Groebner basis is not monomial: {', '.join(map(str, basis))}"
        )
    return [next(iter(g.terms)) for g in basis]


def _failed_variable(ring: Ring, monomials: list[tuple[int, ...]], prime: tuple[str, ...]):
    """A variable of `prime` not reached as a bare generator once the others are inverted."""
    indices = [ring.index(name) for name in prime]
    for index in indices:
        bare = tuple(1 if i == index else 0 for i in indices)
        if not any(tuple(m[i] for i in indices) == bare for m in monomials):
            return ring.names[index]
    return None


def _component_complex(ring: Ring, components: list[tuple[str, ...]]) -> SimplicialComplex:
    labels = list(ring.names)
    facets = [[name for name in labels if name not in component] for component in components]
    return SimplicialComplex.from_facets(facets, vertices=labels)


def rll_certificate(ideal: Ideal) -> RLLCertificate:
    ring = ideal.ring
    monomials = _monomial_basis(ideal)
    try:
        components = minimal_primes_monomial(ring, [ring.monomial(m) for m in monomials])
    except MonomialIdealError as e:
        raise NonMonomialIdealError(str(e))
    report = {
        "components": components,
        "generically_reduced": True,
        "equidimensional": len({len(c) for c in components}) <= 1,
        "without_embedded": True,
        "shelling_order": None,
    }

    def failed(witness: str, **flags: bool) -> RLLCertificate:
        logger.warning(f"Limit not certified: {witness}")
        return RLLCertificate(
            **{**report, **flags}, verdict=Verdict.HYPOTHESIS_FAILED, witness=witness
        )

    if not components:
        return failed("unit ideal: the limit is empty")
    for component in components:
        variable = _failed_variable(ring, monomials, component)
        if variable is not None:
            return failed(
                f"not generically reduced at <{', '.join(component)}> in {variable}",
                generically_reduced=False,
            )
    if not report["equidimensional"]:
        lowest = max(components, key=len)
        return failed(f"component <{', '.join(lowest)}> has lower dimension")
    union = intersect_all(ring, [Ideal.of_variables(ring, c) for c in components])
    if not union.equals(ideal):
        return failed(
            "embedded components: the ideal differs from the intersection of its minimal primes",
            without_embedded=False,
        )
    shelling = find_shelling(_component_complex(ring, components))
    if not shelling.shellable:
        return failed(f"no shelling: {shelling.reason}")
    return RLLCertificate(
        **{**report, "shelling_order": [tuple(facet) for facet in shelling.order]},
        verdict=Verdict.CERTIFIED,
    )


def gluing_along_shelling(ideal: Ideal, certificate: RLLCertificate) -> bool:
    """
    Adding the components one at a time in shelling order, each new component
    meets the union so far in a reduced (squarefree) scheme.
    """
    if not certificate.certified or certificate.shelling_order is None:
        return False
    ring = ideal.ring
    primes = [
        Ideal.of_variables(ring, [name for name in ring.names if name not in facet])
        for facet in certificate.shelling_order
    ]
    union = primes[0]
    for prime in primes[1:]:
        overlap = union.sum(prime)
        if not all(all(e <= 1 for e in m) for m in _monomial_basis(overlap)):
            return False
        union = union.intersection(prime)
    return union.equals(ideal)
