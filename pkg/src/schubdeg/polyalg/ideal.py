from typing import Iterable, Mapping, Sequence

import structlog

from schubdeg.config import RESOURCE_CAPS, ResourceCaps
from schubdeg.polyalg.groebner import (
    exact_quotient,
    lead_term,
    reduce_modulo,
    reduced_groebner_basis,
)
from schubdeg.polyalg.monomial import monomial_dimension
from schubdeg.polyalg.orders import TermOrder
from schubdeg.polyalg.ring import Coefficient, MPoly, Ring, parse_polynomials

logger = structlog.get_logger("schubdeg.polyalg.ideal")

GREVLEX = TermOrder.grevlex()


class IdealError(Exception):
    pass


class InvariantViolationError(Exception):
    pass


class Ideal:
    """
    Ideal of a polynomial ring given by generators. Reduced Groebner bases are
    computed lazily, once per term order.
    """

    __slots__ = ("ring", "generators", "_groebner")

    def __init__(self, ring: Ring, generators: Iterable[MPoly] = ()):
        self.ring = ring
        kept: list[MPoly] = []
        for generator in generators:
            if generator.ring != ring:
                raise IdealError(f"Generator {generator} is not in ring {ring.names}")
            if generator and generator not in kept:
                kept.append(generator)
        self.generators = tuple(kept)
        self._groebner: dict[TermOrder, tuple[MPoly, ...]] = {}

    @classmethod
    def parse(cls, ring: Ring, text: str) -> "Ideal":
        return cls(ring, parse_polynomials(ring, text))

    @classmethod
    def unit(cls, ring: Ring) -> "Ideal":
        return cls(ring, [ring.one()])

    @classmethod
    def of_variables(cls, ring: Ring, names: Iterable[str]) -> "Ideal":
        return cls(ring, [ring.gen(name) for name in names])

    def __repr__(self) -> str:
        return f"Ideal({self.ring.names}, [{', '.join(map(str, self.generators))}])"

    def groebner(
        self, order: TermOrder = GREVLEX, caps: ResourceCaps = RESOURCE_CAPS
    ) -> tuple[MPoly, ...]:
        cached = self._groebner.get(order)
        if cached is not None:
            return cached
        basis = tuple(reduced_groebner_basis(self.generators, self.ring, order, caps))
        stored = self._groebner.setdefault(order, basis)
        if stored != basis:
            raise InvariantViolationError(
                f"Two Groebner computations under {order.describe()} disagree for {self!r}"
            )
        return stored

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(g.is_constant for g in self.generators) or self.groebner() == (
            self.ring.one(),
        )

    def normal_form(self, poly: MPoly, order: TermOrder = GREVLEX) -> MPoly:
        return reduce_modulo(poly, self.groebner(order), order)

    def contains(self, poly: MPoly) -> bool:
        return self.normal_form(poly).is_zero

    def contains_ideal(self, other: "Ideal") -> bool:
        self._check_ring(other)
        return all(self.contains(g) for g in other.generators)

    def equals(self, other: "Ideal") -> bool:
        return self.ring == other.ring and self.groebner() == other.groebner()

    def minimal_generators(self) -> tuple[MPoly, ...]:
        """Irredundant generating set: each generator lying in the ideal of the rest is dropped."""
        kept = list(self.generators)
        for generator in self.generators:
            rest = [g for g in kept if g is not generator]
            if rest and Ideal(self.ring, rest).contains(generator):
                kept = rest
        return tuple(kept)

    def _check_ring(self, other: "Ideal"):
        if self.ring != other.ring:
            raise IdealError(f"Ring mismatch: {self.ring.names} vs {other.ring.names}")

    def sum(self, other: "Ideal") -> "Ideal":
        self._check_ring(other)
        return Ideal(self.ring, self.generators + other.generators)

    def product(self, other: "Ideal") -> "Ideal":
        self._check_ring(other)
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def intersection(self, other: "Ideal") -> "Ideal":
        """Eliminates t from t*I + (1 - t)*J."""
        self._check_ring(other)
        if self.is_zero or other.is_zero:
            return Ideal(self.ring)
        t = self.ring.fresh_name("t")
        big = self.ring.extend([t])
        tt = big.gen(t)
        gens = [tt * f.embed(big) for f in self.generators]
        gens += [(1 - tt) * g.embed(big) for g in other.generators]
        return Ideal(big, gens).eliminate([t])

    def colon(self, poly: MPoly) -> "Ideal":
        if poly.is_zero:
            raise IdealError("Colon by the zero polynomial is the whole ring")
        if self.is_zero:
            return Ideal(self.ring)
        meet = self.intersection(Ideal(self.ring, [poly]))
        return Ideal(self.ring, [exact_quotient(g, poly) for g in meet.generators])

    def colon_ideal(self, other: "Ideal") -> "Ideal":
        self._check_ring(other)
        if other.is_zero:
            raise IdealError("Colon by the zero ideal is the whole ring")
        result: Ideal | None = None
        for g in other.generators:
            quotient = self.colon(g)
            result = quotient if result is None else result.intersection(quotient)
        return result

    def saturation(self, poly: MPoly) -> "Ideal":
        current: Ideal = self
        while True:
            following = current.colon(poly)
            if following.equals(current):
                return following
            current = following

    def eliminate(self, names: Sequence[str]) -> "Ideal":
        """Intersection with the subring free of `names`, as an ideal of that subring."""
        target = self.ring.without(names)
        if self.is_zero:
            return Ideal(target)
        basis = self.groebner(TermOrder.y_dominant(*names))
        return Ideal(target, [g.project(target) for g in basis if g.is_free_of(names)])

    def initial_ideal(self, order: TermOrder = GREVLEX) -> "Ideal":
        leading = [lead_term(g, order)[0] for g in self.groebner(order)]
        return Ideal(self.ring, [self.ring.monomial(m) for m in leading])

    def is_monomial(self) -> bool:
        return all(g.is_monomial for g in self.groebner())

    def dimension(self) -> int:
        """Krull dimension of R/I; -1 for the unit ideal."""
        if self.is_zero:
            return self.ring.nvars
        leading = [lead_term(g, GREVLEX)[0] for g in self.groebner()]
        return monomial_dimension(self.ring.nvars, leading)

    def codimension(self) -> int:
        dimension = self.dimension()
        if dimension < 0:
            return self.ring.nvars + 1
        return self.ring.nvars - dimension

    def is_free_of(self, names: Iterable[str]) -> bool:
        """True when some generating set avoids `names`."""
        names = list(names)
        return all(g.is_free_of(names) for g in self.groebner())

    def is_homogeneous(self, weights: Sequence[Sequence[int]] | None = None) -> bool:
        """Checks the generators against per-variable degree vectors (default: standard)."""
        if weights is None:
            weights = [(1,)] * self.ring.nvars
        for g in self.generators:
            degrees = {
                tuple(
                    sum(e * w[k] for e, w in zip(monomial, weights))
                    for k in range(len(weights[0]))
                )
                for monomial in g.terms
            }
            if len(degrees) > 1:
                return False
        return True

    def substitute(self, values: Mapping[str, MPoly | Coefficient], target: Ring) -> "Ideal":
        return Ideal(target, [g.substitute(values, target) for g in self.generators])

    def rename(self, mapping: Mapping[str, str], target: Ring) -> "Ideal":
        return Ideal(target, [g.rename(mapping, target) for g in self.generators])

    def embed(self, target: Ring) -> "Ideal":
        return Ideal(target, [g.embed(target) for g in self.generators])

    def project(self, target: Ring) -> "Ideal":
        return Ideal(target, [g.project(target) for g in self.generators])


def intersect_all(ring: Ring, ideals: Sequence[Ideal]) -> Ideal:
    if not ideals:
        return Ideal.unit(ring)
    result = ideals[0]
    for ideal in ideals[1:]:
        result = result.intersection(ideal)
    return result


COMBINE_KINDS = ("sum", "product", "intersection", "colon", "saturation", "elimination")


def ideal_combine(
    kind: str, first: Ideal, second: Ideal | None = None, names: Sequence[str] = ()
) -> Ideal:
    """
    sum/product/intersection/colon take two ideals; saturation takes an ideal
    and a principal second argument; elimination takes variable names.
    """
    if kind == "elimination":
        if not names:
            raise IdealError("Elimination needs at least one variable")
        return first.eliminate(names)
    if second is None:
        raise IdealError(f"{kind} needs a second ideal")
    if kind == "sum":
        return first.sum(second)
    if kind == "product":
        return first.product(second)
    if kind == "intersection":
        return first.intersection(second)
    if kind == "colon":
        return first.colon_ideal(second)
    if kind == "saturation":
        result = first
        for g in second.generators:
            result = result.saturation(g)
        return result
    raise IdealError(f"Unknown ideal operation {kind!r}; expected one of {COMBINE_KINDS}")


def reduced_groebner(
    ideal: Ideal, order: TermOrder = GREVLEX, caps: ResourceCaps = RESOURCE_CAPS
) -> tuple[MPoly, ...]:
    return ideal.groebner(order, caps)
