"""
Geometric vertex decomposition of an affine ideal along one variable y: the
limit ideal I' of initial y-forms, its pieces C and P, and the one-parameter
family realizing the degeneration.
"""

from fractions import Fraction

import structlog
from pydantic import BaseModel, ConfigDict, Field, computed_field, field_serializer

from schubdeg.polyalg.ideal import Ideal, InvariantViolationError
from schubdeg.polyalg.orders import TermOrder
from schubdeg.polyalg.ring import MPoly

logger = structlog.get_logger("schubdeg.gvd.split")


class GVDError(Exception):
    pass


def _serialize_ideal(ideal: Ideal) -> list[str]:
    return [str(g) for g in ideal.groebner()]


def initial_y_form(poly: MPoly, y: str) -> MPoly:
    return poly.y_degree_part([y], poly.degree_in(y))


def initial_y_ideal(ideal: Ideal, y: str) -> Ideal:
    """Ideal of the initial y-forms of the reduced basis under the y-dominant order."""
    ideal.ring.index(y)
    basis = ideal.groebner(TermOrder.y_dominant(y))
    return Ideal(ideal.ring, [initial_y_form(g, y) for g in basis])


class GVDReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    y: str
    i_prime: Ideal = Field(serialization_alias="I_prime")
    c: Ideal = Field(serialization_alias="C")
    p: Ideal = Field(serialization_alias="P")
    decomposition_holds: bool
    containment_holds: bool
    lambda_empty: bool
    set_level: str = "not checked"
    notes: list[str] = []

    @field_serializer("i_prime", "c", "p")
    def serialize_ideal(self, ideal: Ideal) -> list[str]:
        return _serialize_ideal(ideal)

    @computed_field  # type: ignore[misc]
    @property
    def c_ring(self) -> list[str]:
        return list(self.c.ring.names)


def gvd_split(ideal: Ideal, y: str) -> GVDReport:
    """
    I' from initial y-forms, C = (I' : y^∞) ∩ k[x] and P = I' + <y>. The
    decomposition holds when I' equals C·k[x,y] ∩ P.
    """
    ring = ideal.ring
    y_var = ring.gen(y)
    i_prime = initial_y_ideal(ideal, y)
    c_ideal = i_prime.saturation(y_var).eliminate([y])
    p_ideal = i_prime.sum(Ideal(ring, [y_var]))
    meet = c_ideal.embed(ring).intersection(p_ideal)
    containment = meet.contains_ideal(i_prime)
    if not containment:
        raise InvariantViolationError(
            f"I' is not contained in C ∩ P for {ideal!r} along {y}"
        )
    decomposition = i_prime.equals(meet)
    notes = []
    lambda_empty = c_ideal.is_unit()
    if lambda_empty:
        notes.append("C is the unit ideal: the fiber at infinity is empty")
    if not decomposition:
        notes.append("I' is strictly smaller than C ∩ P: the limit is not reduced as glued")
    logger.info(f"GVD split along {y}: decomposition_holds={decomposition}")
    return GVDReport(
        y=y,
        i_prime=i_prime,
        c=c_ideal,
        p=p_ideal,
        decomposition_holds=decomposition,
        containment_holds=containment,
        lambda_empty=lambda_empty,
        notes=notes,
    )


def family_ideal(ideal: Ideal, y: str, z: str = "z") -> Ideal:
    """
    Homogenize each reduced basis element Σ y^e c_e of y-degree d to
    Σ z^{d-e} y^e c_e and saturate by z; lives in the ring extended by z.
    """
    ring = ideal.ring
    if z in ring.names:
        raise GVDError(f"Family parameter {z!r} already names a variable")
    y_index = ring.index(y)
    big = ring.extend([z])
    z_var = big.gen(z)
    homogenized = []
    for g in ideal.groebner(TermOrder.y_dominant(y)):
        d = g.degree_in(y)
        lifted = big.zero()
        for monomial, coefficient in g.terms.items():
            lifted = lifted + big.monomial(monomial + (d - monomial[y_index],), coefficient)
        homogenized.append(lifted)
    return Ideal(big, homogenized).saturation(z_var)


def family_fiber(family: Ideal, z: str, value: Fraction | int) -> Ideal:
    target = family.ring.without([z])
    return family.substitute({z: value}, target)
