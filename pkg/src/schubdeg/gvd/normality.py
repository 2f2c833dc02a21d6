from enum import Enum

import structlog
from pydantic import BaseModel, ConfigDict

from schubdeg.config import RESOURCE_CAPS, ResourceCaps
from schubdeg.polyalg.ideal import Ideal
from schubdeg.polyalg.jacobian import jacobian_singular_ideal

logger = structlog.get_logger("schubdeg.gvd.normality")


class NormalityVerdict(str, Enum):
    NORMAL = "normal"
    NOT_NORMAL = "not normal"
    R1_ONLY = "R1 only"


class NormalityReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    codimension: int
    complete_intersection: bool
    singular_ideal: list[str]
    singular_locus_empty: bool
    # codimension of the singular locus inside the variety
    singular_locus_codimension: int | None
    r1: bool
    verdict: NormalityVerdict
    singular_ideal_y_free: bool | None = None


def normality_probe(
    ideal: Ideal,
    y: str | None = None,
    complete_intersection: bool | None = None,
    caps: ResourceCaps = RESOURCE_CAPS,
) -> NormalityReport:
    """
    Serre's criterion with S2 supplied by the complete-intersection property:
    normal when additionally the singular locus has codimension at least 2.
    Without a complete intersection only R1 is reported. Unless asserted, the complete
    intersection property is read off an irredundant generating set or the reduced basis
    having exactly codim elements.
    """
    codim = ideal.codimension()
    if complete_intersection is None:
        smallest = min(len(ideal.minimal_generators()), len(ideal.groebner()))
        complete_intersection = smallest == codim
    singular = jacobian_singular_ideal(ideal, codim, caps)
    empty = singular.is_unit()
    if empty:
        relative = None
        r1 = True
    else:
        relative = ideal.dimension() - singular.dimension()
        r1 = relative >= 2
    if not complete_intersection:
        verdict = NormalityVerdict.R1_ONLY
    else:
        verdict = NormalityVerdict.NORMAL if r1 else NormalityVerdict.NOT_NORMAL
    y_free = singular.is_free_of([y]) if y is not None else None
    logger.info(f"Normality check: codim {codim}, singular locus codim {relative}, {verdict.value}")
    return NormalityReport(
        codimension=codim,
        complete_intersection=complete_intersection,
        singular_ideal=[str(g) for g in singular.groebner()],
        singular_locus_empty=empty,
        singular_locus_codimension=relative,
        r1=r1,
        verdict=verdict,
        singular_ideal_y_free=y_free,
    )
