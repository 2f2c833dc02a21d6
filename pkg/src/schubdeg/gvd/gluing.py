from pydantic import BaseModel, ConfigDict, field_serializer

from schubdeg.polyalg.ideal import Ideal


class GluingVerdict(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    holds: bool
    intersection: Ideal
    overlap: Ideal

    @field_serializer("intersection", "overlap")
    def serialize_ideal(self, ideal: Ideal) -> list[str]:
        return [str(g) for g in ideal.groebner()]


def gluing_check(first: Ideal, second: Ideal, union: Ideal) -> GluingVerdict:
    """
    The scheme of `union` is glued from the two pieces when its ideal is their
    intersection; the overlap is cut out by the sum.
    """
    intersection = first.intersection(second)
    return GluingVerdict(
        holds=union.equals(intersection),
        intersection=intersection,
        overlap=first.sum(second),
    )
