from typing import Sequence

import structlog
from pydantic import BaseModel

from schubdeg.simplicial.complex import (
    Face,
    Label,
    SimplicialComplex,
    face_key,
    maximal_faces,
    sorted_face,
)

logger = structlog.get_logger("schubdeg.simplicial.shelling")


class ShellingVerdict(BaseModel):
    shellable: bool
    order: list[tuple[Label, ...]] | None = None
    # first facet (in the attempted order) that breaks the condition, if any
    witness: tuple[Label, ...] | None = None
    reason: str = ""


def _attaches_properly(facet: Face, placed: Sequence[Face]) -> bool:
    """facet meets the union of `placed` in a pure subcomplex of codimension one in facet."""
    if not placed:
        return True
    intersections = maximal_faces(facet & other for other in placed)
    return all(len(face) == len(facet) - 1 for face in intersections)


def check_shelling(
    complex_: SimplicialComplex, order: Sequence[Sequence[Label]]
) -> ShellingVerdict:
    ordered = [frozenset(facet) for facet in order]
    if sorted(ordered, key=face_key) != sorted(complex_.facets, key=face_key):
        return ShellingVerdict(
            shellable=False, reason="order is not a permutation of the facets"
        )
    if not complex_.is_pure:
        return ShellingVerdict(shellable=False, witness=(), reason="complex is not pure")
    for index, facet in enumerate(ordered):
        if not _attaches_properly(facet, ordered[:index]):
            return ShellingVerdict(
                shellable=False,
                witness=sorted_face(facet),
                reason=f"facet {index + 1} meets its predecessors in the wrong dimension",
            )
    return ShellingVerdict(shellable=True, order=[sorted_face(facet) for facet in ordered])


def _overlap(facet: Face, placed: Sequence[Face]) -> int:
    """Number of ridges facet shares with the placed facets."""
    return sum(1 for other in placed if len(facet & other) == len(facet) - 1)


def find_shelling(complex_: SimplicialComplex) -> ShellingVerdict:
    """
    Backtracking search. Candidates are tried by descending ridge overlap with
    the shelled part; whether a facet can be appended depends only on the set
    already placed, so failed sets are remembered.
    """
    if complex_.is_void:
        return ShellingVerdict(shellable=True, order=[])
    if not complex_.is_pure:
        return ShellingVerdict(shellable=False, witness=(), reason="complex is not pure")

    facets = list(complex_.facets)
    failed: set[frozenset[Face]] = set()

    def extend(placed: list[Face], remaining: list[Face]) -> list[Face] | None:
        if not remaining:
            return placed
        key = frozenset(placed)
        if key in failed:
            return None
        candidates = [facet for facet in remaining if _attaches_properly(facet, placed)]
        candidates.sort(key=lambda facet: (-_overlap(facet, placed), face_key(facet)))
        for facet in candidates:
            rest = [other for other in remaining if other != facet]
            result = extend(placed + [facet], rest)
            if result is not None:
                return result
        failed.add(key)
        return None

    for first in facets:
        result = extend([first], [facet for facet in facets if facet != first])
        if result is not None:
            return ShellingVerdict(shellable=True, order=[sorted_face(f) for f in result])
    logger.debug(f"No shelling among {len(facets)} facets")
    return ShellingVerdict(
        shellable=False, reason="no facet order satisfies the codimension-one condition"
    )


def shelling(
    complex_: SimplicialComplex, order: Sequence[Sequence[Label]] | None = None
) -> ShellingVerdict:
    """Find mode when `order` is None, check mode otherwise."""
    if order is None:
        return find_shelling(complex_)
    return check_shelling(complex_, order)
