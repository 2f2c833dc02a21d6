from functools import lru_cache

import structlog
from pydantic import BaseModel
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from schubdeg.simplicial.complex import (
    Label,
    SimplicialComplex,
    face_key,
    faces_of_dimension,
    sorted_face,
)

logger = structlog.get_logger("schubdeg.simplicial.homology")


class HomologyReport(BaseModel):
    # betti[k + 1] is the reduced Betti number in degree k, k = -1..dim
    betti: list[int]
    euler_characteristic: int

    def in_degree(self, degree: int) -> int:
        index = degree + 1
        return self.betti[index] if 0 <= index < len(self.betti) else 0

    @property
    def is_acyclic(self) -> bool:
        return not any(self.betti)


class CMVerdict(BaseModel):
    is_cm: bool
    # face whose link fails; () stands for the link of the empty face
    witness: tuple[Label, ...] | None = None
    reason: str = ""


class UnionReport(BaseModel):
    hypotheses_hold: bool
    a_cm: bool
    b_cm: bool
    intersection_cm: bool
    union_cm: bool

    @property
    def consistent(self) -> bool:
        return not self.hypotheses_hold or self.union_cm


def _boundary_rank(complex_: SimplicialComplex, dimension: int) -> int:
    """Rank over Q of the boundary map from dimension-faces to (dimension-1)-faces."""
    targets = faces_of_dimension(complex_, dimension - 1)
    sources = faces_of_dimension(complex_, dimension)
    if not targets or not sources:
        return 0
    index = {face: row for row, face in enumerate(targets)}
    rows = [[QQ(0)] * len(sources) for _ in targets]
    for column, face in enumerate(sources):
        ordered = sorted_face(face)
        for position in range(len(ordered)):
            boundary = frozenset(ordered[:position] + ordered[position + 1 :])
            rows[index[boundary]][column] = QQ((-1) ** position)
    return DomainMatrix(rows, (len(targets), len(sources)), QQ).rank()


@lru_cache(maxsize=4096)
def rational_homology(complex_: SimplicialComplex) -> HomologyReport:
    if complex_.is_void:
        return HomologyReport(betti=[], euler_characteristic=0)
    top = complex_.dimension
    assert top is not None
    ranks = {k: _boundary_rank(complex_, k) for k in range(0, top + 1)}
    betti = []
    for k in range(-1, top + 1):
        chains = len(faces_of_dimension(complex_, k))
        betti.append(chains - ranks.get(k, 0) - ranks.get(k + 1, 0))
    euler = sum((-1) ** (index + 1) * value for index, value in enumerate(betti))
    return HomologyReport(betti=betti, euler_characteristic=euler)


def _link_is_cm(link: SimplicialComplex) -> bool:
    if link.is_void:
        return True
    top = link.dimension
    assert top is not None
    homology = rational_homology(link)
    return all(homology.in_degree(k) == 0 for k in range(-1, top))


@lru_cache(maxsize=4096)
def is_cm_reisner(complex_: SimplicialComplex) -> CMVerdict:
    """Reisner: pure, and every link has vanishing reduced homology below its dimension."""
    if complex_.is_void:
        return CMVerdict(is_cm=True, reason="void complex")
    if not complex_.is_pure:
        return CMVerdict(is_cm=False, witness=(), reason="complex is not pure")
    for face in sorted(complex_.all_faces(), key=face_key):
        if not _link_is_cm(complex_.link(face)):
            logger.debug(f"Link of {sorted_face(face)} has homology below its dimension")
            return CMVerdict(
                is_cm=False,
                witness=sorted_face(face),
                reason="link has nonvanishing reduced homology below its dimension",
            )
    return CMVerdict(is_cm=True)


def cm_union_check(first: SimplicialComplex, second: SimplicialComplex) -> UnionReport:
    """
    Gluing two CM complexes of dimension d along a CM complex of dimension d - 1
    gives a CM complex (the Mayer-Vietoris argument on local cohomology).
    """
    intersection = first.intersection(second)
    union = first.union(second)
    a_cm = is_cm_reisner(first).is_cm
    b_cm = is_cm_reisner(second).is_cm
    intersection_cm = is_cm_reisner(intersection).is_cm
    dimension = first.dimension
    shapes_ok = (
        first.is_pure
        and second.is_pure
        and intersection.is_pure
        and dimension is not None
        and second.dimension == dimension
        and intersection.dimension == dimension - 1
    )
    return UnionReport(
        hypotheses_hold=shapes_ok and a_cm and b_cm and intersection_cm,
        a_cm=a_cm,
        b_cm=b_cm,
        intersection_cm=intersection_cm,
        union_cm=is_cm_reisner(union).is_cm,
    )
