from itertools import combinations
from typing import Sequence

import structlog
from pydantic import BaseModel, ConfigDict, Field, computed_field

from schubdeg.bruhat.words import demazure_product
from schubdeg.roots.root_system import Root, RootSystem
from schubdeg.roots.weyl import WeylElement, Word, word_eval
from schubdeg.simplicial.complex import Face, SimplicialComplex, sorted_face
from schubdeg.simplicial.decomposition import is_vertex_decomposable
from schubdeg.simplicial.homology import HomologyReport, is_cm_reisner, rational_homology
from schubdeg.simplicial.shelling import find_shelling

logger = structlog.get_logger("schubdeg.subword.complex")


class SubwordError(Exception):
    pass


class SubwordComplex(BaseModel):
    """Δ(Q, w) on the positions 1..|Q|: facets are complements of reduced subwords for w."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True, populate_by_name=True)

    q: Word = Field(serialization_alias="Q")
    w: WeylElement = Field(exclude=True)
    complex: SimplicialComplex

    @computed_field  # type: ignore[misc]
    @property
    def is_void(self) -> bool:
        return self.complex.is_void

    @computed_field  # type: ignore[misc]
    @property
    def demazure(self) -> tuple[int, ...]:
        return demazure_product(self.w.root_system, self.q).reduced_word

    @property
    def is_sphere(self) -> bool:
        """Δ(Q, w) is a sphere exactly when the Demazure product of Q is w."""
        return demazure_product(self.w.root_system, self.q) == self.w


def _check_word(rank: int, word: Sequence[int]) -> Word:
    for position, letter in enumerate(word, start=1):
        if not 1 <= letter <= rank:
            raise SubwordError(f"Letter {letter} at position {position} is outside 1..{rank}")
    return Word(tuple(word))


def reduced_subword_positions(word: Sequence[int], w: WeylElement) -> list[tuple[int, ...]]:
    """1-based position sets whose subword is a reduced word for w."""
    size = w.length
    found = []
    for positions in combinations(range(1, len(word) + 1), size):
        evaluation = word_eval(w.root_system, [word[p - 1] for p in positions])
        if evaluation.element == w:
            found.append(positions)
    return found


def subword_complex(word: Sequence[int], w: WeylElement) -> SubwordComplex:
    q = _check_word(w.rank, word)
    vertices = tuple(range(1, len(q) + 1))
    facets = [
        frozenset(vertices) - frozenset(positions)
        for positions in reduced_subword_positions(q, w)
    ]
    if facets:
        complex_ = SimplicialComplex.from_facets(facets, vertices)
    else:
        logger.info(f"No reduced subword for {w.reduced_word} in {q}: void complex")
        complex_ = SimplicialComplex.void(vertices)
    return SubwordComplex(q=q, w=w, complex=complex_)


def billey_roots(root_system: RootSystem, word: Sequence[int]) -> list[Root]:
    """β_j = s_{q1}...s_{q(j-1)}(α_{qj})."""
    q = _check_word(root_system.rank, word)
    prefix = WeylElement.identity(root_system)
    roots = []
    for letter in q:
        roots.append(prefix.act(root_system.simple_root(letter)))
        prefix = prefix.times_simple(letter)
    return roots


def interior_faces(complex_: SubwordComplex) -> list[tuple[int, ...]]:
    """Faces whose complement has Demazure product w."""
    q = complex_.q
    everything = frozenset(range(1, len(q) + 1))
    interior = []
    for face in complex_.complex.all_faces():
        complement = sorted(everything - face)
        if demazure_product(complex_.w.root_system, [q[p - 1] for p in complement]) == complex_.w:
            interior.append(sorted_face(face))
    return sorted(interior, key=lambda f: (len(f), f))


class SubwordTopology(BaseModel):
    model_config = ConfigDict(frozen=True)

    is_void: bool
    is_sphere: bool
    is_pure: bool
    vertex_decomposable: bool
    shellable: bool
    cohen_macaulay: bool
    homology: HomologyReport | None
    homology_as_expected: bool

    @computed_field  # type: ignore[misc]
    @property
    def all_hold(self) -> bool:
        return (
            self.is_pure
            and self.vertex_decomposable
            and self.shellable
            and self.cohen_macaulay
            and self.homology_as_expected
        )


def _expected_homology(complex_: SubwordComplex, report: HomologyReport) -> bool:
    if not complex_.is_sphere:
        return report.is_acyclic
    top = complex_.complex.dimension
    return all(
        b == (1 if degree == top else 0)
        for degree, b in enumerate(report.betti, start=-1)
    )


def subword_topology(complex_: SubwordComplex) -> SubwordTopology:
    """
    Purity, vertex decomposability, shellability, Reisner CM-ness and rational
    homology: a ball (acyclic) unless the Demazure product of Q is w, in which
    case a sphere of the facet dimension.
    """
    simplicial = complex_.complex
    if simplicial.is_void:
        return SubwordTopology(
            is_void=True,
            is_sphere=False,
            is_pure=True,
            vertex_decomposable=True,
            shellable=True,
            cohen_macaulay=True,
            homology=None,
            homology_as_expected=True,
        )
    report = rational_homology(simplicial)
    return SubwordTopology(
        is_void=False,
        is_sphere=complex_.is_sphere,
        is_pure=simplicial.is_pure,
        vertex_decomposable=is_vertex_decomposable(simplicial).decomposable,
        shellable=find_shelling(simplicial).shellable,
        cohen_macaulay=is_cm_reisner(simplicial).is_cm,
        homology=report,
        homology_as_expected=_expected_homology(complex_, report),
    )


def facet_complements(complex_: SubwordComplex) -> list[Face]:
    everything = frozenset(range(1, len(complex_.q) + 1))
    return [everything - facet for facet in complex_.complex.facets]
