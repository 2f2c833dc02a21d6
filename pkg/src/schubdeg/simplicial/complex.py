import json
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import structlog
from pydantic import BaseModel, ConfigDict, model_validator

from schubdeg.config import RESOURCE_CAPS

logger = structlog.get_logger("schubdeg.simplicial.complex")

Label = int | str
Face = frozenset[Label]


class SimplicialComplexError(Exception):
    pass


def label_key(label: Label) -> tuple[int, int, str]:
    # integers first, in numeric order, then strings
    if isinstance(label, int):
        return 0, label, ""
    return 1, 0, label


def sorted_face(face: Iterable[Label]) -> tuple[Label, ...]:
    return tuple(sorted(face, key=label_key))


def face_key(face: Iterable[Label]) -> tuple[int, list[tuple[int, int, str]]]:
    ordered = sorted_face(face)
    return len(ordered), [label_key(label) for label in ordered]


def maximal_faces(faces: Iterable[Iterable[Label]]) -> tuple[Face, ...]:
    """Antichain of the inclusion-maximal sets, in canonical order."""
    unique = {frozenset(face) for face in faces}
    maximal = [face for face in unique if not any(face < other for other in unique)]
    return tuple(sorted(maximal, key=face_key))


class SimplicialComplex(BaseModel):
    """
    Facets are an antichain; every subset of a facet is a face. No facets at
    all is the void complex, a single empty facet is the complex {emptyset}.
    """

    model_config = ConfigDict(frozen=True)

    vertices: tuple[Label, ...]
    facets: tuple[Face, ...]

    @model_validator(mode="after")
    def facets_form_antichain(self) -> "SimplicialComplex":
        vertex_set = set(self.vertices)
        if len(vertex_set) != len(self.vertices):
            raise ValueError("Vertex labels must be distinct")
        for facet in self.facets:
            if not facet <= vertex_set:
                raise ValueError(f"Facet {sorted_face(facet)} uses labels outside the vertex set")
        for first, second in combinations(self.facets, 2):
            if first <= second or second <= first:
                raise ValueError(
                    f"Facets {sorted_face(first)} and {sorted_face(second)} are nested"
                )
        return self

    @classmethod
    def from_facets(
        cls, facets: Iterable[Iterable[Label]], vertices: Sequence[Label] | None = None
    ) -> "SimplicialComplex":
        facet_sets = maximal_faces(facets)
        if vertices is None:
            vertices = sorted_face(set().union(*facet_sets)) if facet_sets else ()
        if len(vertices) > RESOURCE_CAPS.max_complex_vertices:
            raise SimplicialComplexError(
                f"Complex has {len(vertices)} vertices, above the cap of "
                f"{RESOURCE_CAPS.max_complex_vertices}"
            )
        return cls(vertices=tuple(vertices), facets=facet_sets)

    @classmethod
    def void(cls, vertices: Sequence[Label] = ()) -> "SimplicialComplex":
        return cls(vertices=tuple(vertices), facets=())

    @classmethod
    def simplex(cls, vertices: Sequence[Label]) -> "SimplicialComplex":
        return cls(vertices=tuple(vertices), facets=(frozenset(vertices),))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dimension(self) -> int | None:
        """None for the void complex, -1 for {emptyset}."""
        if self.is_void:
            return None
        return max(len(facet) for facet in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(facet) for facet in self.facets}) <= 1

    @property
    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    def contains(self, face: Iterable[Label]) -> bool:
        face = frozenset(face)
        return any(face <= facet for facet in self.facets)

    def faces(self, dimension: int) -> list[Face]:
        return list(faces_of_dimension(self, dimension))

    def all_faces(self) -> list[Face]:
        if self.is_void:
            return []
        top = self.dimension or 0
        result: list[Face] = []
        for dimension in range(-1, top + 1):
            result.extend(faces_of_dimension(self, dimension))
        return result

    def f_vector(self) -> list[int]:
        """(f_{-1}, f_0, ..., f_dim)."""
        if self.is_void:
            return []
        return [len(faces_of_dimension(self, k)) for k in range(-1, (self.dimension or 0) + 1)]

    def reduced_euler_characteristic(self) -> int:
        return sum((-1) ** (k + 1) * count for k, count in enumerate(self.f_vector()))

    def link(self, face: Iterable[Label]) -> "SimplicialComplex":
        face = frozenset(face)
        return SimplicialComplex.from_facets(
            facet - face for facet in self.facets if face <= facet
        )

    def deletion(self, vertex: Label) -> "SimplicialComplex":
        return SimplicialComplex.from_facets(facet - {vertex} for facet in self.facets)

    def intersection(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex.from_facets(
            first & second for first in self.facets for second in other.facets
        )

    def union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        vertices = sorted_face(set(self.vertices) | set(other.vertices))
        return SimplicialComplex.from_facets(self.facets + other.facets, vertices)

    def sorted_facets(self) -> list[tuple[Label, ...]]:
        return [sorted_face(facet) for facet in self.facets]


@lru_cache(maxsize=4096)
def faces_of_dimension(complex_: SimplicialComplex, dimension: int) -> tuple[Face, ...]:
    size = dimension + 1
    if complex_.is_void or size < 0:
        return ()
    found: set[Face] = set()
    for facet in complex_.facets:
        if len(facet) >= size:
            found.update(frozenset(face) for face in combinations(sorted_face(facet), size))
    return tuple(sorted(found, key=face_key))


def _parse_label(text: str) -> Label:
    return int(text) if text.isdigit() else text


def parse_complex_text(text: str) -> SimplicialComplex:
    """One facet per line, comma-separated labels, `{}` for the empty facet."""
    facets: list[frozenset[Label]] = []
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        if line == "{}":
            facets.append(frozenset())
            continue
        labels = [item.strip() for item in line.split(",")]
        if any(not label for label in labels):
            raise SimplicialComplexError(f"Line {line_number}: empty vertex label in {line!r}")
        facets.append(frozenset(_parse_label(label) for label in labels))
    return SimplicialComplex.from_facets(facets)


def format_complex_text(complex_: SimplicialComplex) -> str:
    lines = []
    for facet in complex_.sorted_facets():
        lines.append(",".join(str(label) for label in facet) if facet else "{}")
    return "\n".join(lines) + ("\n" if lines else "")


def complex_to_payload(complex_: SimplicialComplex) -> dict:
    return {
        "vertices": list(complex_.vertices),
        "facets": [list(facet) for facet in complex_.sorted_facets()],
    }


def parse_complex_json(text: str) -> SimplicialComplex:
    try:
        payload = json.loads(text)
        return SimplicialComplex.from_facets(payload["facets"], payload.get("vertices"))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise SimplicialComplexError(f"Malformed complex JSON: {e}")


def parse_complex(text: str) -> SimplicialComplex:
    stripped = text.strip()
    if stripped.startswith("{") and not stripped.startswith("{}"):
        return parse_complex_json(text)
    return parse_complex_text(text)
