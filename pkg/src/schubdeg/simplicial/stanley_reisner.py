import re
from typing import Mapping, Sequence

import structlog

from schubdeg.polyalg.ideal import Ideal
from schubdeg.polyalg.monomial import MonomialIdealError, minimal_transversals, support
from schubdeg.polyalg.ring import Ring
from schubdeg.simplicial.complex import (
    Face,
    Label,
    SimplicialComplex,
    SimplicialComplexError,
    face_key,
)

logger = structlog.get_logger("schubdeg.simplicial.stanley_reisner")

INDEXED_NAME = re.compile(r"^x(\d+)$")


def default_variable_names(vertices: Sequence[Label]) -> dict[Label, str]:
    names = {label: f"x{label}" for label in vertices}
    if len(set(names.values())) != len(names):
        raise SimplicialComplexError(
            f"Labels {list(vertices)} collide once prefixed with x; pass explicit names"
        )
    return names


def minimal_nonfaces(complex_: SimplicialComplex) -> list[Face]:
    faces = set(complex_.all_faces())
    found = set()
    if not faces:
        return [frozenset()]
    for face in faces:
        for vertex in complex_.vertices:
            if vertex in face:
                continue
            candidate = face | {vertex}
            if candidate in faces:
                continue
            if all(candidate - {u} in faces for u in candidate):
                found.add(candidate)
    return sorted(found, key=face_key)


def sr_ideal(
    complex_: SimplicialComplex, names: Mapping[Label, str] | None = None
) -> Ideal:
    """Stanley–Reisner ideal, generated by the squarefree monomials of minimal non-faces."""
    names = dict(names) if names is not None else default_variable_names(complex_.vertices)
    missing = [label for label in complex_.vertices if label not in names]
    if missing:
        raise SimplicialComplexError(f"No variable name for vertices {missing}")
    ring = Ring(names=tuple(names[label] for label in complex_.vertices))
    generators = []
    for nonface in minimal_nonfaces(complex_):
        monomial = ring.one()
        for label in nonface:
            monomial = monomial * ring.gen(names[label])
        generators.append(monomial)
    logger.debug(f"Stanley–Reisner ideal with {len(generators)} generators")
    return Ideal(ring, generators)


def default_labels(ring: Ring) -> list[Label]:
    matches = [INDEXED_NAME.match(name) for name in ring.names]
    if all(matches):
        return [int(match.group(1)) for match in matches]
    return list(ring.names)


def complex_of_monomial_ideal(
    ideal: Ideal, labels: Sequence[Label] | None = None
) -> SimplicialComplex:
    """
    Complex whose facets are complements of the minimal primes of a squarefree
    monomial ideal. Variables named x<k> become vertex k unless labels are given.
    """
    labels = list(labels) if labels is not None else default_labels(ideal.ring)
    if len(labels) != ideal.ring.nvars:
        raise SimplicialComplexError(f"{len(labels)} labels for {ideal.ring.nvars} variables")
    basis = ideal.groebner()
    edges = []
    for g in basis:
        if not g.is_monomial:
            raise MonomialIdealError(f"{g} is not a monomial")
        monomial = next(iter(g.terms))
        if any(e > 1 for e in monomial):
            raise MonomialIdealError(f"{g} is not squarefree")
        edges.append(support(monomial))
    transversals = minimal_transversals(edges)
    if not transversals:
        return SimplicialComplex.void(labels)
    vertex_indices = frozenset(range(len(labels)))
    facets = [[labels[i] for i in vertex_indices - t] for t in transversals]
    return SimplicialComplex.from_facets(facets, vertices=labels)
