from functools import lru_cache
from typing import Optional

import structlog
from pydantic import BaseModel

from schubdeg.simplicial.complex import Label, SimplicialComplex, label_key

logger = structlog.get_logger("schubdeg.simplicial.decomposition")


class DecompositionTree(BaseModel):
    facets: list[tuple[Label, ...]]
    shedding_vertex: Optional[Label] = None
    link: Optional["DecompositionTree"] = None
    deletion: Optional["DecompositionTree"] = None


class VDVerdict(BaseModel):
    decomposable: bool
    tree: DecompositionTree | None = None


def _is_shedding(complex_: SimplicialComplex, vertex: Label) -> bool:
    deletion = complex_.deletion(vertex)
    return deletion.is_pure and deletion.dimension == complex_.dimension


@lru_cache(maxsize=8192)
def _decompose(complex_: SimplicialComplex) -> DecompositionTree | None:
    if len(complex_.facets) <= 1:
        return DecompositionTree(facets=complex_.sorted_facets())
    if not complex_.is_pure:
        return None
    used = sorted(set().union(*complex_.facets), key=label_key)
    for vertex in used:
        if not _is_shedding(complex_, vertex):
            continue
        link_tree = _decompose(complex_.link({vertex}))
        if link_tree is None:
            continue
        deletion_tree = _decompose(complex_.deletion(vertex))
        if deletion_tree is None:
            continue
        return DecompositionTree(
            facets=complex_.sorted_facets(),
            shedding_vertex=vertex,
            link=link_tree,
            deletion=deletion_tree,
        )
    return None


def is_vertex_decomposable(complex_: SimplicialComplex) -> VDVerdict:
    """
    A simplex (or the void complex) is vertex decomposable; otherwise the
    complex must be pure with a vertex whose deletion keeps the dimension and
    stays pure, and whose link and deletion are both vertex decomposable.
    """
    tree = _decompose(complex_)
    return VDVerdict(decomposable=tree is not None, tree=tree)
