"""
Restrictions ξ^w(v) of equivariant Schubert classes to the fixed point v, in
cohomology (polynomials in a1..ar) and in K-theory (KElem), each computed by a
sum over reduced subwords and by the degeneration recursion along a reduced
word for v.
"""

from functools import lru_cache
from itertools import combinations
from typing import Sequence

import structlog

from schubdeg.bruhat.order import bruhat_leq
from schubdeg.polyalg.kclass import KElem
from schubdeg.polyalg.ring import MPoly, linear_form, root_ring
from schubdeg.roots.weyl import WeylElement, canonical_reduced_word, word_eval
from schubdeg.subword.complex import (
    SubwordComplex,
    SubwordError,
    billey_roots,
    facet_complements,
    interior_faces,
    subword_complex,
)

logger = structlog.get_logger("schubdeg.subword.restriction")

HPoly = MPoly


def _check_pair(w: WeylElement, v: WeylElement) -> None:
    if w.root_system.cartan != v.root_system.cartan:
        raise SubwordError(
            f"w in {w.root_system.display_name} and v in {v.root_system.display_name} differ"
        )


def billey_restriction(word: Sequence[int], w: WeylElement) -> HPoly:
    """Σ over position sets J spelling a reduced word for w of Π_{j∈J} β_j."""
    root_system = w.root_system
    evaluation = word_eval(root_system, word)
    if not evaluation.is_reduced:
        raise SubwordError(f"{tuple(word)} is not a reduced word")
    ring = root_ring(root_system.rank)
    betas = [linear_form(ring, beta) for beta in billey_roots(root_system, word)]
    total = ring.zero()
    for positions in combinations(range(len(word)), w.length):
        if word_eval(root_system, [word[p] for p in positions]).element != w:
            continue
        term = ring.one()
        for p in positions:
            term = term * betas[p]
        total = total + term
    return total


def weighted_facet_sum(complex_: SubwordComplex) -> HPoly:
    """Σ over facets F of Π_{j∉F} β_j, vertex j weighted by β_j."""
    root_system = complex_.w.root_system
    ring = root_ring(root_system.rank)
    betas = [linear_form(ring, beta) for beta in billey_roots(root_system, complex_.q)]
    total = ring.zero()
    for complement in facet_complements(complex_):
        term = ring.one()
        for position in complement:
            term = term * betas[position - 1]
        total = total + term
    return total


def _recursion_letter(v: WeylElement) -> tuple[int, WeylElement, tuple[int, ...]]:
    """Last letter k of the canonical word of v, v r_k, and -v·α_k (a positive root)."""
    k = canonical_reduced_word(v)[-1]
    image = v.act(v.root_system.simple_root(k))
    return k, v.times_simple(k), tuple(-c for c in image)


@lru_cache(maxsize=None)
def _restriction(w: WeylElement, v: WeylElement) -> HPoly:
    ring = root_ring(w.rank)
    if v.is_identity:
        return ring.one() if w.is_identity else ring.zero()
    if not bruhat_leq(w, v):
        return ring.zero()
    k, vr, rho = _recursion_letter(v)
    if not w.has_right_descent(k):
        return _restriction(w, vr)
    wr = w.times_simple(k)
    lower = linear_form(ring, rho) * _restriction(wr, vr)
    if not bruhat_leq(w, vr):
        return lower
    return lower + _restriction(w, vr)


def restriction_recursive(w: WeylElement, v: WeylElement) -> HPoly:
    """
    Recursion along the last letter α of the canonical word of v, ρ = -v·α:
    ξ^w(v) = ξ^w(v r) when w r > w; ρ ξ^{wr}(v r) when w r < w and w ≰ v r;
    otherwise ρ ξ^{wr}(v r) + ξ^w(v r).
    """
    _check_pair(w, v)
    return _restriction(w, v)


@lru_cache(maxsize=None)
def _ktheory(w: WeylElement, v: WeylElement) -> KElem:
    rank = w.rank
    if v.is_identity:
        return KElem.one(rank) if w.is_identity else KElem.zero(rank)
    if not bruhat_leq(w, v):
        return KElem.zero(rank)
    k, vr, rho = _recursion_letter(v)
    if not w.has_right_descent(k):
        return _ktheory(w, vr)
    wr = w.times_simple(k)
    hyperplane = KElem.one_minus_exp(tuple(-c for c in rho))
    lower = hyperplane * _ktheory(wr, vr)
    if not bruhat_leq(w, vr):
        return lower
    upper = _ktheory(w, vr)
    # inclusion-exclusion over the two components glued along their intersection
    return lower + upper - hyperplane * upper


def ktheory_restriction_recursive(w: WeylElement, v: WeylElement) -> KElem:
    """Same recursion in K-theory with hyperplane class 1 - e^{v·α}."""
    _check_pair(w, v)
    return _ktheory(w, v)


def ktheory_restriction_direct(word: Sequence[int], w: WeylElement) -> KElem:
    """
    Alternating sum over the interior faces F of Δ(Q, w) of Π_{j∉F} (1 - e^{-β_j}),
    signed by (-1)^(dim Δ - dim F).
    """
    root_system = w.root_system
    if not word_eval(root_system, word).is_reduced:
        raise SubwordError(f"{tuple(word)} is not a reduced word")
    hyperplanes = [
        KElem.one_minus_exp(tuple(-c for c in beta)) for beta in billey_roots(root_system, word)
    ]
    top = len(word) - w.length
    total = KElem.zero(w.rank)
    for face in interior_faces(subword_complex(word, w)):
        term = KElem.one(w.rank)
        for position in range(1, len(word) + 1):
            if position not in face:
                term = term * hyperplanes[position - 1]
        total = total + term * (-1) ** (top - len(face))
    return total


def exponential_truncation(k: KElem, degree: int) -> HPoly:
    """Degree-`degree` part of k under e^λ ↦ Σ λ^m/m!."""
    return k.exponential_truncation(degree).homogeneous_part(degree)


def lowest_degree_part(k: KElem, max_degree: int) -> HPoly | None:
    found = k.lowest_degree_part(max_degree)
    return None if found is None else found[1]


def restriction_table(v: WeylElement, lower: Sequence[WeylElement]) -> dict[WeylElement, HPoly]:
    return {w: restriction_recursive(w, v) for w in lower}


def is_positive(poly: HPoly) -> bool:
    """Every coefficient a nonnegative integer."""
    return all(c >= 0 and c.denominator == 1 for c in poly.terms.values())
