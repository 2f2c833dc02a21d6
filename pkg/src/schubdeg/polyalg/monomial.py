from typing import Iterable, Sequence

from schubdeg.polyalg.ring import Monomial, MPoly, Ring


class MonomialIdealError(Exception):
    pass


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(monomials: Iterable[Monomial]) -> list[Monomial]:
    """Minimal generators of the monomial ideal spanned by `monomials`."""
    kept: list[Monomial] = []
    for m in sorted(set(monomials), key=lambda m: (sum(m), m)):
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return kept


def support(monomial: Monomial) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(monomial) if e)


def minimal_sets(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    kept: list[frozenset[int]] = []
    for s in sorted(set(sets), key=lambda s: (len(s), sorted(s))):
        if not any(k <= s for k in kept):
            kept.append(s)
    return kept


def minimal_transversals(edges: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    """
    Minimal vertex sets meeting every edge, by Berge's incremental algorithm.
    An empty edge admits no transversal; no edges admit only the empty set.
    """
    edges = minimal_sets(edges)
    if any(not edge for edge in edges):
        return []
    transversals: list[frozenset[int]] = [frozenset()]
    for edge in edges:
        grown = set()
        for t in transversals:
            if t & edge:
                grown.add(t)
            else:
                grown.update(t | {v} for v in edge)
        transversals = minimal_sets(grown)
    return transversals


def monomial_generators(polys: Sequence[MPoly]) -> list[Monomial]:
    monomials = []
    for poly in polys:
        if not poly.is_monomial:
            raise MonomialIdealError(f"{poly} is not a monomial")
        monomials.extend(poly.terms)
    return minimalize(monomials)


def minimal_primes_monomial(ring: Ring, polys: Sequence[MPoly]) -> list[tuple[str, ...]]:
    """
    Minimal primes of a monomial ideal, each given by the variables it contains.
    Sorted by size, then by variable position.
    """
    edges = [support(m) for m in monomial_generators(polys)]
    return [
        tuple(ring.names[i] for i in sorted(t)) for t in minimal_transversals(edges)
    ]


def radical_monomial(ring: Ring, polys: Sequence[MPoly]) -> list[MPoly]:
    squarefree = [
        tuple(1 if e else 0 for e in m) for m in monomial_generators(polys)
    ]
    return [ring.monomial(m) for m in minimalize(squarefree)]


def monomial_dimension(nvars: int, leading: Iterable[Monomial]) -> int:
    """Krull dimension of S/in(I) from leading monomials; -1 for the unit ideal."""
    edges = [support(m) for m in leading]
    transversals = minimal_transversals(edges)
    if not transversals:
        return -1
    return nvars - min(len(t) for t in transversals)


def prime_of_support(ring: Ring, names: Iterable[str]) -> list[MPoly]:
    return [ring.gen(name) for name in sorted(names, key=ring.index)]
