import pytest

from schubdeg.polyalg.monomial import (
    MonomialIdealError,
    minimal_primes_monomial,
    minimal_transversals,
    minimalize,
    monomial_dimension,
    radical_monomial,
)
from schubdeg.polyalg.ring import Ring


@pytest.fixture
def ring():
    return Ring(names=("x", "y", "z"))


def test_minimalize():
    assert minimalize([(2, 0), (1, 0), (1, 1), (0, 3)]) == [(1, 0), (0, 3)]


def test_minimal_transversals():
    edges = [frozenset({0, 1}), frozenset({1, 2})]

    assert minimal_transversals(edges) == [frozenset({1}), frozenset({0, 2})]
    assert minimal_transversals([]) == [frozenset()]
    assert minimal_transversals([frozenset()]) == []


def test_minimal_primes(ring):
    x, y, z = ring.gens()
    assert minimal_primes_monomial(ring, [x * y, y * z]) == [("y",), ("x", "z")]


def test_radical(ring):
    x, y, _ = ring.gens()
    assert radical_monomial(ring, [x**2 * y, y**3]) == [y]


def test_non_monomial_rejected(ring):
    x, y, _ = ring.gens()
    with pytest.raises(MonomialIdealError):
        minimal_primes_monomial(ring, [x + y])


def test_monomial_dimension():
    assert monomial_dimension(3, [(1, 1, 0)]) == 2
    assert monomial_dimension(3, [(1, 0, 0), (0, 1, 0)]) == 1
    assert monomial_dimension(3, [(0, 0, 0)]) == -1
