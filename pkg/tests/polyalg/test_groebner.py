import pytest

from schubdeg.config import ResourceCaps
from schubdeg.polyalg.groebner import (
    ResourceCapExceededError,
    exact_quotient,
    lead_term,
    order_ring,
    reduce_modulo,
    reduced_groebner_basis,
)
from schubdeg.polyalg.orders import TermOrder
from schubdeg.polyalg.ring import Ring


@pytest.fixture
def ring():
    return Ring(names=("x", "y"))


def test_lex_basis_triangularizes(ring):
    x, y = ring.gens()

    basis = reduced_groebner_basis([x**2 - y, x * y - 1], ring, TermOrder.lex())

    assert basis == [x - y**2, y**3 - 1]


def test_grevlex_basis(ring):
    x, y = ring.gens()

    basis = reduced_groebner_basis([x**2 - y, x * y - 1], ring, TermOrder.grevlex())

    assert basis == [x**2 - y, x * y - 1, y**2 - x]


def test_zero_ideal_has_empty_basis(ring):
    assert reduced_groebner_basis([ring.zero()], ring, TermOrder.grevlex()) == []


def test_basis_is_monic(ring):
    x, y = ring.gens()
    basis = reduced_groebner_basis([3 * x + 6 * y], ring, TermOrder.lex())
    assert basis == [x + 2 * y]


def test_reduce_modulo(ring):
    x, y = ring.gens()
    basis = reduced_groebner_basis([x - y**2, y**3 - 1], ring, TermOrder.lex())

    assert reduce_modulo(x**3, basis, TermOrder.lex()) == ring.one()
    assert reduce_modulo(x + y, basis, TermOrder.lex()) == y**2 + y


def test_lead_term(ring):
    x, y = ring.gens()

    assert lead_term(x + y**2, TermOrder.lex()) == ((1, 0), 1)
    assert lead_term(x + y**2, TermOrder.grevlex()) == ((0, 2), 1)


def test_exact_quotient(ring):
    x, y = ring.gens()

    assert exact_quotient(x**2 - y**2, x + y) == x - y
    with pytest.raises(ValueError):
        exact_quotient(x**2 + y, x)


def test_degree_cap(ring):
    x, y = ring.gens()
    with pytest.raises(ResourceCapExceededError):
        reduced_groebner_basis(
            [x**5 - y], ring, TermOrder.grevlex(), ResourceCaps(max_degree=3)
        )


def test_y_dominant_basis_eliminates_y(ring):
    x, y = ring.gens()

    basis = reduced_groebner_basis([x**2 - y, x * y - 1], ring, TermOrder.y_dominant("y"))

    assert basis == [y - x**2, x**3 - 1]
    assert lead_term(y - x**2, TermOrder.y_dominant("y")) == ((0, 1), 1)


def test_order_rings_are_shared_per_order(ring):
    lex_ring = order_ring(ring, TermOrder.lex())

    assert lex_ring is order_ring(Ring(names=("x", "y")), TermOrder.lex())
    assert lex_ring != order_ring(ring, TermOrder.grevlex())
    assert lex_ring.symbols == ring.sympy_ring.symbols


def test_exact_quotient_by_zero(ring):
    with pytest.raises(ZeroDivisionError):
        exact_quotient(ring.gen("x"), ring.zero())
