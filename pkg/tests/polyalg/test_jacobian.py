import pytest

from schubdeg.config import ResourceCaps
from schubdeg.polyalg.groebner import ResourceCapExceededError
from schubdeg.polyalg.ideal import Ideal
from schubdeg.polyalg.jacobian import jacobian_matrix, jacobian_singular_ideal, minors
from schubdeg.polyalg.ring import Ring


@pytest.fixture
def ring():
    return Ring(names=("x", "y"))


def test_jacobian_matrix(ring):
    x, y = ring.gens()
    assert jacobian_matrix(ring, [x**2 * y]) == [[2 * x * y, x**2]]


def test_node_is_singular_at_the_origin(ring):
    singular = jacobian_singular_ideal(Ideal.parse(ring, "x^2 - y^2"))
    assert singular.equals(Ideal.parse(ring, "x; y"))


def test_smooth_curve_has_empty_singular_locus(ring):
    assert jacobian_singular_ideal(Ideal.parse(ring, "y - x^2")).is_unit()


def test_minors(ring):
    x, y = ring.gens()
    matrix = [[x, y], [y, x]]

    assert minors(ring, matrix, 2) == [x**2 - y**2]
    assert minors(ring, matrix, 0) == [ring.one()]
    assert minors(ring, matrix, 3) == []


def test_minor_size_cap(ring):
    x, y = ring.gens()
    with pytest.raises(ResourceCapExceededError):
        minors(ring, [[x, y], [y, x]], 2, ResourceCaps(max_minor_size=1))
