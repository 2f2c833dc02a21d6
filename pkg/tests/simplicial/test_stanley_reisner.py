import pytest

from schubdeg.polyalg.ideal import Ideal
from schubdeg.polyalg.monomial import MonomialIdealError
from schubdeg.polyalg.ring import Ring
from schubdeg.simplicial.complex import SimplicialComplex, SimplicialComplexError
from schubdeg.simplicial.stanley_reisner import (
    complex_of_monomial_ideal,
    minimal_nonfaces,
    sr_ideal,
)


def test_circle_ideal_is_the_triangle_monomial():
    circle = SimplicialComplex.from_facets([[1, 2], [2, 3], [1, 3]])

    ideal = sr_ideal(circle)

    assert ideal.ring.names == ("x1", "x2", "x3")
    assert [str(g) for g in ideal.groebner()] == ["x1*x2*x3"]


def test_minimal_nonfaces_of_a_path():
    path = SimplicialComplex.from_facets([[1, 2], [2, 3]])
    assert minimal_nonfaces(path) == [frozenset({1, 3})]


def test_unused_vertex_is_a_nonface():
    complex_ = SimplicialComplex.from_facets([[1]], vertices=(1, 2))
    assert minimal_nonfaces(complex_) == [frozenset({2})]


def test_void_complex_gives_unit_ideal():
    assert sr_ideal(SimplicialComplex.void((1, 2))).is_unit()


def test_explicit_names():
    path = SimplicialComplex.from_facets([["a", "b"], ["b", "c"]])

    ideal = sr_ideal(path, {"a": "p", "b": "q", "c": "r"})

    assert [str(g) for g in ideal.groebner()] == ["p*r"]
    with pytest.raises(SimplicialComplexError):
        sr_ideal(path, {"a": "p"})


def test_complex_of_monomial_ideal():
    ring = Ring(names=("x1", "x2", "x3"))

    complex_ = complex_of_monomial_ideal(Ideal.parse(ring, "x1*x3"))

    assert complex_.sorted_facets() == [(1, 2), (2, 3)]
    assert complex_of_monomial_ideal(Ideal.unit(ring)).is_void
    assert complex_of_monomial_ideal(Ideal(ring)).sorted_facets() == [(1, 2, 3)]


def test_non_squarefree_ideal_rejected():
    ring = Ring(names=("x", "y"))
    with pytest.raises(MonomialIdealError):
        complex_of_monomial_ideal(Ideal.parse(ring, "x^2"))
    with pytest.raises(MonomialIdealError):
        complex_of_monomial_ideal(Ideal.parse(ring, "x - y"))


@pytest.mark.parametrize(
    "facets",
    [
        [[1], [2], [3]],
        [[1, 2], [2, 3]],
        [[1, 2], [2, 3], [1, 3]],
        [[1, 2], [3]],
        [[1, 2, 3]],
        [[1, 2, 3], [3, 4]],
        [[1, 2, 3], [2, 3, 4], [1, 4]],
    ],
)
def test_krull_dimension_is_one_more_than_the_complex(facets):
    complex_ = SimplicialComplex.from_facets(facets)

    assert sr_ideal(complex_).dimension() == complex_.dimension + 1
