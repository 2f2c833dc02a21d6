import pytest

from schubdeg.gvd.split import (
    GVDError,
    family_fiber,
    family_ideal,
    gvd_split,
    initial_y_form,
    initial_y_ideal,
)
from schubdeg.polyalg.ideal import Ideal
from schubdeg.polyalg.ring import Ring, RingError, parse_polynomial


@pytest.fixture
def ring():
    return Ring(names=("x", "y", "z"))


def test_initial_y_form(ring):
    poly = parse_polynomial(ring, "x*y^2 + y + 1")
    assert initial_y_form(poly, "y") == parse_polynomial(ring, "x*y^2")


def test_cone_decomposes_along_y(ring):
    report = gvd_split(Ideal.parse(ring, "x*y - z^2"), "y")

    assert report.decomposition_holds
    assert report.containment_holds
    assert not report.lambda_empty
    assert report.i_prime.equals(Ideal.parse(ring, "x*y"))
    assert report.p.equals(Ideal.parse(ring, "y"))
    assert report.c_ring == ["x", "z"]
    assert report.c.equals(Ideal.parse(report.c.ring, "x"))
    assert report.set_level == "not checked"


def test_report_serializes_bases_under_aliases(ring):
    payload = gvd_split(Ideal.parse(ring, "x*y - z^2"), "y").model_dump(
        mode="json", by_alias=True
    )

    assert payload["I_prime"] == ["x*y"]
    assert payload["C"] == ["x"]
    assert payload["P"] == ["y"]


def test_parabola_does_not_decompose_along_y():
    ring = Ring(names=("x", "y"))

    report = gvd_split(Ideal.parse(ring, "y^2 - x"), "y")

    assert not report.decomposition_holds
    assert report.lambda_empty
    assert report.i_prime.equals(Ideal.parse(ring, "y^2"))
    assert len(report.notes) == 2


def test_parabola_decomposes_along_x():
    ring = Ring(names=("x", "y"))

    report = gvd_split(Ideal.parse(ring, "y^2 - x"), "x")

    assert report.decomposition_holds
    assert report.i_prime.equals(Ideal.parse(ring, "x"))


def test_initial_y_ideal_uses_the_whole_basis():
    ring = Ring(names=("x", "y"))

    limit = initial_y_ideal(Ideal.parse(ring, "x - y; y^2 - 1"), "y")

    assert limit.equals(Ideal.parse(ring, "y; x^2 - 1"))


def test_unknown_variable(ring):
    with pytest.raises(RingError):
        gvd_split(Ideal.parse(ring, "x"), "w")


def test_family_interpolates_between_ideal_and_limit(ring):
    ideal = Ideal.parse(ring, "x*y - z^2")

    family = family_ideal(ideal, "y", "s")

    assert family.ring.names == ("x", "y", "z", "s")
    assert family_fiber(family, "s", 1).equals(ideal)
    assert family_fiber(family, "s", 0).equals(Ideal.parse(ring, "x*y"))
    assert family_fiber(family, "s", 3).equals(Ideal.parse(ring, "x*y - 3*z^2"))


def test_family_parameter_must_be_fresh(ring):
    with pytest.raises(GVDError):
        family_ideal(Ideal.parse(ring, "x*y - z^2"), "y", "z")


def test_example_degenerating_onto_a_node():
    ring = Ring(names=("x", "y", "l"))
    ideal = Ideal.parse(ring, "l*(x^2 - y^2) - y^2")

    report = gvd_split(ideal, "l")

    assert report.decomposition_holds
    assert report.i_prime.equals(Ideal.parse(ring, "l*(x^2 - y^2)"))
    assert report.c_ring == ["x", "y"]
    assert report.c.embed(ring).equals(Ideal.parse(ring, "x^2 - y^2"))
    assert report.p.equals(Ideal.parse(ring, "l"))
