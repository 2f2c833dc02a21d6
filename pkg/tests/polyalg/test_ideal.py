import pytest

from schubdeg.polyalg.ideal import Ideal, IdealError, ideal_combine, intersect_all
from schubdeg.polyalg.orders import TermOrder
from schubdeg.polyalg.ring import Ring


@pytest.fixture
def ring():
    return Ring(names=("x", "y"))


def test_generators_are_deduplicated(ring):
    ideal = Ideal.parse(ring, "x; x; 0; y")
    assert len(ideal.generators) == 2


def test_membership(ring):
    x, y = ring.gens()
    ideal = Ideal(ring, [x, y])

    assert ideal.contains(x * y + x)
    assert not ideal.contains(x + 1)
    assert ideal.contains_ideal(Ideal(ring, [x * y]))


def test_dimension_and_codimension(ring):
    assert Ideal(ring).dimension() == 2
    assert Ideal.parse(ring, "x*y").dimension() == 1
    assert Ideal.parse(ring, "x^2 - y; x*y - 1").dimension() == 0
    assert Ideal.unit(ring).dimension() == -1
    assert Ideal.unit(ring).codimension() == 3


def test_unit_detection(ring):
    assert Ideal.parse(ring, "x; x - 1").is_unit()
    assert not Ideal.parse(ring, "x").is_unit()


def test_intersection(ring):
    meet = Ideal.parse(ring, "x").intersection(Ideal.parse(ring, "y"))
    assert meet.equals(Ideal.parse(ring, "x*y"))


def test_colon_and_saturation(ring):
    x = ring.gen("x")

    assert Ideal.parse(ring, "x*y").colon(x).equals(Ideal.parse(ring, "y"))
    assert Ideal.parse(ring, "x^2*y").saturation(x).equals(Ideal.parse(ring, "y"))
    with pytest.raises(IdealError):
        Ideal.parse(ring, "x").colon(ring.zero())


def test_elimination():
    ring = Ring(names=("t", "x", "y"))

    image = Ideal.parse(ring, "x - t; y - t^2").eliminate(["t"])

    assert image.ring.names == ("x", "y")
    assert image.equals(Ideal.parse(image.ring, "y - x^2"))


def test_initial_ideal(ring):
    initial = Ideal.parse(ring, "x^2 - y; x*y - 1").initial_ideal()

    assert initial.is_monomial()
    assert initial.equals(Ideal.parse(ring, "x^2; x*y; y^2"))


def test_initial_ideal_depends_on_order(ring):
    ideal = Ideal.parse(ring, "x^2 - y; x*y - 1")
    assert ideal.initial_ideal(TermOrder.lex()).equals(Ideal.parse(ring, "x; y^3"))


def test_homogeneity(ring):
    parabola = Ideal.parse(ring, "x^2 - y")

    assert not parabola.is_homogeneous()
    assert parabola.is_homogeneous([(1,), (2,)])


def test_is_free_of(ring):
    assert not Ideal.parse(ring, "x*y - x; y - 1").is_free_of(["y"])
    assert not Ideal.parse(ring, "x + y; y").is_free_of(["y"])
    assert Ideal.parse(ring, "x^2").is_free_of(["y"])


def test_intersect_all(ring):
    primes = [Ideal.parse(ring, "x"), Ideal.parse(ring, "y")]

    assert intersect_all(ring, primes).equals(Ideal.parse(ring, "x*y"))
    assert intersect_all(ring, []).is_unit()


@pytest.mark.parametrize(
    "kind, expected",
    [
        ("sum", "x; y"),
        ("product", "x*y"),
        ("intersection", "x*y"),
        ("colon", "x"),
    ],
)
def test_ideal_combine(ring, kind, expected):
    first = Ideal.parse(ring, "x")
    second = Ideal.parse(ring, "y")

    result = ideal_combine(kind, first, second)

    assert result.equals(Ideal.parse(ring, expected))


def test_combine_saturation_and_elimination(ring):
    saturated = ideal_combine("saturation", Ideal.parse(ring, "x^3*y"), Ideal.parse(ring, "x"))
    eliminated = ideal_combine("elimination", Ideal.parse(ring, "x - y"), names=["y"])

    assert saturated.equals(Ideal.parse(ring, "y"))
    assert eliminated.is_zero


@pytest.mark.parametrize(
    "kind, second, names",
    [("bogus", "y", ()), ("sum", None, ()), ("elimination", None, ())],
)
def test_combine_errors(ring, kind, second, names):
    other = Ideal.parse(ring, second) if second else None
    with pytest.raises(IdealError):
        ideal_combine(kind, Ideal.parse(ring, "x"), other, names)


def test_ring_mismatch(ring):
    with pytest.raises(IdealError):
        Ideal.parse(ring, "x").sum(Ideal.parse(Ring(names=("x",)), "x"))


@pytest.mark.parametrize(
    "order", [TermOrder.lex(), TermOrder.grevlex(), TermOrder.y_dominant("y")]
)
@pytest.mark.parametrize("text", ["x^2 - y; x*y - 1", "x*y; x^2 - y^2", "x^3 - x*y + 1; y^2"])
def test_reduced_basis_is_idempotent(ring, order, text):
    basis = Ideal.parse(ring, text).groebner(order)

    assert Ideal(ring, basis).groebner(order) == basis


@pytest.mark.parametrize("text", ["x^2 - y; x*y - 1", "x*y; x^2 - y^2", "x^3 - x*y + 1; y^2"])
def test_membership_agrees_under_lex_and_grevlex(ring, text):
    ideal = Ideal.parse(ring, text)
    x, y = ring.gens()
    first = ideal.generators[0]
    candidates = [x, y, x * y, x**3 - 1, y**3 - 1, first * (x + 2 * y), first * x - y**4]
    candidates += [g * y + first * x**2 for g in ideal.generators]

    for poly in candidates:
        in_lex = ideal.normal_form(poly, TermOrder.lex()).is_zero
        assert in_lex == ideal.normal_form(poly, TermOrder.grevlex()).is_zero
    assert ideal.normal_form(first * (x + 2 * y), TermOrder.lex()).is_zero


def test_minimal_generators_drop_redundant_ones(ring):
    x, y = ring.gens()
    ideal = Ideal(ring, [x**2 - y**2, x * (x**2 - y**2), x * y])

    assert ideal.minimal_generators() == (x**2 - y**2, x * y)
    assert Ideal(ring, [x]).minimal_generators() == (x,)
