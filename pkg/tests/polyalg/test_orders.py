import pytest

from schubdeg.polyalg.orders import TermOrder, TermOrderKind, parse_term_order
from schubdeg.polyalg.ring import Ring, RingError


@pytest.fixture
def ring():
    return Ring(names=("x", "y"))


@pytest.mark.parametrize(
    "text, describe",
    [
        ("lex", "lex"),
        ("grevlex", "grevlex"),
        ("y:y", "y_dominant(y; grevlex)"),
        ("weight:1,2", "weight(1,2; grevlex)"),
    ],
)
def test_parse_term_order(text, describe):
    assert parse_term_order(text).describe() == describe


@pytest.mark.parametrize("text", ["bogus", "y:", "weight:a,b", "weight:-1,2"])
def test_bad_term_orders(text):
    with pytest.raises(ValueError):
        parse_term_order(text)


def test_lex_versus_grevlex(ring):
    lex_key = TermOrder.lex().key_for(ring)
    grevlex_key = TermOrder.grevlex().key_for(ring)

    assert lex_key((1, 0)) > lex_key((0, 3))
    assert grevlex_key((0, 3)) > grevlex_key((1, 0))


def test_y_dominant_eliminates_y(ring):
    key = TermOrder.y_dominant("y").key_for(ring)
    assert key((0, 1)) > key((5, 0))


def test_weighted_order(ring):
    key = TermOrder.weighted((1, 3)).key_for(ring)

    assert key((0, 1)) > key((2, 0))
    with pytest.raises(RingError):
        TermOrder.weighted((1, 2, 3)).key_for(ring)


def test_shape_validation():
    with pytest.raises(ValueError):
        TermOrder(kind=TermOrderKind.WEIGHT)
    with pytest.raises(ValueError):
        TermOrder(kind=TermOrderKind.Y_DOMINANT)
    with pytest.raises(ValueError):
        TermOrder(base=TermOrderKind.WEIGHT)
