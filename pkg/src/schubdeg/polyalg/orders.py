from enum import Enum
from typing import Callable

from pydantic import BaseModel, ConfigDict, model_validator
from sympy.polys.orderings import grevlex, lex

from schubdeg.polyalg.ring import Monomial, Ring, RingError

MonomialKey = Callable[[Monomial], tuple]


class TermOrderKind(str, Enum):
    LEX = "lex"
    GREVLEX = "grevlex"
    WEIGHT = "weight"
    Y_DOMINANT = "y_dominant"


BASE_KEYS: dict[TermOrderKind, MonomialKey] = {
    TermOrderKind.LEX: lex,
    TermOrderKind.GREVLEX: grevlex,
}


class TermOrder(BaseModel):
    """
    Term order over a ring, described by names so that one order can be reused
    across rings sharing those names.

    `weight` compares a nonnegative weight vector first and breaks ties by `base`.
    `y_dominant` compares the total degree in the `y` variables first; it is an
    elimination order for them.
    """

    model_config = ConfigDict(frozen=True)

    kind: TermOrderKind = TermOrderKind.GREVLEX
    base: TermOrderKind = TermOrderKind.GREVLEX
    weights: tuple[int, ...] = ()
    y: tuple[str, ...] = ()

    @model_validator(mode="after")
    def check_shape(self) -> "TermOrder":
        if self.base not in BASE_KEYS:
            raise ValueError(f"Tie-break order must be lex or grevlex, not {self.base.value}")
        if self.kind == TermOrderKind.WEIGHT:
            if not self.weights:
                raise ValueError("A weight order needs a weight vector")
            if any(w < 0 for w in self.weights):
                raise ValueError("Weight orders need nonnegative weights")
        if self.kind == TermOrderKind.Y_DOMINANT and not self.y:
            raise ValueError("A y-dominant order needs at least one y variable")
        return self

    @classmethod
    def lex(cls) -> "TermOrder":
        return cls(kind=TermOrderKind.LEX)

    @classmethod
    def grevlex(cls) -> "TermOrder":
        return cls(kind=TermOrderKind.GREVLEX)

    @classmethod
    def y_dominant(cls, *names: str, base: TermOrderKind = TermOrderKind.GREVLEX) -> "TermOrder":
        return cls(kind=TermOrderKind.Y_DOMINANT, y=tuple(names), base=base)

    @classmethod
    def weighted(
        cls, weights: tuple[int, ...], base: TermOrderKind = TermOrderKind.GREVLEX
    ) -> "TermOrder":
        return cls(kind=TermOrderKind.WEIGHT, weights=weights, base=base)

    def describe(self) -> str:
        if self.kind == TermOrderKind.Y_DOMINANT:
            return f"y_dominant({','.join(self.y)}; {self.base.value})"
        if self.kind == TermOrderKind.WEIGHT:
            return f"weight({','.join(map(str, self.weights))}; {self.base.value})"
        return self.kind.value

    def key_for(self, ring: Ring) -> MonomialKey:
        if self.kind in BASE_KEYS:
            return BASE_KEYS[self.kind]
        base = BASE_KEYS[self.base]
        if self.kind == TermOrderKind.WEIGHT:
            if len(self.weights) != ring.nvars:
                raise RingError(
                    f"Weight vector of length {len(self.weights)} for {ring.nvars} variables"
                )
            weights = self.weights
            return lambda m: (sum(w * e for w, e in zip(weights, m)), base(m))
        indices = tuple(ring.index(name) for name in self.y)
        return lambda m: (sum(m[i] for i in indices), base(m))


def parse_term_order(text: str) -> TermOrder:
    """
    Accepts `lex`, `grevlex`, `y:<name>[,<name>...]` and `weight:<w1>,<w2>,...`.
    """
    text = text.strip()
    if text in ("lex", "grevlex"):
        return TermOrder(kind=TermOrderKind(text))
    kind, _, rest = text.partition(":")
    names = [item.strip() for item in rest.split(",") if item.strip()]
    if kind in ("y", "y_dominant") and names:
        return TermOrder.y_dominant(*names)
    if kind == "weight" and names:
        try:
            return TermOrder.weighted(tuple(int(item) for item in names))
        except ValueError as e:
            raise ValueError(f"Bad weight order {text!r}: {e}")
    raise ValueError(f"Unknown term order {text!r}")
