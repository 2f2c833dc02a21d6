import re
from fractions import Fraction
from functools import lru_cache
from tokenize import TokenError
from typing import Any, Callable, Iterable, Mapping, Sequence

import structlog
from pydantic import BaseModel, ConfigDict, field_validator
from sympy import QQ, Symbol
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.orderings import grevlex, grlex
from sympy.polys.rings import PolyElement, PolyRing

logger = structlog.get_logger("schubdeg.polyalg.ring")

VARIABLE_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")

Monomial = tuple[int, ...]
Coefficient = Fraction | int


class RingError(Exception):
    pass


class PolynomialParseError(Exception):
    pass


@lru_cache(maxsize=None)
def polynomial_ring(names: tuple[str, ...]) -> PolyRing:
    """sympy ring Q[names] under grevlex, one instance per tuple of names."""
    return PolyRing(tuple(Symbol(name) for name in names), QQ, grevlex)


def to_rational(value: Any) -> Any:
    """Coefficient as an element of sympy's QQ."""
    if isinstance(value, QQ.dtype):
        return value
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def to_fraction(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


class Ring(BaseModel):
    """Polynomial ring over Q with an ordered tuple of variable names."""

    model_config = ConfigDict(frozen=True)

    names: tuple[str, ...]

    @field_validator("names")
    @classmethod
    def names_are_valid(cls, names: tuple[str, ...]) -> tuple[str, ...]:
        for name in names:
            if not VARIABLE_NAME.match(name):
                raise ValueError(f"Invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"Duplicate variable names in {names}")
        return names

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def sympy_ring(self) -> PolyRing:
        return polynomial_ring(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise RingError(f"Variable {name!r} is not in the ring {self.names}")

    def zero(self) -> "MPoly":
        return MPoly.wrap(self, self.sympy_ring.zero)

    def one(self) -> "MPoly":
        return MPoly.wrap(self, self.sympy_ring.one)

    def constant(self, value: Coefficient) -> "MPoly":
        return MPoly.wrap(self, self.sympy_ring.ground_new(to_rational(value)))

    def gen(self, name: str) -> "MPoly":
        return MPoly.wrap(self, self.sympy_ring.gens[self.index(name)])

    def gens(self) -> list["MPoly"]:
        return [MPoly.wrap(self, gen) for gen in self.sympy_ring.gens]

    def monomial(self, exponents: Sequence[int], coefficient: Coefficient = 1) -> "MPoly":
        return MPoly(self, {tuple(exponents): coefficient})

    def from_element(self, element: PolyElement) -> "MPoly":
        """Bring an element of any sympy ring over the same names back into this ring."""
        return MPoly.wrap(self, element.set_ring(self.sympy_ring))

    def fresh_name(self, base: str) -> str:
        candidate, suffix = base, 0
        while candidate in self.names:
            suffix += 1
            candidate = f"{base}{suffix}"
        return candidate

    def extend(self, names: Iterable[str]) -> "Ring":
        return Ring(names=self.names + tuple(names))

    def without(self, names: Iterable[str]) -> "Ring":
        dropped = set(names)
        for name in dropped:
            self.index(name)
        return Ring(names=tuple(name for name in self.names if name not in dropped))


class MPoly:
    """
    Polynomial of a `Ring`, stored as an element of the matching sympy PolyRing.
    Values are treated as immutable once built; `terms` is the exponent tuple ->
    Fraction view of the element.
    """

    __slots__ = ("ring", "element", "_terms")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, Coefficient]):
        self.ring = ring
        self.element = ring.sympy_ring.from_dict(
            {tuple(monomial): to_rational(c) for monomial, c in terms.items()}
        )
        self._terms: dict[Monomial, Fraction] | None = None

    @classmethod
    def wrap(cls, ring: Ring, element: PolyElement) -> "MPoly":
        poly = cls.__new__(cls)
        poly.ring = ring
        poly.element = element
        poly._terms = None
        return poly

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        if self._terms is None:
            self._terms = {
                m: to_fraction(c) for m, c in self.element.items()
            }
        return self._terms

    def _select(self, keep: Callable[[Monomial], bool]) -> "MPoly":
        sympy_ring = self.ring.sympy_ring
        return MPoly.wrap(
            self.ring, sympy_ring.from_dict({m: c for m, c in self.element.items() if keep(m)})
        )

    def _coerce(self, other: "MPoly | Coefficient") -> PolyElement:
        if isinstance(other, MPoly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingError(f"Ring mismatch: {self.ring.names} vs {other.ring.names}")
            return other.element
        return self.ring.sympy_ring.ground_new(to_rational(other))

    def __add__(self, other: "MPoly | Coefficient") -> "MPoly":
        return MPoly.wrap(self.ring, self.element + self._coerce(other))

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly.wrap(self.ring, -self.element)

    def __sub__(self, other: "MPoly | Coefficient") -> "MPoly":
        return MPoly.wrap(self.ring, self.element - self._coerce(other))

    def __rsub__(self, other: Coefficient) -> "MPoly":
        return MPoly.wrap(self.ring, self._coerce(other) - self.element)

    def __mul__(self, other: "MPoly | Coefficient") -> "MPoly":
        if not isinstance(other, MPoly):
            return MPoly.wrap(self.ring, self.element.mul_ground(to_rational(other)))
        return MPoly.wrap(self.ring, self.element * self._coerce(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MPoly":
        if exponent < 0:
            raise RingError("Negative powers are not polynomials")
        if exponent == 0:
            return self.ring.one()
        if not self.element:
            return self
        return MPoly.wrap(self.ring, self.element**exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MPoly):
            return self.ring == other.ring and self.element == other.element
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring.names, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.element)

    def __repr__(self) -> str:
        return f"MPoly({format_polynomial(self)!r})"

    def __str__(self) -> str:
        return format_polynomial(self)

    @property
    def is_zero(self) -> bool:
        return not self.element

    @property
    def is_constant(self) -> bool:
        return all(not any(monomial) for monomial in self.element)

    @property
    def is_monomial(self) -> bool:
        return len(self.element) == 1

    def total_degree(self) -> int:
        if not self.element:
            return -1
        return max(sum(monomial) for monomial in self.element)

    def degree_in(self, name: str) -> int:
        index = self.ring.index(name)
        if not self.element:
            return -1
        return max(monomial[index] for monomial in self.element)

    def is_free_of(self, names: Iterable[str]) -> bool:
        indices = [self.ring.index(name) for name in names]
        return all(monomial[i] == 0 for monomial in self.element for i in indices)

    def support(self) -> set[str]:
        used = set()
        for monomial in self.element:
            used.update(self.ring.names[i] for i, e in enumerate(monomial) if e)
        return used

    def homogeneous_part(self, degree: int) -> "MPoly":
        return self._select(lambda m: sum(m) == degree)

    def truncate(self, degree: int) -> "MPoly":
        """Drop every term of total degree above `degree`."""
        return self._select(lambda m: sum(m) <= degree)

    def lowest_degree_part(self) -> "MPoly":
        if not self.element:
            return self
        return self.homogeneous_part(min(sum(m) for m in self.element))

    def y_degree_part(self, names: Sequence[str], degree: int) -> "MPoly":
        indices = [self.ring.index(name) for name in names]
        return self._select(lambda m: sum(m[i] for i in indices) == degree)

    def substitute(self, values: Mapping[str, "MPoly | Coefficient"], target: Ring) -> "MPoly":
        """
        Replace the named variables by values in `target`; every remaining
        variable must exist in `target` under the same name.
        """
        images: list[PolyElement] = []
        for name in self.ring.names:
            if name in values:
                value = values[name]
                image = value if isinstance(value, MPoly) else target.constant(value)
                if image.ring != target:
                    raise RingError("Substitution values must live in the target ring")
                images.append(image.element)
            else:
                images.append(target.sympy_ring.gens[target.index(name)])
        result = target.sympy_ring.zero
        power_cache: dict[tuple[int, int], PolyElement] = {}
        for monomial, coefficient in self.element.items():
            term = target.sympy_ring.ground_new(coefficient)
            for index, exponent in enumerate(monomial):
                if not exponent:
                    continue
                key = (index, exponent)
                if key not in power_cache:
                    power_cache[key] = images[index] ** exponent
                term = term * power_cache[key]
            result = result + term
        return MPoly.wrap(target, result)

    def rename(self, mapping: Mapping[str, str], target: Ring) -> "MPoly":
        """Move to `target` sending each variable to mapping.get(name, name)."""
        positions = [target.index(mapping.get(name, name)) for name in self.ring.names]
        terms: dict[Monomial, Any] = {}
        for monomial, coefficient in self.element.items():
            exponents = [0] * target.nvars
            for index, exponent in enumerate(monomial):
                exponents[positions[index]] += exponent
            key = tuple(exponents)
            terms[key] = terms.get(key, QQ.zero) + coefficient
        return MPoly.wrap(target, target.sympy_ring.from_dict(terms))

    def embed(self, target: Ring) -> "MPoly":
        return self.rename({}, target)

    def project(self, target: Ring) -> "MPoly":
        """Move into a ring lacking some variables; those must not occur."""
        dropped = [i for i, name in enumerate(self.ring.names) if name not in target.names]
        if any(monomial[i] for monomial in self.element for i in dropped):
            raise RingError(f"{self} involves variables missing from {target.names}")
        kept = [i for i, name in enumerate(self.ring.names) if name in target.names]
        positions = [target.index(self.ring.names[i]) for i in kept]
        terms = {}
        for monomial, coefficient in self.element.items():
            exponents = [0] * target.nvars
            for index, position in zip(kept, positions):
                exponents[position] = monomial[index]
            terms[tuple(exponents)] = coefficient
        return MPoly.wrap(target, target.sympy_ring.from_dict(terms))

    def partial_derivative(self, name: str) -> "MPoly":
        gen = self.ring.sympy_ring.gens[self.ring.index(name)]
        return MPoly.wrap(self.ring, self.element.diff(gen))

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise RingError(f"{self} is not constant")
        return to_fraction(self.element.coeff(1))


def root_ring(rank: int) -> Ring:
    """Ring of the simple-root symbols a1..ar in which restriction classes live."""
    return Ring(names=tuple(f"a{i}" for i in range(1, rank + 1)))


def linear_form(ring: Ring, coords: Sequence[int]) -> MPoly:
    if len(coords) != ring.nvars:
        raise RingError(f"Root {tuple(coords)} does not match ring {ring.names}")
    gens = ring.sympy_ring.gens
    return MPoly.wrap(ring, sum((c * gen for c, gen in zip(coords, gens)), ring.sympy_ring.zero))


def _format_monomial(ring: Ring, monomial: Monomial) -> str:
    factors = []
    for name, exponent in zip(ring.names, monomial):
        if exponent == 1:
            factors.append(name)
        elif exponent > 1:
            factors.append(f"{name}^{exponent}")
    return "*".join(factors)


def format_polynomial(poly: MPoly) -> str:
    """Terms under graded-lex, highest first; `*` products and `^` powers."""
    terms = poly.terms
    if not terms:
        return "0"
    pieces = []
    for monomial in sorted(terms, key=grlex, reverse=True):
        coefficient = terms[monomial]
        body = _format_monomial(poly.ring, monomial)
        if not body:
            piece = str(coefficient)
        elif coefficient == 1:
            piece = body
        elif coefficient == -1:
            piece = f"-{body}"
        else:
            piece = f"{coefficient}*{body}"
        pieces.append(piece)
    text = pieces[0]
    for piece in pieces[1:]:
        text += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return text


TRANSFORMATIONS = standard_transformations + (convert_xor,)


def parse_polynomial(ring: Ring, text: str, position: int | None = None) -> MPoly:
    where = f" (generator {position})" if position is not None else ""
    symbols = {name: Symbol(name) for name in ring.names}
    try:
        expression = parse_expr(text, local_dict=symbols, transformations=TRANSFORMATIONS)
    except (SyntaxError, TypeError, ValueError, TokenError) as e:
        raise PolynomialParseError(f"Cannot parse{where} {text!r}: {e}")
    unknown = {str(s) for s in getattr(expression, "free_symbols", ())} - set(ring.names)
    if unknown:
        raise PolynomialParseError(
            f"Unknown variables{where} in {text!r}: {', '.join(sorted(unknown))}"
        )
    try:
        element = ring.sympy_ring.from_expr(expression)
    except (ValueError, TypeError, AttributeError) as e:
        raise PolynomialParseError(f"Not a polynomial{where}: {text!r} ({e})")
    return MPoly.wrap(ring, element)


def split_generators(text: str) -> list[str]:
    """Semicolon- or newline-separated generators; blank and `#` lines are skipped."""
    items = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        items.extend(item.strip() for item in line.split(";") if item.strip())
    return items


def parse_polynomials(ring: Ring, text: str) -> list[MPoly]:
    return [
        parse_polynomial(ring, item, position)
        for position, item in enumerate(split_generators(text), start=1)
    ]
