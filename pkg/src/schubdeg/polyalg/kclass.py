"""Elements of the representation ring Z[e^{±a1}, ..., e^{±ar}] of a torus."""

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping, Sequence

from sympy import ZZ, Symbol
from sympy.polys.rings import PolyElement, PolyRing

from schubdeg.polyalg.ring import MPoly, format_polynomial, linear_form, root_ring

Weight = tuple[int, ...]


class KElemError(Exception):
    pass


@lru_cache(maxsize=None)
def character_ring(rank: int) -> PolyRing:
    """Z[t1, ..., tr] with t_i standing for e^{a_i}; a Laurent element is t^shift * element."""
    return PolyRing(tuple(Symbol(f"t{i}") for i in range(1, rank + 1)), ZZ)


class KElem:
    """
    Laurent polynomial in e^{a_i}, kept as t^shift * element with `element` a polynomial
    of `character_ring(rank)` not divisible by any t_i.
    """

    __slots__ = ("rank", "shift", "element")

    def __init__(self, rank: int, terms: Mapping[Weight, int] | None = None):
        terms = {tuple(w): int(c) for w, c in (terms or {}).items() if c}
        for weight in terms:
            if len(weight) != rank:
                raise KElemError(f"Weight {weight} does not have rank {rank}")
        shift = tuple(min(w[i] for w in terms) for i in range(rank)) if terms else (0,) * rank
        ring = character_ring(rank)
        element = ring.from_dict(
            {tuple(a - s for a, s in zip(w, shift)): ZZ(c) for w, c in terms.items()}
        )
        self._set(rank, shift, element)

    def _set(self, rank: int, shift: Weight, element: PolyElement):
        if not element:
            shift = (0,) * rank
        else:
            low = tuple(min(m[i] for m in element) for i in range(rank))
            if any(low):
                ldiv = element.ring.monomial_ldiv
                element = element.ring.from_dict({ldiv(m, low): c for m, c in element.items()})
                shift = tuple(s + e for s, e in zip(shift, low))
        self.rank = rank
        self.shift = shift
        self.element = element

    @classmethod
    def _build(cls, rank: int, shift: Weight, element: PolyElement) -> "KElem":
        k = cls.__new__(cls)
        k._set(rank, shift, element)
        return k

    @property
    def terms(self) -> dict[Weight, int]:
        return {
            tuple(e + s for e, s in zip(m, self.shift)): int(c) for m, c in self.element.items()
        }

    @classmethod
    def zero(cls, rank: int) -> "KElem":
        return cls(rank)

    @classmethod
    def one(cls, rank: int) -> "KElem":
        return cls(rank, {(0,) * rank: 1})

    @classmethod
    def exp(cls, weight: Sequence[int]) -> "KElem":
        return cls(len(weight), {tuple(weight): 1})

    @classmethod
    def one_minus_exp(cls, weight: Sequence[int]) -> "KElem":
        """1 - e^{weight}, the class of a hyperplane whose coordinate has weight -weight."""
        return cls.one(len(weight)) - cls.exp(weight)

    def _check(self, other: "KElem"):
        if self.rank != other.rank:
            raise KElemError(f"Rank mismatch: {self.rank} vs {other.rank}")

    def _lifted(self, shift: Weight) -> PolyElement:
        return self.element.mul_monom(tuple(s - b for s, b in zip(self.shift, shift)))

    def __add__(self, other: "KElem") -> "KElem":
        self._check(other)
        shift = tuple(min(a, b) for a, b in zip(self.shift, other.shift))
        return KElem._build(self.rank, shift, self._lifted(shift) + other._lifted(shift))

    def __neg__(self) -> "KElem":
        return KElem._build(self.rank, self.shift, -self.element)

    def __sub__(self, other: "KElem") -> "KElem":
        return self + (-other)

    def __mul__(self, other: "KElem | int") -> "KElem":
        if isinstance(other, int):
            return KElem._build(self.rank, self.shift, self.element * other)
        self._check(other)
        shift = tuple(a + b for a, b in zip(self.shift, other.shift))
        return KElem._build(self.rank, shift, self.element * other.element)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KElem):
            return NotImplemented
        return (
            self.rank == other.rank and self.shift == other.shift and self.element == other.element
        )

    def __hash__(self) -> int:
        return hash((self.rank, self.shift, frozenset(self.element.items())))

    @property
    def is_zero(self) -> bool:
        return not self.element

    def augmentation(self) -> int:
        """Image under e^λ ↦ 1."""
        return int(sum(self.element.values(), ZZ.zero))

    def exponential_truncation(self, degree: int) -> MPoly:
        """Σ c·e^λ expanded as Σ c·λ^k/k! up to total degree `degree`, in a1..ar."""
        ring = root_ring(self.rank)
        result = ring.zero()
        for weight, coefficient in self.terms.items():
            form = linear_form(ring, weight)
            power = ring.one()
            for k in range(degree + 1):
                result = result + power * Fraction(coefficient, factorial(k))
                power = power * form
        return result.truncate(degree)

    def lowest_degree_part(self, max_degree: int) -> tuple[int, MPoly] | None:
        """First nonzero homogeneous part of the exponential expansion, if any up to max_degree."""
        expansion = self.exponential_truncation(max_degree)
        for d in range(max_degree + 1):
            part = expansion.homogeneous_part(d)
            if not part.is_zero:
                return d, part
        return None

    def to_payload(self) -> list[dict]:
        terms = self.terms
        return [
            {"weight": list(weight), "coefficient": terms[weight]} for weight in sorted(terms)
        ]

    def __str__(self) -> str:
        terms = self.terms
        if not terms:
            return "0"
        ring = root_ring(self.rank)
        pieces = []
        for weight in sorted(terms, key=lambda w: (sum(abs(x) for x in w), w)):
            coefficient = terms[weight]
            if any(weight):
                body = f"e^({format_polynomial(linear_form(ring, weight))})"
                if coefficient == 1:
                    piece = body
                elif coefficient == -1:
                    piece = f"-{body}"
                else:
                    piece = f"{coefficient}*{body}"
            else:
                piece = str(coefficient)
            pieces.append(piece)
        text = pieces[0]
        for piece in pieces[1:]:
            text += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return text

    def __repr__(self) -> str:
        return f"KElem({self})"
