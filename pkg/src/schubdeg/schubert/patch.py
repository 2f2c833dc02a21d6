"""
Type A Schubert patches X_w|_v as affine varieties in the coordinates of
v·N_-: M = Π_v·U(z) with Π_v the permutation matrix carrying a 1 at
(v(j), j) and U lower unitriangular in the variables z_ij, i > j.

X_w is cut out by the northwest rank conditions
rank M[rows ≤ i, cols ≤ j] ≤ #{b ≤ j : w(b) ≤ i}.
"""

from functools import lru_cache
from itertools import combinations, permutations
from typing import Sequence

import structlog
from pydantic import BaseModel, ConfigDict, computed_field, field_validator, model_validator

from schubdeg.config import RESOURCE_CAPS, ResourceCaps
from schubdeg.polyalg.ideal import Ideal
from schubdeg.polyalg.jacobian import minors
from schubdeg.polyalg.ring import MPoly, Ring
from schubdeg.roots.permutations import PermOneLine, from_permutation
from schubdeg.roots.root_system import Root, RootSystem, build_root_system
from schubdeg.roots.weyl import WeylElement

logger = structlog.get_logger("schubdeg.schubert.patch")

MAX_PATCH_SIZE = 9


class PatchError(Exception):
    pass


def variable_name(i: int, j: int) -> str:
    return f"z{i}{j}"


def epsilon_difference(a: int, b: int, n: int) -> Root:
    """ε_a - ε_b in simple-root coordinates of A_{n-1}."""
    coords = [0] * (n - 1)
    low, high, sign = (a, b, 1) if a < b else (b, a, -1)
    for k in range(low, high):
        coords[k - 1] = sign
    return Root(tuple(coords))


def swap_positions(perm: Sequence[int], k: int) -> PermOneLine:
    """Right multiplication by s_k."""
    swapped = list(perm)
    swapped[k - 1], swapped[k] = swapped[k], swapped[k - 1]
    return PermOneLine(tuple(swapped))


def has_descent(perm: Sequence[int], k: int) -> bool:
    return perm[k - 1] > perm[k]


def northwest_rank(w: Sequence[int], i: int, j: int) -> int:
    return sum(1 for b in range(1, j + 1) if w[b - 1] <= i)


@lru_cache(maxsize=None)
def type_a(n: int) -> RootSystem:
    return build_root_system(f"A{n - 1}")


def as_element(perm: Sequence[int]) -> WeylElement:
    return from_permutation(type_a(len(perm)), perm)


class PatchChart(BaseModel):
    """
    Coordinates z_ij (i > j) on v·N_-·B/B. With `adapted = k` the unipotent
    factor is N'(z)·x_{-α_k}(ℓ): entry (k+1, k) of N' is zero, ℓ = z_{k+1,k}
    and column k of U reads U_ik = z_ik + ℓ·z_{i,k+1} for i > k + 1.
    """

    model_config = ConfigDict(frozen=True)

    v: PermOneLine
    adapted: int | None = None

    @field_validator("v")
    @classmethod
    def is_permutation(cls, v: PermOneLine) -> PermOneLine:
        n = len(v)
        if sorted(v) != list(range(1, n + 1)):
            raise ValueError(f"{v} is not a permutation of 1..{n}")
        if not 2 <= n <= MAX_PATCH_SIZE:
            raise ValueError(f"Patch charts need 2 <= n <= {MAX_PATCH_SIZE}, got {n}")
        return v

    @model_validator(mode="after")
    def adapted_index_in_range(self) -> "PatchChart":
        if self.adapted is not None and not 1 <= self.adapted < self.n:
            raise ValueError(f"Adapted index {self.adapted} outside 1..{self.n - 1}")
        return self

    @computed_field  # type: ignore[misc]
    @property
    def n(self) -> int:
        return len(self.v)

    @property
    def positions(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(2, self.n + 1) for j in range(1, i)]

    @property
    def ring(self) -> Ring:
        return Ring(names=tuple(variable_name(i, j) for i, j in self.positions))

    @property
    def line_variable(self) -> str | None:
        if self.adapted is None:
            return None
        return variable_name(self.adapted + 1, self.adapted)

    def weight(self, i: int, j: int) -> Root:
        """Weight ε_{v(i)} - ε_{v(j)} of z_ij, a tangent character at v."""
        return epsilon_difference(self.v[i - 1], self.v[j - 1], self.n)

    @computed_field  # type: ignore[misc]
    @property
    def declared_weights(self) -> dict[str, Root]:
        return {variable_name(i, j): self.weight(i, j) for i, j in self.positions}

    def weights(self) -> list[Root]:
        return [self.weight(i, j) for i, j in self.positions]

    def unipotent(self) -> list[list[MPoly]]:
        ring = self.ring
        n = self.n
        entries = [[ring.zero() for _ in range(n)] for _ in range(n)]
        for i in range(1, n + 1):
            entries[i - 1][i - 1] = ring.one()
        for i, j in self.positions:
            entries[i - 1][j - 1] = ring.gen(variable_name(i, j))
        k = self.adapted
        if k is not None:
            ell = ring.gen(variable_name(k + 1, k))
            for i in range(k + 2, n + 1):
                entries[i - 1][k - 1] = ring.gen(variable_name(i, k)) + ell * ring.gen(
                    variable_name(i, k + 1)
                )
        return entries

    def matrix(self) -> list[list[MPoly]]:
        """M = Π_v·U: row v(a) of M is row a of U."""
        unipotent = self.unipotent()
        rows: list[list[MPoly]] = [[] for _ in range(self.n)]
        for a, value in enumerate(self.v, start=1):
            rows[value - 1] = unipotent[a - 1]
        return rows


def rank_condition_generators(
    chart: PatchChart, w: Sequence[int], caps: ResourceCaps = RESOURCE_CAPS
) -> list[MPoly]:
    matrix = chart.matrix()
    generators: list[MPoly] = []
    for i in range(1, chart.n + 1):
        for j in range(1, chart.n + 1):
            bound = northwest_rank(w, i, j)
            if bound >= min(i, j):
                continue
            block = [row[:j] for row in matrix[:i]]
            generators.extend(minors(chart.ring, block, bound + 1, caps))
    return generators


def _check_pair(w: Sequence[int], v: Sequence[int]) -> None:
    if len(w) != len(v):
        raise PatchError(f"w = {tuple(w)} and v = {tuple(v)} have different sizes")
    if sorted(w) != list(range(1, len(w) + 1)):
        raise PatchError(f"{tuple(w)} is not a permutation of 1..{len(w)}")


def kl_patch_ideal(
    w: Sequence[int],
    v: Sequence[int],
    adapted: int | None = None,
    caps: ResourceCaps = RESOURCE_CAPS,
) -> Ideal:
    """Ideal of X_w|_v: every (r+1)-minor of each northwest block of Π_v·U."""
    _check_pair(w, v)
    chart = PatchChart(v=PermOneLine(tuple(v)), adapted=adapted)
    generators = rank_condition_generators(chart, w, caps)
    logger.debug(f"Patch ideal of w={tuple(w)} at v={tuple(v)}: {len(generators)} minors")
    return Ideal(chart.ring, generators)


def patch_chart(v: Sequence[int], adapted: int | None = None) -> PatchChart:
    return PatchChart(v=PermOneLine(tuple(v)), adapted=adapted)


def all_permutations(n: int) -> list[PermOneLine]:
    """S_n sorted by length then one-line notation."""
    def inversions(p: tuple[int, ...]) -> int:
        return sum(1 for a, b in combinations(range(n), 2) if p[a] > p[b])

    return sorted(
        (PermOneLine(p) for p in permutations(range(1, n + 1))),
        key=lambda p: (inversions(p), p),
    )
