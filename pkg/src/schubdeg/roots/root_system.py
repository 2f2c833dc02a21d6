import re
from collections import deque
from functools import lru_cache
from typing import NewType, Sequence

import numpy as np
import structlog
from pydantic import BaseModel, ConfigDict, computed_field, model_validator

from schubdeg.config import RESOURCE_CAPS, ResourceCaps

logger = structlog.get_logger("schubdeg.roots.root_system")

# Coefficients of a root on the simple roots alpha_1..alpha_r.
Root = NewType("Root", tuple[int, ...])

CARTAN_LABEL = re.compile(r"^([A-G])([1-9][0-9]*)$")


class RootSystemError(Exception):
    pass


def _chain(rank: int) -> list[list[int]]:
    matrix = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        matrix[i][i] = 2
        if i + 1 < rank:
            matrix[i][i + 1] = -1
            matrix[i + 1][i] = -1
    return matrix


def cartan_matrix(label: str) -> list[list[int]]:
    """
    Cartan matrix for a finite-type label, Bourbaki numbering, with
    a_ij = 2(alpha_i, alpha_j) / (alpha_i, alpha_i).
    """
    match = CARTAN_LABEL.match(label)
    if match is None:
        raise RootSystemError(f"Malformed Cartan type label: {label!r}")
    family, rank = match.group(1), int(match.group(2))

    if family == "A":
        return _chain(rank)
    if family == "B" and rank >= 2:
        matrix = _chain(rank)
        # alpha_r is the short root
        matrix[rank - 1][rank - 2] = -2
        return matrix
    if family == "C" and rank >= 3:
        matrix = _chain(rank)
        matrix[rank - 2][rank - 1] = -2
        return matrix
    if family == "D" and rank >= 4:
        matrix = _chain(rank)
        matrix[rank - 2][rank - 1] = matrix[rank - 1][rank - 2] = 0
        matrix[rank - 3][rank - 1] = matrix[rank - 1][rank - 3] = -1
        return matrix
    if family == "E" and rank in (6, 7, 8):
        matrix = [[0] * rank for _ in range(rank)]
        edges = [(1, 3), (3, 4), (2, 4)] + [(k, k + 1) for k in range(4, rank)]
        for i in range(rank):
            matrix[i][i] = 2
        for i, j in edges:
            matrix[i - 1][j - 1] = matrix[j - 1][i - 1] = -1
        return matrix
    if family == "F" and rank == 4:
        return [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    if family == "G" and rank == 2:
        return [[2, -3], [-1, 2]]
    raise RootSystemError(f"No finite root system of type {label}")


def reflect(cartan: Sequence[Sequence[int]], i: int, root: Sequence[int]) -> tuple[int, ...]:
    """s_i(beta) = beta - (sum_j a_ij beta_j) alpha_i, with i zero-based."""
    pairing = sum(a * b for a, b in zip(cartan[i], root))
    coords = list(root)
    coords[i] -= pairing
    return tuple(coords)


@lru_cache(maxsize=None)
def _reflection_matrices(cartan: tuple[tuple[int, ...], ...]) -> tuple[np.ndarray, ...]:
    # column j of s_i is e_j - a_ij e_i
    rank = len(cartan)
    matrices = []
    for i in range(rank):
        matrix = np.eye(rank, dtype=np.int64)
        matrix[i, :] -= np.array(cartan[i], dtype=np.int64)
        matrix.setflags(write=False)
        matrices.append(matrix)
    return tuple(matrices)


@lru_cache(maxsize=None)
def _root_columns(roots: tuple[tuple[int, ...], ...]) -> np.ndarray:
    columns = np.array(roots, dtype=np.int64).T
    columns.setflags(write=False)
    return columns


@lru_cache(maxsize=None)
def _root_index(roots: tuple[tuple[int, ...], ...]) -> dict[tuple[int, ...], int]:
    return {root: index for index, root in enumerate(roots)}


class RootSystem(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str | None = None
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]

    @model_validator(mode="after")
    def cartan_is_generalized(self) -> "RootSystem":
        validate_cartan(self.cartan)
        return self

    @computed_field  # type: ignore[misc]
    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def positive_root_array(self) -> np.ndarray:
        """Positive roots as columns of a rank x N matrix."""
        return _root_columns(self.positive_roots)

    @property
    def simple_reflections(self) -> tuple[np.ndarray, ...]:
        return _reflection_matrices(self.cartan)

    @property
    def root_index(self) -> dict[tuple[int, ...], int]:
        return _root_index(self.positive_roots)

    def is_root(self, coords: Sequence[int]) -> bool:
        coords = tuple(coords)
        if coords in self.root_index:
            return True
        return tuple(-c for c in coords) in self.root_index

    def simple_root(self, i: int) -> Root:
        """alpha_i for 1-based i."""
        if not 1 <= i <= self.rank:
            raise RootSystemError(f"Simple index {i} out of range 1..{self.rank}")
        return Root(tuple(1 if j == i - 1 else 0 for j in range(self.rank)))

    @property
    def display_name(self) -> str:
        return self.label or f"cartan{[list(row) for row in self.cartan]}"


def validate_cartan(cartan: Sequence[Sequence[int]]) -> None:
    rank = len(cartan)
    if rank == 0:
        raise ValueError("Cartan matrix must have positive rank")
    for i, row in enumerate(cartan):
        if len(row) != rank:
            raise ValueError(f"Cartan matrix row {i + 1} has length {len(row)}, expected {rank}")
        if row[i] != 2:
            raise ValueError(f"Cartan diagonal entry ({i + 1},{i + 1}) must be 2")
        for j, entry in enumerate(row):
            if i == j:
                continue
            if entry > 0:
                raise ValueError(f"Cartan off-diagonal entry ({i + 1},{j + 1}) must be <= 0")
            if (entry == 0) != (cartan[j][i] == 0):
                raise ValueError(
                    f"Cartan entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) must vanish together"
                )


def _height_key(root: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    # alpha_1 sorts before alpha_2 within a height
    return sum(root), tuple(-c for c in root)


def positive_root_closure(
    cartan: Sequence[Sequence[int]], caps: ResourceCaps = RESOURCE_CAPS
) -> list[Root]:
    rank = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    found = set(simple)
    queue = deque(simple)
    while queue:
        root = queue.popleft()
        for i in range(rank):
            if root == simple[i]:
                continue
            image = reflect(cartan, i, root)
            if any(c < 0 for c in image):
                raise RootSystemError(
                    f"Reflection s_{i + 1} sends positive {root} to mixed-sign vector {image}"
                )
            if image in found:
                continue
            found.add(image)
            if len(found) > caps.max_positive_roots:
                raise RootSystemError(
                    f"Positive-root closure exceeded {caps.max_positive_roots} roots; "
                    "the Cartan matrix is not of finite type"
                )
            queue.append(image)
    return [Root(root) for root in sorted(found, key=_height_key)]


def build_root_system(
    type_or_cartan: str | Sequence[Sequence[int]], caps: ResourceCaps = RESOURCE_CAPS
) -> RootSystem:
    label: str | None
    if isinstance(type_or_cartan, str):
        label = type_or_cartan.strip()
        cartan = cartan_matrix(label)
    else:
        label = None
        cartan = [list(row) for row in type_or_cartan]
    try:
        validate_cartan(cartan)
    except ValueError as e:
        raise RootSystemError(str(e))
    roots = positive_root_closure(cartan, caps)
    logger.debug(f"Built root system {label or cartan} with {len(roots)} positive roots")
    return RootSystem(
        label=label,
        cartan=tuple(tuple(row) for row in cartan),
        positive_roots=tuple(roots),
    )
