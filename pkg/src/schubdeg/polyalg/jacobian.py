from itertools import combinations
from typing import Sequence

import structlog
from sympy.polys.matrices import DomainMatrix

from schubdeg.config import RESOURCE_CAPS, ResourceCaps
from schubdeg.polyalg.groebner import ResourceCapExceededError
from schubdeg.polyalg.ideal import Ideal
from schubdeg.polyalg.ring import MPoly, Ring

logger = structlog.get_logger("schubdeg.polyalg.jacobian")


def jacobian_matrix(ring: Ring, polys: Sequence[MPoly]) -> list[list[MPoly]]:
    return [[poly.partial_derivative(name) for name in ring.names] for poly in polys]


def minors(
    ring: Ring, matrix: list[list[MPoly]], size: int, caps: ResourceCaps = RESOURCE_CAPS
) -> list[MPoly]:
    """All nonzero size x size minors, via fraction-free determinants over Q[vars]."""
    if size > caps.max_minor_size:
        raise ResourceCapExceededError(
            f"Minors of size {size} exceed max_minor_size={caps.max_minor_size}"
        )
    if size == 0:
        return [ring.one()]
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if size > rows or size > cols:
        return []
    domain = ring.sympy_ring.to_domain()
    converted = [[entry.element for entry in row] for row in matrix]
    found: list[MPoly] = []
    for row_set in combinations(range(rows), size):
        for col_set in combinations(range(cols), size):
            block = [[converted[i][j] for j in col_set] for i in row_set]
            determinant = DomainMatrix(block, (size, size), domain).det()
            minor = MPoly.wrap(ring, determinant)
            if minor and minor not in found:
                found.append(minor)
    return found


def jacobian_singular_ideal(
    ideal: Ideal, codimension: int | None = None, caps: ResourceCaps = RESOURCE_CAPS
) -> Ideal:
    """I + (c x c minors of the Jacobian of the generators of I)."""
    c = ideal.codimension() if codimension is None else codimension
    generators = list(ideal.generators)
    found = minors(ideal.ring, jacobian_matrix(ideal.ring, generators), c, caps)
    logger.debug(f"Jacobian ideal uses {len(found)} minors of size {c}")
    return Ideal(ideal.ring, generators + found)
