"""Flag values as the commands receive them: literals, or `@path` to read a UTF-8 file."""

import json
from pathlib import Path

import click

from schubdeg.polyalg.ring import Ring, RingError
from schubdeg.roots.permutations import PermOneLine, parse_permutation
from schubdeg.roots.root_system import RootSystem, build_root_system
from schubdeg.roots.weyl import WeylElement, Word, element_from_word, parse_word


class InputError(Exception):
    pass


def read_argument(value: str) -> str:
    if not value.startswith("@"):
        return value
    path = Path(value[1:])
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"Cannot read {path}: {e.strerror}")


def root_system_argument(value: str) -> RootSystem:
    """A Cartan label such as "B2", or a JSON matrix given inline or as @file."""
    text = read_argument(value).strip()
    if text.startswith("["):
        try:
            matrix = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(f"Malformed Cartan matrix at position {e.pos}: {e.msg}")
        return build_root_system(matrix)
    return build_root_system(text)


def word_argument(value: str) -> Word:
    return parse_word(read_argument(value))


def element_argument(root_system: RootSystem, value: str) -> WeylElement:
    return element_from_word(root_system, word_argument(value))


def permutation_argument(value: str, n: int | None = None) -> PermOneLine:
    perm = parse_permutation(read_argument(value))
    if n is not None and len(perm) != n:
        raise InputError(f"Permutation {perm} does not have size {n}")
    return perm


def ring_argument(value: str) -> Ring:
    names = tuple(name.strip() for name in read_argument(value).split(",") if name.strip())
    if not names:
        raise InputError("The ring needs at least one variable")
    try:
        return Ring(names=names)
    except ValueError as e:
        raise RingError(str(e))


def _label(text: str) -> int | str:
    return int(text) if text.isdigit() else text


def positions_argument(value: str | None) -> list[tuple[int | str, ...]] | None:
    """Facet order for shelling checks: one facet per `;`, labels comma-separated."""
    if value is None:
        return None
    text = read_argument(value)
    return [
        tuple(_label(label.strip()) for label in facet.split(",") if label.strip())
        for facet in text.replace("\n", ";").split(";")
        if facet.strip()
    ]


class AtPath(click.ParamType):
    """Plain string parameter that documents the @path convention in --help."""

    name = "TEXT|@PATH"

    def convert(self, value, param, ctx):
        return value


def weights_argument(value: str | None, ring: Ring) -> list[tuple[int, ...]] | None:
    """One weight vector per variable, `;`-separated: "1,0;0,1;1,1"."""
    if value is None:
        return None
    weights = []
    for position, item in enumerate(read_argument(value).split(";"), start=1):
        try:
            weights.append(tuple(int(c) for c in item.split(",")))
        except ValueError:
            raise InputError(f"Weight {position} is not a list of integers: {item.strip()!r}")
    if len(weights) != ring.nvars:
        raise InputError(f"{len(weights)} weights for {ring.nvars} variables")
    return weights
