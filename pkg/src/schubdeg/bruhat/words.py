from functools import lru_cache
from typing import Iterable

import structlog

from schubdeg.roots.root_system import RootSystem
from schubdeg.roots.weyl import WeylElement, Word

logger = structlog.get_logger("schubdeg.bruhat.words")


@lru_cache(maxsize=None)
def _reduced_words(element: WeylElement) -> frozenset[tuple[int, ...]]:
    if element.is_identity:
        return frozenset({()})
    words = set()
    for i in element.right_descents:
        for prefix in _reduced_words(element.times_simple(i)):
            words.add(prefix + (i,))
    return frozenset(words)


def reduced_words(element: WeylElement) -> list[Word]:
    """Every reduced word of the element, in lexicographic order."""
    return [Word(word) for word in sorted(_reduced_words(element))]


@lru_cache(maxsize=None)
def count_reduced_words(element: WeylElement) -> int:
    """Independent count by the same descent recursion, without materializing words."""
    if element.is_identity:
        return 1
    return sum(count_reduced_words(element.times_simple(i)) for i in element.right_descents)


def demazure_product(root_system: RootSystem, word: Iterable[int]) -> WeylElement:
    """0-Hecke fold: multiply by s_i only when the length goes up."""
    element = WeylElement.identity(root_system)
    for letter in word:
        if not element.has_right_descent(letter):
            element = element.times_simple(letter)
    return element
