from collections import deque
from functools import lru_cache
from typing import Iterable, NewType, Sequence

import numpy as np
import structlog
from pydantic import BaseModel, ConfigDict

from schubdeg.roots.root_system import Root, RootSystem

logger = structlog.get_logger("schubdeg.roots.weyl")

# 1-based simple indices, read left to right as a product s_{q1} s_{q2} ... s_{qk}.
Word = NewType("Word", tuple[int, ...])


class WeylElementError(Exception):
    pass


def parse_word(text: str) -> Word:
    """Parse "1,2,1" (or the empty string for the identity)."""
    text = text.strip()
    if text in ("", "()", "e"):
        return Word(())
    letters = []
    for position, item in enumerate(text.split(","), start=1):
        item = item.strip()
        if not item.isdigit():
            raise WeylElementError(f"Word letter {position} is not a positive integer: {item!r}")
        letters.append(int(item))
    return Word(tuple(letters))


def format_word(word: Sequence[int]) -> str:
    return ",".join(str(letter) for letter in word)


class WeylElement:
    """
    A Weyl group element stored as its integer matrix on the root lattice.
    Two elements are equal iff their matrices are; the optional word is only
    a representative.
    """

    __slots__ = ("root_system", "matrix", "word", "_length", "_hash")

    def __init__(
        self, root_system: RootSystem, matrix: np.ndarray, word: Sequence[int] | None = None
    ):
        if matrix.shape != (root_system.rank, root_system.rank):
            raise WeylElementError(
                f"Matrix shape {matrix.shape} does not match rank {root_system.rank}"
            )
        matrix = np.array(matrix, dtype=np.int64)
        matrix.setflags(write=False)
        self.root_system = root_system
        self.matrix = matrix
        self.word = Word(tuple(word)) if word is not None else None
        self._length: int | None = None
        self._hash = hash((root_system.cartan, matrix.tobytes()))

    @classmethod
    def identity(cls, root_system: RootSystem) -> "WeylElement":
        return cls(root_system, np.eye(root_system.rank, dtype=np.int64), ())

    @property
    def rank(self) -> int:
        return self.root_system.rank

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.root_system.cartan == other.root_system.cartan and bool(
            np.array_equal(self.matrix, other.matrix)
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"WeylElement({self.root_system.display_name}, word={self.reduced_word})"

    def _check_compatible(self, other: "WeylElement") -> None:
        if self.rank != other.rank or self.root_system.cartan != other.root_system.cartan:
            raise WeylElementError(
                f"Elements of {self.root_system.display_name} and "
                f"{other.root_system.display_name} cannot be combined"
            )

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        self._check_compatible(other)
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return WeylElement(self.root_system, self.matrix @ other.matrix, word)

    def times_simple(self, i: int) -> "WeylElement":
        """Right multiplication by s_i."""
        self._check_letter(i)
        word = self.word + (i,) if self.word is not None else None
        return WeylElement(
            self.root_system, self.matrix @ self.root_system.simple_reflections[i - 1], word
        )

    def simple_times(self, i: int) -> "WeylElement":
        """Left multiplication by s_i."""
        self._check_letter(i)
        word = (i,) + self.word if self.word is not None else None
        return WeylElement(
            self.root_system, self.root_system.simple_reflections[i - 1] @ self.matrix, word
        )

    def _check_letter(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise WeylElementError(f"Simple index {i} out of range 1..{self.rank}")

    def act(self, root: Sequence[int]) -> Root:
        if len(root) != self.rank:
            raise WeylElementError(f"Root {tuple(root)} does not have rank {self.rank}")
        image = self.matrix @ np.array(root, dtype=np.int64)
        return Root(tuple(int(c) for c in image))

    @property
    def length(self) -> int:
        if self._length is None:
            images = self.matrix @ self.root_system.positive_root_array
            self._length = int((images < 0).any(axis=0).sum())
        return self._length

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self.matrix, np.eye(self.rank, dtype=np.int64)))

    def has_right_descent(self, i: int) -> bool:
        """w s_i < w, equivalently w(alpha_i) is negative."""
        self._check_letter(i)
        return bool((self.matrix[:, i - 1] < 0).any())

    @property
    def right_descents(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.rank + 1) if self.has_right_descent(i))

    @property
    def reduced_word(self) -> Word:
        return canonical_reduced_word(self)

    def inverse(self) -> "WeylElement":
        return word_eval(self.root_system, tuple(reversed(self.reduced_word))).element


@lru_cache(maxsize=None)
def canonical_reduced_word(element: WeylElement) -> Word:
    """Strip the smallest right descent until the identity is reached."""
    letters = []
    current = element
    while not current.is_identity:
        i = current.right_descents[0]
        letters.append(i)
        current = current.times_simple(i)
    return Word(tuple(reversed(letters)))


class WordEvaluation(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    word: tuple[int, ...]
    element: WeylElement
    length: int
    is_reduced: bool


def word_eval(root_system: RootSystem, word: Iterable[int]) -> WordEvaluation:
    word = tuple(word)
    element = WeylElement.identity(root_system)
    for letter in word:
        element = element.times_simple(letter)
    return WordEvaluation(
        word=word,
        element=element,
        length=element.length,
        is_reduced=len(word) == element.length,
    )


def element_from_word(root_system: RootSystem, word: Iterable[int]) -> WeylElement:
    return word_eval(root_system, word).element


def weyl_act(element: WeylElement, root: Sequence[int]) -> Root:
    return element.act(root)


def longest_element(root_system: RootSystem) -> WeylElement:
    """Right-multiply by ascents until none remain."""
    element = WeylElement.identity(root_system)
    while True:
        ascents = [i for i in range(1, root_system.rank + 1) if not element.has_right_descent(i)]
        if not ascents:
            return element
        element = element.times_simple(ascents[0])


def weyl_group_elements(root_system: RootSystem) -> list[WeylElement]:
    """All elements, sorted by length then by canonical reduced word."""
    identity = WeylElement.identity(root_system)
    seen = {identity}
    queue = deque([identity])
    while queue:
        element = queue.popleft()
        for i in range(1, root_system.rank + 1):
            if element.has_right_descent(i):
                continue
            successor = element.times_simple(i)
            if successor not in seen:
                seen.add(successor)
                queue.append(successor)
    logger.debug(f"Enumerated {len(seen)} elements of {root_system.display_name}")
    return sorted(seen, key=lambda e: (e.length, e.reduced_word))
