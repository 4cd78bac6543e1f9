__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

"""
Presentations of the fundamental groups of closed surfaces, and generic finite presentations.

Words over a presentation are tuples of signed 1-based generator indices: +k is the k-th generator
and -k its inverse. Commutators are [x, y] = x y x^-1 y^-1."""

from typing import Any, Dict, List, Optional, Sequence, Tuple
import dataclasses
import enum
import logging

import numpy as np

from src.errors import InputError

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


def free_reduce(word: Sequence[int]) -> Word:
    stack: List[int] = []
    for letter in word:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def invert_word(word: Sequence[int]) -> Word:
    return tuple(-letter for letter in reversed(word))


@dataclasses.dataclass(frozen=True)
class GroupPresentation:
    """
    Finite presentation, optionally marked with an orientation character.

    Args:
        generators (tuple): generator names.
        relators (tuple): relators as signed index words.
        marks (tuple): +1 / -1 per generator, or None if the presentation is unmarked.
    """

    generators: Tuple[str, ...]
    relators: Tuple[Word, ...]
    marks: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(tuple(int(e) for e in r) for r in self.relators))
        count = len(self.generators)
        if len(set(self.generators)) != count:
            raise InputError(f"Generator names must be unique: {self.generators}")
        for relator in self.relators:
            for letter in relator:
                if letter == 0 or abs(letter) > count:
                    raise InputError(f"Relator letter {letter} out of range for {count} generators.")
        if self.marks is not None:
            marks = tuple(int(mark) for mark in self.marks)
            if len(marks) != count or any(mark not in (1, -1) for mark in marks):
                raise InputError(f"Marks must be +1/-1 per generator, got {self.marks}.")
            object.__setattr__(self, "marks", marks)

    @property
    def n_generators(self) -> int:
        return len(self.generators)

    def index_of(self, name: str) -> int:
        try:
            return self.generators.index(name) + 1
        except ValueError as exc:
            raise InputError(f"Unknown generator {name!r}; known: {', '.join(self.generators)}") from exc

    def exponent_matrix(self) -> np.ndarray:
        """Relator-by-generator matrix of exponent sums, over arbitrary-precision integers."""

        matrix = np.zeros((len(self.relators), self.n_generators), dtype=object)
        for row, relator in enumerate(self.relators):
            for letter in relator:
                matrix[row, abs(letter) - 1] += 1 if letter > 0 else -1
        return matrix

    def deficiency(self) -> int:
        return self.n_generators - len(self.relators)

    def euler_characteristic(self) -> int:
        """Euler characteristic of the presentation 2-complex (one vertex)."""

        return 1 - self.n_generators + len(self.relators)

    def is_marked(self) -> bool:
        return self.marks is not None

    def is_orientable(self) -> bool:
        if self.marks is None:
            raise InputError("The presentation carries no orientation marking.")
        return all(mark == 1 for mark in self.marks)

    def format_word(self, word: Sequence[int]) -> str:
        tokens = []
        for letter in word:
            name = self.generators[abs(letter) - 1]
            tokens.append(name if letter > 0 else f"{name}^-1")
        return " ".join(tokens) if tokens else "1"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "generic",
            "generators": list(self.generators),
            "relators": [list(r) for r in self.relators],
            "marks": None if self.marks is None else list(self.marks),
        }


class SurfaceCase(enum.Enum):
    ORIENTABLE_I = "orientable"
    NON_ORIENTABLE_ODD_II = "nonorientable-odd"
    NON_ORIENTABLE_EVEN_III = "nonorientable-even"


@dataclasses.dataclass(frozen=True)
class SurfacePresentation:
    """
    The three standard presentations of the fundamental group of a closed surface.

    * case I: <a_1..a_2m | [a_1,a_2]...[a_{2m-1},a_2m]>, orientable of genus m.
    * case II: <c, a_1..a_2m | c^2 [a_1,a_2]...>, non-orientable of genus 2m+1.
    * case III: <u, v, a_1..a_2m | u v u v^-1 [a_1,a_2]...>, non-orientable of genus 2m+2.

    The distinguished element is 1, c and u respectively.
    """

    case: SurfaceCase
    m: int

    def __post_init__(self):
        if isinstance(self.case, str):
            try:
                object.__setattr__(self, "case", SurfaceCase(self.case))
            except ValueError as exc:
                raise InputError(f"Unknown surface case {self.case!r}.") from exc
        if not isinstance(self.m, int) or self.m < 0:
            raise InputError(f"Handle count m must be an integer >= 0, got {self.m}.")

    @property
    def prefix(self) -> Tuple[str, ...]:
        if self.case == SurfaceCase.NON_ORIENTABLE_ODD_II:
            return ("c",)
        if self.case == SurfaceCase.NON_ORIENTABLE_EVEN_III:
            return ("u", "v")
        return ()

    @property
    def generators(self) -> Tuple[str, ...]:
        return self.prefix + tuple(f"a{i}" for i in range(1, 2 * self.m + 1))

    def index_of(self, name: str) -> int:
        try:
            return self.generators.index(name) + 1
        except ValueError as exc:
            raise InputError(f"Unknown generator {name!r} for {self.describe()}.") from exc

    def a_index(self, i: int) -> int:
        """Signed-word index of a_i."""

        return len(self.prefix) + i

    @property
    def relator(self) -> Word:
        word: List[int] = []
        if self.case == SurfaceCase.NON_ORIENTABLE_ODD_II:
            word += [1, 1]
        elif self.case == SurfaceCase.NON_ORIENTABLE_EVEN_III:
            word += [1, 2, 1, -2]
        for pair in range(self.m):
            x, y = self.a_index(2 * pair + 1), self.a_index(2 * pair + 2)
            word += [x, y, -x, -y]
        return tuple(word)

    @property
    def delta_hat(self) -> Optional[str]:
        if self.case == SurfaceCase.NON_ORIENTABLE_ODD_II:
            return "c"
        if self.case == SurfaceCase.NON_ORIENTABLE_EVEN_III:
            return "u"
        return None

    @property
    def marks(self) -> Tuple[int, ...]:
        # v u v^-1 = u^-1 in case III, so v is the orientation-reversing generator there.
        reversing = {SurfaceCase.NON_ORIENTABLE_ODD_II: "c", SurfaceCase.NON_ORIENTABLE_EVEN_III: "v"}.get(self.case)
        return tuple(-1 if name == reversing else 1 for name in self.generators)

    def is_orientable(self) -> bool:
        return self.case == SurfaceCase.ORIENTABLE_I

    def genus(self) -> int:
        if self.case == SurfaceCase.ORIENTABLE_I:
            return self.m
        if self.case == SurfaceCase.NON_ORIENTABLE_ODD_II:
            return 2 * self.m + 1
        return 2 * self.m + 2

    def euler_characteristic(self) -> int:
        if self.case == SurfaceCase.ORIENTABLE_I:
            return 2 - 2 * self.m
        return 2 - self.genus()

    def as_group(self) -> GroupPresentation:
        return GroupPresentation(self.generators, (self.relator,), self.marks)

    def word(self, *tokens: str) -> Word:
        """Word from generator names, "x^-1" for inverses."""

        letters = []
        for token in tokens:
            name, _, power = token.partition("^")
            index = self.index_of(name)
            exponent = int(power) if power else 1
            letters += [index if exponent > 0 else -index] * abs(exponent)
        return tuple(letters)

    def describe(self) -> str:
        return f"{self.case.value} surface, m={self.m}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "surface",
            "case": self.case.value,
            "m": self.m,
            "generators": list(self.generators),
            "relators": [list(self.relator)],
            "marks": list(self.marks),
        }


def as_group(presentation) -> GroupPresentation:
    if isinstance(presentation, SurfacePresentation):
        return presentation.as_group()
    return presentation


def orientation_character(presentation, word: Sequence[int]) -> int:
    """
    Product of the orientation marks over the letters of a word.

    Raises:
        InputError: if the presentation carries no marking.
    """

    marks = presentation.marks
    if marks is None:
        raise InputError("Orientation character needs a marked presentation.")
    sign = 1
    for letter in word:
        sign *= marks[abs(letter) - 1]
    return sign
