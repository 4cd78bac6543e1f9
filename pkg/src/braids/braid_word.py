__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

from typing import Iterable, List, Sequence, Tuple
from sympy.combinatorics import Permutation
import dataclasses
import logging

from src.errors import InputError

logger = logging.getLogger(__name__)

# Permutations are handled in two shapes: sympy Permutations at the API boundary, and 0-based
# image tuples (p[k] = image of k) in the inner loops. Products are read left to right in both:
# (p * q)(k) = q(p(k)).


def _free_reduce(letters: Iterable[int]) -> Tuple[int, ...]:
    stack: List[int] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """
    Word in the Artin generators of B_n. Letter +i stands for sigma_i, -i for its inverse.
    Words are freely reduced on construction.

    Args:
        n (int): number of strands.
        letters (tuple): signed generator indices, 1 <= |letter| <= n - 1.
    """

    n: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError(f"Strand count must be an integer >= 1, got {self.n}.")
        letters = tuple(int(e) for e in self.letters)
        for e in letters:
            if e == 0 or abs(e) > self.n - 1:
                raise InputError(f"Letter {e} is out of range for B_{self.n}.")
        object.__setattr__(self, "letters", _free_reduce(letters))

    @classmethod
    def identity(cls, n: int) -> "BraidWord":
        return cls(n, ())

    @classmethod
    def sigma(cls, i: int, n: int, power: int = 1) -> "BraidWord":
        sign = 1 if power >= 0 else -1
        return cls(n, (sign * i,) * abs(power))

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        """Parses the text format "n=<k> <letter> <letter> ...". """

        tokens = text.split()
        if not tokens or not tokens[0].startswith("n="):
            raise InputError(f"Braid word must start with 'n=<k>': {text!r}")
        try:
            n = int(tokens[0][2:])
            letters = tuple(int(token) for token in tokens[1:])
        except ValueError as exc:
            raise InputError(f"Could not parse braid word {text!r}: {exc}") from exc
        return cls(n, letters)

    def __str__(self) -> str:
        return " ".join([f"n={self.n}"] + [str(e) for e in self.letters])

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.n != self.n:
            raise InputError(f"Cannot multiply braids on {self.n} and {other.n} strands.")
        left, right = self.letters, other.letters
        # Cancel across the junction, both sides are already reduced.
        cut = 0
        while cut < min(len(left), len(right)) and left[len(left) - 1 - cut] == -right[cut]:
            cut += 1
        return BraidWord(self.n, left[: len(left) - cut] + right[cut:])

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-e for e in reversed(self.letters)))

    def __pow__(self, exponent: int) -> "BraidWord":
        base = self if exponent >= 0 else self.inverse()
        result = BraidWord.identity(self.n)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def conjugate(self, by: "BraidWord") -> "BraidWord":
        """Returns by * self * by^-1."""

        return by * self * by.inverse()

    def is_empty(self) -> bool:
        return len(self.letters) == 0


def product(words: Sequence[BraidWord], n: int) -> BraidWord:
    result = BraidWord.identity(n)
    for word in words:
        result = result * word
    return result


def permutation_tuple(w: BraidWord) -> Tuple[int, ...]:
    """0-based image tuple of the permutation of w: strand starting at position k ends at p[k]."""

    # Track which strand sits at each position, then invert.
    at_position = list(range(w.n))
    for e in w.letters:
        i = abs(e) - 1
        at_position[i], at_position[i + 1] = at_position[i + 1], at_position[i]
    images = [0] * w.n
    for position, strand in enumerate(at_position):
        images[strand] = position
    return tuple(images)


def permutation(w: BraidWord) -> Permutation:
    """
    Permutation of a braid. sigma_i maps to the transposition (i, i+1), and the product of braids
    goes to the left-to-right product of permutations.

    Args:
        w (BraidWord): the braid.

    Returns:
        Permutation: sympy permutation on {0, ..., n-1}.
    """

    return Permutation(list(permutation_tuple(w)))


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if e > 0 else -1 for e in w.letters)


def permutation_braid(images: Sequence[int]) -> BraidWord:
    """
    Positive permutation braid of a 0-based image tuple, as a reduced word obtained by bubble sort.
    Every pair of strands crosses at most once.
    """

    n = len(images)
    targets = list(images)
    letters = []
    swapped = True
    while swapped:
        swapped = False
        for position in range(n - 1):
            if targets[position] > targets[position + 1]:
                targets[position], targets[position + 1] = targets[position + 1], targets[position]
                letters.append(position + 1)
                swapped = True
    return BraidWord(n, tuple(letters))


def format_cycles(perm) -> str:
    """One-line, 1-based cycle notation, e.g. "(1,4,3,2)". Identity prints as "()". """

    if isinstance(perm, Permutation):
        perm = tuple(perm.array_form)
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        cycles.append("(" + ",".join(str(i + 1) for i in cycle) + ")")
    return "".join(cycles) if cycles else "()"


def parse_cycles(text: str, n: int) -> Tuple[int, ...]:
    """Inverse of format_cycles."""

    images = list(range(n))
    body = text.replace(" ", "")
    if body in ("", "()"):
        return tuple(images)
    for chunk in body.strip("()").split(")("):
        try:
            cycle = [int(token) - 1 for token in chunk.split(",")]
        except ValueError as exc:
            raise InputError(f"Bad cycle notation {text!r}") from exc
        for position, point in enumerate(cycle):
            if not 0 <= point < n:
                raise InputError(f"Cycle entry {point + 1} out of range for degree {n}.")
            images[point] = cycle[(position + 1) % len(cycle)]
    if sorted(images) != list(range(n)):
        raise InputError(f"{text!r} is not a permutation of degree {n}.")
    return tuple(images)
