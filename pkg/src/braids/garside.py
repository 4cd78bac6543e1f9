__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

"""
Garside left normal form in the Artin braid groups.

A positive braid in which every pair of strands crosses at most once (a permutation braid, or
simple element) is determined by its permutation, so simple elements are stored as 0-based image
tuples. Every braid can be written uniquely as Delta^inf A_1 ... A_r with A_1 != Delta, A_r != 1
and every pair (A_k, A_{k+1}) left-weighted: the starting set of A_{k+1} is contained in the
finishing set of A_k. Two words are equal in B_n iff their normal forms coincide."""

from typing import List, Sequence, Tuple
from sympy.combinatorics import Permutation
import dataclasses
import logging

from src.braids.braid_word import BraidWord, format_cycles, parse_cycles, permutation_braid
from src.errors import InputError

logger = logging.getLogger(__name__)

Simple = Tuple[int, ...]


def identity_simple(n: int) -> Simple:
    return tuple(range(n))


def delta_simple(n: int) -> Simple:
    return tuple(n - 1 - k for k in range(n))


def tau(simple: Simple) -> Simple:
    """Conjugation by the half twist: Delta^-1 A Delta. An involution."""

    n = len(simple)
    return tuple(n - 1 - simple[n - 1 - k] for k in range(n))


def starting_set(simple: Simple) -> List[int]:
    """Generators sigma_i (0-based i) that are left prefixes of the simple element."""

    return [i for i in range(len(simple) - 1) if simple[i] > simple[i + 1]]


def finishing_set(simple: Simple) -> List[int]:
    """Generators sigma_i (0-based i) that are right suffixes of the simple element."""

    inverse = _invert(simple)
    return [i for i in range(len(simple) - 1) if inverse[i] > inverse[i + 1]]


def _invert(simple: Sequence[int]) -> List[int]:
    inverse = [0] * len(simple)
    for k, image in enumerate(simple):
        inverse[image] = k
    return inverse


def left_weight(a: Simple, b: Simple) -> Tuple[Simple, Simple]:
    """
    Turns the pair (A, B) into the left-weighted pair (A', B') with A'B' = AB, by moving every
    generator of the starting set of B that is not in the finishing set of A across.

    Args:
        a (Simple): left factor.
        b (Simple): right factor.

    Returns:
        Tuple[Simple, Simple]: the left-weighted pair.
    """

    n = len(a)
    a_images = list(a)
    a_inverse = _invert(a)
    b_images = list(b)
    moved = True
    while moved:
        moved = False
        for i in range(n - 1):
            # i in S(B) and i not in F(A)
            if b_images[i] > b_images[i + 1] and a_inverse[i] < a_inverse[i + 1]:
                # A <- A sigma_i: swap the values i and i+1 in A.
                p, q = a_inverse[i], a_inverse[i + 1]
                a_images[p], a_images[q] = a_images[q], a_images[p]
                a_inverse[i], a_inverse[i + 1] = q, p
                # B <- sigma_i^-1 B: swap the positions i and i+1 in B.
                b_images[i], b_images[i + 1] = b_images[i + 1], b_images[i]
                moved = True
    return tuple(a_images), tuple(b_images)


@dataclasses.dataclass(frozen=True)
class GarsideNormalForm:
    """
    Left normal form Delta^inf A_1 ... A_r.

    Args:
        n (int): number of strands.
        inf (int): power of the half twist.
        factors (tuple): left-weighted simple factors, none equal to the identity or to Delta.
    """

    n: int
    inf: int
    factors: Tuple[Simple, ...]

    @classmethod
    def from_word(cls, word: BraidWord) -> "GarsideNormalForm":
        n = word.n
        if n == 1:
            return cls(1, 0, ())
        # sigma_i^-1 = Delta^-1 Y_i with Y_i simple. Pushing all the Delta^-1 to the front applies
        # tau to each simple once per negative letter standing after it.
        delta = delta_simple(n)
        simples = []
        negatives_after = 0
        for e in reversed(word.letters):
            i = abs(e) - 1
            if e > 0:
                images = list(range(n))
                images[i], images[i + 1] = i + 1, i
            else:
                # Y = Delta sigma_i^-1: images k -> s_i(Delta(k)).
                images = [_swap(delta[k], i) for k in range(n)]
            simple = tuple(images)
            if negatives_after % 2 == 1:
                simple = tau(simple)
            simples.append(simple)
            if e < 0:
                negatives_after += 1
        simples.reverse()
        builder = _NormalFormBuilder(n, -negatives_after)
        for simple in simples:
            builder.multiply(simple)
        return builder.result()

    def to_word(self) -> BraidWord:
        """Canonical braid word Delta^inf A_1 ... A_r."""

        delta_word = permutation_braid(delta_simple(self.n))
        word = delta_word**self.inf
        for factor in self.factors:
            word = word * permutation_braid(factor)
        return word

    def factor_permutations(self) -> List[Permutation]:
        return [Permutation(list(factor)) for factor in self.factors]

    def __str__(self) -> str:
        return f"inf={self.inf} | " + " ".join(format_cycles(factor) for factor in self.factors)

    @classmethod
    def parse(cls, text: str, n: int) -> "GarsideNormalForm":
        head, _, tail = text.partition("|")
        head = head.strip()
        if not head.startswith("inf="):
            raise InputError(f"Normal form must start with 'inf=<p>': {text!r}")
        inf = int(head[4:])
        chunks = tail.split()
        return cls(n, inf, tuple(parse_cycles(chunk, n) for chunk in chunks))

    def is_left_weighted(self) -> bool:
        for a, b in zip(self.factors, self.factors[1:]):
            if not set(starting_set(b)) <= set(finishing_set(a)):
                return False
        return True


def _swap(value: int, i: int) -> int:
    if value == i:
        return i + 1
    if value == i + 1:
        return i
    return value


class _NormalFormBuilder:
    """Right multiplication of a normal form by simple elements, one backward sweep each."""

    def __init__(self, n: int, inf: int):
        self.n = n
        self.inf = inf
        self.factors: List[Simple] = []
        self.identity = identity_simple(n)
        self.delta = delta_simple(n)

    def multiply(self, simple: Simple) -> None:
        if simple == self.identity:
            return
        if simple == self.delta:
            # A_1 ... A_r Delta = Delta tau(A_1) ... tau(A_r)
            self.inf += 1
            self.factors = [tau(factor) for factor in self.factors]
            return
        self.factors.append(simple)
        for k in range(len(self.factors) - 2, -1, -1):
            a, b = left_weight(self.factors[k], self.factors[k + 1])
            if a == self.factors[k] and b == self.factors[k + 1]:
                break
            self.factors[k], self.factors[k + 1] = a, b
        while self.factors and self.factors[0] == self.delta:
            self.factors.pop(0)
            self.inf += 1
        while self.factors and self.factors[-1] == self.identity:
            self.factors.pop()

    def result(self) -> GarsideNormalForm:
        return GarsideNormalForm(self.n, self.inf, tuple(self.factors))


def normal_form(word: BraidWord) -> GarsideNormalForm:
    return GarsideNormalForm.from_word(word)


def half_twist(n: int) -> BraidWord:
    """The half twist Delta as a positive word."""

    return permutation_braid(delta_simple(n))


def equal(w1: BraidWord, w2: BraidWord) -> bool:
    """
    Decides equality in B_n by comparing Garside normal forms.

    Raises:
        InputError: if the strand counts differ.
    """

    if w1.n != w2.n:
        raise InputError(f"Cannot compare braids on {w1.n} and {w2.n} strands.")
    if w1.letters == w2.letters:
        return True
    return normal_form(w1 * w2.inverse()) == GarsideNormalForm(w1.n, 0, ())


def is_identity(word: BraidWord) -> bool:
    return word.is_empty() or normal_form(word) == GarsideNormalForm(word.n, 0, ())
