__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

from typing import Callable, Dict, Iterator, List, Tuple
import dataclasses
import itertools
import logging

from src.braids.braid_word import BraidWord, exponent_sum, permutation_tuple, product
from src.braids.garside import equal
from src.errors import DomainError, InputError
from src.utils import Report

logger = logging.getLogger(__name__)


def is_pure(word: BraidWord) -> bool:
    return permutation_tuple(word) == tuple(range(word.n))


@dataclasses.dataclass(frozen=True)
class PureBraid:
    word: BraidWord

    def __post_init__(self):
        if not is_pure(self.word):
            raise DomainError(f"Braid {self.word} is not pure.")

    @property
    def n(self) -> int:
        return self.word.n

    def __mul__(self, other: "PureBraid") -> "PureBraid":
        return PureBraid(self.word * other.word)

    def inverse(self) -> "PureBraid":
        return PureBraid(self.word.inverse())


def _check_indices(i: int, j: int, n: int) -> None:
    if not (1 <= i < j <= n):
        raise InputError(f"A_(i,j) needs 1 <= i < j <= n, got i={i}, j={j}, n={n}.")


def a_gen(i: int, j: int, n: int) -> PureBraid:
    """
    The pure braid generator A_{i,j} = sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^-1 ... sigma_{j-1}^-1.

    Args:
        i (int): first strand, 1-based.
        j (int): second strand, i < j <= n.
        n (int): number of strands.

    Returns:
        PureBraid: the generator.
    """

    _check_indices(i, j, n)
    prefix = tuple(range(j - 1, i, -1))
    letters = prefix + (i, i) + tuple(-e for e in reversed(prefix))
    return PureBraid(BraidWord(n, letters))


def a_gen_alt(i: int, j: int, n: int) -> PureBraid:
    """Alternative form sigma_i^-1 ... sigma_{j-2}^-1 sigma_{j-1}^2 sigma_{j-2} ... sigma_i."""

    _check_indices(i, j, n)
    prefix = tuple(-e for e in range(i, j - 1))
    letters = prefix + (j - 1, j - 1) + tuple(-e for e in reversed(prefix))
    return PureBraid(BraidWord(n, letters))


def epsilon(p) -> int:
    """
    Evaluation homomorphism P_n -> Z sending every A_{i,j} to 1, computed as half the exponent sum.

    Raises:
        DomainError: if the braid is not pure.
    """

    word = p.word if isinstance(p, PureBraid) else p
    if not is_pure(word):
        raise DomainError(f"epsilon is only defined on pure braids, got {word}.")
    total = exponent_sum(word)
    assert total % 2 == 0, "Pure braids have even exponent sum."
    return total // 2


def g_word(n: int) -> BraidWord:
    """g = sigma_1 ... sigma_{n-1}."""

    return BraidWord(n, tuple(range(1, n)))


def full_twist(n: int) -> PureBraid:
    """Delta_n^2 as the ordered product over j = 2..n, i = 1..j-1 of A_{i,j}."""

    if n < 2:
        raise InputError(f"The full twist needs n >= 2, got {n}.")
    return PureBraid(product([a_gen(i, j, n).word for j in range(2, n + 1) for i in range(1, j)], n))


def _word(*factors: Tuple[int, int, int], n: int) -> BraidWord:
    """Product of A_{i,j}^{sign} for (i, j, sign) triples."""

    return product([a_gen(i, j, n).word ** sign for i, j, sign in factors], n)


# Relation (I): A_{r,s}^-1 A_{i,j} A_{r,s} for the four admissible index patterns.
RELATION_I_CASES: Dict[str, Tuple[Callable, Callable]] = {
    "I.commute": (
        lambda r, s, i, j: (r < s < i < j) or (i < r < s < j),
        lambda r, s, i, j, n: _word((i, j, 1), n=n),
    ),
    "I.s_equals_i": (
        lambda r, s, i, j: r < i == s < j,
        lambda r, s, i, j, n: _word((r, j, 1), (i, j, 1), (r, j, -1), n=n),
    ),
    "I.r_equals_i": (
        lambda r, s, i, j: i == r < s < j,
        lambda r, s, i, j, n: _word((r, j, 1), (s, j, 1), (i, j, 1), (s, j, -1), (r, j, -1), n=n),
    ),
    "I.interleaved": (
        lambda r, s, i, j: r < i < s < j,
        lambda r, s, i, j, n: _word(
            (r, j, 1),
            (s, j, 1),
            (r, j, -1),
            (s, j, -1),
            (i, j, 1),
            (s, j, 1),
            (r, j, 1),
            (s, j, -1),
            (r, j, -1),
            n=n,
        ),
    ),
}


def relation_I_instances(n: int) -> Iterator[Tuple[str, Tuple[int, int, int, int]]]:
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    for (r, s), (i, j) in itertools.product(pairs, pairs):
        for name, (admissible, _) in RELATION_I_CASES.items():
            if admissible(r, s, i, j):
                yield name, (r, s, i, j)


def check_relations_I(n: int) -> Report:
    """
    Checks every instance of relation (I) by braid equality.

    Args:
        n (int): number of strands, n >= 2.

    Returns:
        Report: one entry per (r, s, i, j) instance. The per-case instance counts are stored in the
        metadata, so vacuous cases show up with a count of 0.
    """

    report = Report(name=f"relations_I(n={n})", metadata={"n": n})
    counts: Dict[str, int] = {name: 0 for name in RELATION_I_CASES}
    for name, (r, s, i, j) in relation_I_instances(n):
        a_rs = a_gen(r, s, n).word
        lhs = a_rs.inverse() * a_gen(i, j, n).word * a_rs
        rhs = RELATION_I_CASES[name][1](r, s, i, j, n)
        report.add(name, equal(lhs, rhs), (r, s, i, j), lhs, rhs)
        counts[name] += 1
    report.metadata["instances_per_case"] = counts
    logger.debug(f"Relation (I) on {n} strands: {counts}")
    return report


def alt_form_report(n: int) -> Report:
    report = Report(name=f"a_gen_alternative_form(n={n})", metadata={"n": n})
    for j in range(2, n + 1):
        for i in range(1, j):
            lhs, rhs = a_gen(i, j, n).word, a_gen_alt(i, j, n).word
            report.add("A_ij.alt_form", equal(lhs, rhs), (i, j), lhs, rhs)
    return report


def full_twist_report(n: int) -> Report:
    report = Report(name=f"full_twist(n={n})", metadata={"n": n})
    twist = full_twist(n).word
    g_power = g_word(n) ** n
    report.add("IV.g^n", equal(g_power, twist), (n,), g_power, twist)
    value = epsilon(full_twist(n))
    report.add("epsilon.full_twist", value == n * (n - 1) // 2, (n,), str(value), str(n * (n - 1) // 2))
    return report


def all_a_gens(n: int) -> List[Tuple[int, int]]:
    return [(i, j) for j in range(2, n + 1) for i in range(1, j)]
