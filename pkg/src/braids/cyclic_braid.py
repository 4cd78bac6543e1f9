__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

"""
The subgroup B_{Z_n} of B_n: braids whose permutation is a power of (1,n,...,2).

It is handled through its embedding in B_n, so braid equality in B_n decides everything here."""

from typing import Tuple
import dataclasses
import logging

from src.braids.braid_word import BraidWord, permutation_tuple
from src.braids.garside import equal
from src.braids.pure_braid import PureBraid, a_gen, alt_form_report, full_twist_report, g_word
from src.errors import InputError, MembershipError
from src.utils import Report

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ZnElement:
    n: int
    value: int = 0

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError(f"Modulus must be a positive integer, got {self.n}.")
        object.__setattr__(self, "value", int(self.value) % self.n)

    def _coerce(self, other) -> int:
        if isinstance(other, ZnElement):
            if other.n != self.n:
                raise InputError(f"Cannot combine residues mod {self.n} and mod {other.n}.")
            return other.value
        return int(other)

    def __add__(self, other) -> "ZnElement":
        return ZnElement(self.n, self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other) -> "ZnElement":
        return ZnElement(self.n, self.value - self._coerce(other))

    def __neg__(self) -> "ZnElement":
        return ZnElement(self.n, -self.value)

    def __mul__(self, scalar: int) -> "ZnElement":
        return ZnElement(self.n, self.value * int(scalar))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return f"{self.value} mod {self.n}"

    @classmethod
    def parse(cls, text: str) -> "ZnElement":
        value, _, modulus = text.partition("mod")
        try:
            return cls(int(modulus), int(value))
        except ValueError as exc:
            raise InputError(f"Expected '<m> mod <n>', got {text!r}") from exc


def cyclic_generator(n: int) -> Tuple[int, ...]:
    """(1,n,...,2) as a 0-based image tuple: k -> k - 1 mod n."""

    return tuple((k - 1) % n for k in range(n))


def cyclic_power(n: int, m: int) -> Tuple[int, ...]:
    return tuple((k - m) % n for k in range(n))


def cyclic_class(images: Tuple[int, ...]) -> int:
    """
    The m with images = (1,n,...,2)^m.

    Raises:
        MembershipError: if the permutation is not in the cyclic subgroup.
    """

    n = len(images)
    m = (0 - images[0]) % n
    if images != cyclic_power(n, m):
        raise MembershipError(f"Permutation {images} is not a power of (1,{n},...,2).")
    return m


@dataclasses.dataclass(frozen=True)
class CyclicBraid:
    """
    Element of B_{Z_n}, with its pi_2 class cached.

    Args:
        word (BraidWord): representative word in B_n.
    """

    word: BraidWord
    klass: ZnElement = dataclasses.field(init=False, compare=False)

    def __post_init__(self):
        m = cyclic_class(permutation_tuple(self.word))
        object.__setattr__(self, "klass", ZnElement(self.word.n, m))

    @property
    def n(self) -> int:
        return self.word.n

    @classmethod
    def g(cls, n: int) -> "CyclicBraid":
        return cls(g_word(n))

    @classmethod
    def identity(cls, n: int) -> "CyclicBraid":
        return cls(BraidWord.identity(n))

    def __mul__(self, other: "CyclicBraid") -> "CyclicBraid":
        return CyclicBraid(self.word * other.word)

    def inverse(self) -> "CyclicBraid":
        return CyclicBraid(self.word.inverse())

    def __pow__(self, exponent: int) -> "CyclicBraid":
        return CyclicBraid(self.word**exponent)

    def __str__(self) -> str:
        return str(self.word)


def pi2(b: CyclicBraid) -> ZnElement:
    return b.klass


def decompose(b: CyclicBraid) -> Tuple[PureBraid, int]:
    """
    Writes b = w g^m with w pure and 0 <= m <= n - 1.

    Returns:
        Tuple[PureBraid, int]: the pure part w and the exponent m = pi2(b).
    """

    m = pi2(b).value
    pure = PureBraid(b.word * g_word(b.n) ** (-m))
    return pure, m


def pi_compatible(word: BraidWord, images: Tuple[int, ...]) -> bool:
    """True if the permutation of the braid is the given 0-based image tuple."""

    return permutation_tuple(word) == tuple(images)


def relation_II_rhs(i: int, j: int, n: int) -> BraidWord:
    if j <= n - 1:
        return a_gen(i + 1, j + 1, n).word
    # j = n: A_{1,n} ... A_{n-1,n} A_{1,i+1} A_{n-1,n}^-1 ... A_{1,n}^-1
    conjugator = BraidWord.identity(n)
    for r in range(1, n):
        conjugator = conjugator * a_gen(r, n, n).word
    return conjugator * a_gen(1, i + 1, n).word * conjugator.inverse()


def verify_presentation(n: int) -> Report:
    """
    Checks relations (II) and (IV) of the presentation of B_{Z_n}, the two forms of A_{i,j}, and
    the classes pi2(g) = 1, pi2(A_{i,j}) = 0. Relation (I) is checked by check_relations_I.

    Args:
        n (int): number of strands, n >= 2.

    Returns:
        Report: one entry per instance.
    """

    if n < 2:
        raise InputError(f"verify_presentation needs n >= 2, got {n}.")
    report = Report(name=f"presentation_B_Z{n}", metadata={"n": n})
    g = g_word(n)
    report.add("pi2.g", pi2(CyclicBraid(g)).value == 1, (n,), g, "1")
    for j in range(2, n + 1):
        for i in range(1, j):
            a_ij = a_gen(i, j, n).word
            lhs = g * a_ij * g.inverse()
            rhs = relation_II_rhs(i, j, n)
            name = "II.shift" if j <= n - 1 else "II.wrap"
            report.add(name, equal(lhs, rhs), (i, j), lhs, rhs)
            report.add("pi2.A_ij", pi2(CyclicBraid(a_ij)).value == 0, (i, j), a_ij, "0")
    report.extend(full_twist_report(n))
    report.extend(alt_form_report(n))
    logger.info(f"B_Z{n} presentation: {report.count()} instances, {len(report.failures)} failures")
    return report

