__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

"""
The free Z_4k action on the torus R^2 / Z^2 whose orbit space is the Klein bottle, in exact
rational arithmetic.

tau(a, b) = (-a, a + b + 1/4k). Its powers are tau^i(a, b) = (a, b + i/4k) for i even and
(-a, a + b + i/4k) for i odd. The lifts of tau to R^2 are affine maps, which also encode the
loops u and v of the Klein bottle: the lift of a loop from x_0 ends at D x_0 for its deck map D."""

from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union
import dataclasses
import logging

import numpy as np

from src.errors import InputError
from src.utils import Report

logger = logging.getLogger(__name__)

Number = Union[int, float, str, Fraction]


def _fraction(value: Number) -> Fraction:
    if isinstance(value, float):
        return Fraction(value).limit_denominator(10**9)
    return Fraction(value)


@dataclasses.dataclass(frozen=True)
class TorusPoint:
    """Point of R^2 / Z^2, both coordinates reduced to [0, 1)."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = _fraction(self.a), _fraction(self.b)
        object.__setattr__(self, "a", a - (a.numerator // a.denominator))
        object.__setattr__(self, "b", b - (b.numerator // b.denominator))

    def as_floats(self) -> Tuple[float, float]:
        return float(self.a), float(self.b)

    def __str__(self) -> str:
        return f"({self.a}, {self.b})"


def tau_power(point: TorusPoint, i: int, k: int) -> TorusPoint:
    """tau^i(point) for the Z_4k action."""

    n = 4 * k
    i = i % n
    shift = Fraction(i, n)
    if i % 2 == 0:
        return TorusPoint(point.a, point.b + shift)
    return TorusPoint(-point.a, point.a + point.b + shift)


def orbit(point: TorusPoint, k: int) -> Tuple[TorusPoint, ...]:
    return tuple(tau_power(point, i, k) for i in range(4 * k))


@dataclasses.dataclass(frozen=True)
class DeckMap:
    """
    Affine map of R^2: (a, b) -> M (a, b) + t, with M integral and t rational.

    Args:
        matrix (tuple): ((m00, m01), (m10, m11)).
        translation (tuple): (t0, t1).
    """

    matrix: Tuple[Tuple[int, int], Tuple[int, int]]
    translation: Tuple[Fraction, Fraction]

    def __call__(self, point: Sequence[Number]) -> Tuple[Fraction, Fraction]:
        a, b = _fraction(point[0]), _fraction(point[1])
        (m00, m01), (m10, m11) = self.matrix
        return (m00 * a + m01 * b + self.translation[0], m10 * a + m11 * b + self.translation[1])

    def compose(self, other: "DeckMap") -> "DeckMap":
        """self o other."""

        (a00, a01), (a10, a11) = self.matrix
        (b00, b01), (b10, b11) = other.matrix
        matrix = ((a00 * b00 + a01 * b10, a00 * b01 + a01 * b11), (a10 * b00 + a11 * b10, a10 * b01 + a11 * b11))
        return DeckMap(matrix, self(other.translation))

    def inverse(self) -> "DeckMap":
        (m00, m01), (m10, m11) = self.matrix
        det = m00 * m11 - m01 * m10
        assert det in (1, -1), "Deck maps are unimodular."
        inv = ((m11 * det, -m01 * det), (-m10 * det, m00 * det))
        (i00, i01), (i10, i11) = inv
        t0, t1 = self.translation
        return DeckMap(inv, (-(i00 * t0 + i01 * t1), -(i10 * t0 + i11 * t1)))

    def as_arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        return np.array(self.matrix, dtype=np.float64), np.array([float(x) for x in self.translation])


def identity_map() -> DeckMap:
    return DeckMap(((1, 0), (0, 1)), (Fraction(0), Fraction(0)))


def tau_lift(k: int) -> DeckMap:
    return DeckMap(((-1, 0), (1, 1)), (Fraction(0), Fraction(1, 4 * k)))


def loop_deck_map(loop: str, k: int) -> DeckMap:
    """
    Deck map of a Klein bottle loop. v lifts to tau itself, u to the translation by (1, -1/2), which
    is tau^2k followed by the lattice translation (1, -1).
    """

    if loop == "v":
        return tau_lift(k)
    if loop == "u":
        return DeckMap(((1, 0), (0, 1)), (Fraction(1), Fraction(-1, 2)))
    raise InputError(f"Unknown loop {loop!r}, expected 'u' or 'v'.")


def loop_shift(loop: str, k: int) -> int:
    """The m with lift endpoint tau^m(x_0), i.e. theta(u) = 2k and theta(v) = 1."""

    return 2 * k if loop == "u" else 1


def parse_loop_word(text: Union[str, Iterable[str]]) -> Tuple[Tuple[str, int], ...]:
    """"u v u v^-1" -> (("u", 1), ("v", 1), ("u", 1), ("v", -1))."""

    tokens = text.split() if isinstance(text, str) else list(text)
    letters = []
    for token in tokens:
        name, _, power = token.partition("^")
        if name not in ("u", "v"):
            raise InputError(f"Loop words are over u and v, got {token!r}.")
        exponent = int(power) if power else 1
        letters += [(name, 1 if exponent > 0 else -1)] * abs(exponent)
    return tuple(letters)


def word_deck_map(letters: Sequence[Tuple[str, int]], k: int) -> DeckMap:
    result = identity_map()
    for name, sign in letters:
        deck = loop_deck_map(name, k)
        result = result.compose(deck if sign > 0 else deck.inverse())
    return result


def lift_endpoints(k: int, basepoint: Sequence[Number] = (Fraction(1, 8), 0)) -> Report:
    """
    Checks exactly that the lift of u from x_0 ends at tau^2k(x_0) and the lift of v at tau(x_0),
    and that the lift of u v u v^-1 closes up.
    """

    x0 = TorusPoint(*basepoint)
    report = Report(name=f"lift_endpoints(k={k})", metadata={"k": k, "basepoint": [str(x0.a), str(x0.b)]})
    for loop in ("u", "v"):
        end = TorusPoint(*loop_deck_map(loop, k)((x0.a, x0.b)))
        expected = tau_power(x0, loop_shift(loop, k), k)
        report.add(f"lift_end.{loop}", end == expected, (k,), str(end), str(expected))
    relator = word_deck_map(parse_loop_word("u v u v^-1"), k)
    report.add("lift_end.uvuv^-1", relator == identity_map(), (k,), str(relator.matrix), "identity")
    return report


def check_free_action(k: int, trials: int = 1000, seed: int = 0, max_denominator: int = 97) -> Report:
    """
    Checks that tau^i(p) != tau^j(p) for all 0 <= i < j < 4k on random rational points, plus the
    points with a in {0, 1/2} where the two orbit circles of the annulus model coincide.

    Returns:
        Report: one entry per point, failing entries name the colliding powers.
    """

    if k < 1:
        raise InputError(f"k must be >= 1, got {k}.")
    rng = np.random.default_rng(seed)
    points = [TorusPoint(Fraction(1, 2), 0), TorusPoint(0, 0), TorusPoint(Fraction(1, 2), Fraction(1, 4 * k))]
    for _ in range(trials):
        q = int(rng.integers(1, max_denominator + 1))
        points.append(TorusPoint(Fraction(int(rng.integers(0, q)), q), Fraction(int(rng.integers(0, q)), q)))
    report = Report(name=f"free_action(k={k})", metadata={"k": k, "trials": trials, "seed": seed})
    for point in points:
        images = orbit(point, k)
        seen = {}
        collision = None
        for i, image in enumerate(images):
            if image in seen:
                collision = (seen[image], i)
                break
            seen[image] = i
        report.add(
            "orbit_distinct",
            collision is None,
            (str(point.a), str(point.b)),
            detail=None if collision is None else f"tau^{collision[0]} and tau^{collision[1]} agree",
        )
    return report
