__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

"""
Planar strand motions.

The orbit map h(a, b) = (r(a), 2 pi b) in polar coordinates sends the torus into the annulus
1 <= r <= 2 and is injective on every orbit of the Z_4k action. Moving a point x along a lift of a
Klein bottle loop and drawing h(tau^i(x)) for every i gives a motion of 4k distinct points in the
plane, that is a braid."""

from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple
import dataclasses
import logging
import math

import numba as nb
import numpy as np

from src.errors import InputError, TracingError
from src.tracer.torus_action import DeckMap, identity_map, loop_deck_map, loop_shift, parse_loop_word

logger = logging.getLogger(__name__)


@nb.jit(nb.float64(nb.float64), nopython=True)
def annulus_radius(a: float) -> float:
    """r(a) on [0, 1): 3/2 -> 1 on [0, 1/4], 1 -> 2 on [1/4, 3/4], 2 -> 3/2 on [3/4, 1]."""

    if a <= 0.25:
        return (3.0 - 4.0 * a) / 2.0
    if a <= 0.75:
        return (1.0 + 4.0 * a) / 2.0
    return (7.0 - 4.0 * a) / 2.0


@nb.jit(nopython=True)
def orbit_positions(a: np.ndarray, b: np.ndarray, k: int) -> np.ndarray:
    """
    Planar positions h(tau^i(a_t, b_t)) for every sample t and every i < 4k.

    Args:
        a (np.ndarray): first torus coordinate of the lift, shape (T,), unreduced.
        b (np.ndarray): second torus coordinate of the lift, shape (T,), unreduced.
        k (int): the action is by Z_4k.

    Returns:
        np.ndarray: positions, shape (T, 4k, 2).
    """

    n = 4 * k
    out = np.empty((a.shape[0], n, 2))
    for t in range(a.shape[0]):
        for i in range(n):
            if i % 2 == 0:
                ai = a[t]
                bi = b[t] + i / n
            else:
                ai = -a[t]
                bi = a[t] + b[t] + i / n
            ai = ai - math.floor(ai)
            r = annulus_radius(ai)
            out[t, i, 0] = r * math.cos(2.0 * math.pi * bi)
            out[t, i, 1] = r * math.sin(2.0 * math.pi * bi)
    return out


class Motion:
    """A motion of n points in the plane, parametrised by t in [0, 1]."""

    n: int

    def positions(self, times: np.ndarray) -> np.ndarray:
        """Positions at the given times, shape (T, n, 2)."""

        raise NotImplementedError

    def sample_times(self, resolution: int) -> np.ndarray:
        return np.linspace(0.0, 1.0, resolution + 1)


class FunctionMotion(Motion):
    def __init__(self, n: int, fn: Callable[[np.ndarray], np.ndarray]):
        self.n = n
        self.fn = fn

    def positions(self, times: np.ndarray) -> np.ndarray:
        return np.asarray(self.fn(np.atleast_1d(times)), dtype=np.float64)


class SegmentLiftMotion(Motion):
    """Orbit motion along a straight lift segment in R^2 from start to end."""

    def __init__(self, k: int, start: Sequence[float], end: Sequence[float]):
        self.k = k
        self.n = 4 * k
        self.start = np.array([float(x) for x in start])
        self.end = np.array([float(x) for x in end])

    def positions(self, times: np.ndarray) -> np.ndarray:
        times = np.atleast_1d(np.asarray(times, dtype=np.float64))
        a = self.start[0] + times * (self.end[0] - self.start[0])
        b = self.start[1] + times * (self.end[1] - self.start[1])
        return orbit_positions(a, b, self.k)


class ConcatenatedMotion(Motion):
    """Pieces run one after the other, each over an equal share of [0, 1]."""

    def __init__(self, pieces: Sequence[Motion]):
        if not pieces:
            raise InputError("A concatenated motion needs at least one piece.")
        self.pieces = list(pieces)
        self.n = self.pieces[0].n
        if any(piece.n != self.n for piece in self.pieces):
            raise InputError("All pieces must move the same number of points.")

    def positions(self, times: np.ndarray) -> np.ndarray:
        times = np.atleast_1d(np.asarray(times, dtype=np.float64))
        count = len(self.pieces)
        scaled = times * count
        index = np.clip(np.floor(scaled).astype(np.int64), 0, count - 1)
        local = scaled - index
        out = np.empty((len(times), self.n, 2))
        for piece_index in np.unique(index):
            mask = index == piece_index
            out[mask] = self.pieces[int(piece_index)].positions(local[mask])
        return out

    def sample_times(self, resolution: int) -> np.ndarray:
        count = len(self.pieces)
        grids = [(piece_index + np.linspace(0.0, 1.0, resolution + 1)[:-1]) / count for piece_index in range(count)]
        return np.concatenate(grids + [np.array([1.0])])


class PermutedMotion(Motion):
    """Relabels the strands of a motion: strand j follows strand order[j] of the base motion."""

    def __init__(self, base: Motion, order: Sequence[int], reverse: bool = False):
        self.base = base
        self.n = base.n
        self.order = np.asarray(order, dtype=np.int64)
        self.reverse = reverse

    def positions(self, times: np.ndarray) -> np.ndarray:
        times = np.atleast_1d(np.asarray(times, dtype=np.float64))
        if self.reverse:
            times = 1.0 - times
        return self.base.positions(times)[:, self.order, :]


class LineIsotopy(Motion):
    """
    Canonical isotopy from a configuration X to n points on a horizontal line below it.

    Four steps, each over a quarter of [0, 1]: a small twist (theta += eps (r - r_mid)) making all
    polar angles distinct, a radial move onto the circle r = r_mid, an order preserving angular
    compression onto an arc around -pi/2 cut at the largest angular gap, and a straight move onto the
    line. None of the steps lets two points meet. The result only depends on the set X, so the same
    isotopy closes up every motion that starts and ends on X.
    """

    arc_width = math.pi / 3

    def __init__(self, configuration: np.ndarray, twist: float = 0.05):
        X = np.asarray(configuration, dtype=np.float64)
        self.n = X.shape[0]
        self.radius = np.hypot(X[:, 0], X[:, 1])
        if np.any(self.radius < 1e-9):
            raise TracingError("The line isotopy needs every point away from the origin.")
        self.angle = np.arctan2(X[:, 1], X[:, 0])
        self.r_mid = 0.5 * (self.radius.min() + self.radius.max())
        self.twist = self._choose_twist(twist)
        twisted = self.angle + self.twist * (self.radius - self.r_mid)
        self.twisted = twisted
        self.unwrapped, self.rank = self._unwrap(twisted)
        if self.n > 1:
            self.target_angle = -math.pi / 2 - self.arc_width / 2 + self.arc_width * self.rank / (self.n - 1)
            self.line_x = self.r_mid * (-0.5 + self.rank / (self.n - 1))
        else:
            self.target_angle = np.full(1, -math.pi / 2)
            self.line_x = np.zeros(1)
        self.line_y = -(self.r_mid + 1.0)

    def _separation(self, angles: np.ndarray) -> float:
        if self.n < 2:
            return math.inf
        ordered = np.sort(np.mod(angles, 2 * math.pi))
        gaps = np.diff(np.concatenate([ordered, ordered[:1] + 2 * math.pi]))
        return float(gaps.min())

    def _choose_twist(self, twist: float) -> float:
        for _ in range(30):
            if self._separation(self.angle + twist * (self.radius - self.r_mid)) > 1e-6:
                return twist
            twist /= 2
        raise TracingError("Could not separate the polar angles of the configuration.")

    def _unwrap(self, angles: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        reduced = np.mod(angles, 2 * math.pi)
        order = np.argsort(reduced, kind="stable")
        ordered = reduced[order]
        if self.n > 1:
            gaps = np.diff(np.concatenate([ordered, ordered[:1] + 2 * math.pi]))
            widest = int(np.argmax(gaps))
            cut = ordered[widest] + gaps[widest] / 2
        else:
            cut = ordered[0] - math.pi
        unwrapped = cut + np.mod(reduced - cut, 2 * math.pi)
        rank = np.empty(self.n, dtype=np.int64)
        rank[np.argsort(unwrapped, kind="stable")] = np.arange(self.n)
        return unwrapped, rank

    def positions(self, times: np.ndarray) -> np.ndarray:
        times = np.atleast_1d(np.asarray(times, dtype=np.float64))
        out = np.empty((len(times), self.n, 2))
        for index, t in enumerate(times):
            step = min(int(t * 4), 3)
            s = t * 4 - step
            if step == 0:
                angle = self.angle + s * self.twist * (self.radius - self.r_mid)
                radius = self.radius
            elif step == 1:
                angle = self.twisted
                radius = (1 - s) * self.radius + s * self.r_mid
            elif step == 2:
                angle = (1 - s) * self.unwrapped + s * self.target_angle
                radius = np.full(self.n, self.r_mid)
            else:
                ax = self.r_mid * np.cos(self.target_angle)
                ay = self.r_mid * np.sin(self.target_angle)
                out[index, :, 0] = (1 - s) * ax + s * self.line_x
                out[index, :, 1] = (1 - s) * ay + s * self.line_y
                continue
            out[index, :, 0] = radius * np.cos(angle)
            out[index, :, 1] = radius * np.sin(angle)
        return out

    def slot_at_position(self) -> List[int]:
        """Which point of X ends at each line position, left to right."""

        slots = [0] * self.n
        for slot, position in enumerate(self.rank):
            slots[int(position)] = slot
        return slots


@dataclasses.dataclass
class StrandSet:
    """
    Sampled motion of n points. Strand i is the i-th column of samples.

    Args:
        motion (Motion): the continuous motion, used for refinement.
        times (np.ndarray): sample times in [0, 1].
        samples (np.ndarray): positions at the sample times, shape (T, n, 2).
        k (int): action parameter when the strands are orbit strands, else None.
        loop (str): the loop word that generated the motion, if any.
        shift (int): strand i ends where strand i + shift started, for orbit strands.
        basepoint (tuple): x_0 as fractions, for orbit strands.
    """

    motion: Motion
    times: np.ndarray
    samples: np.ndarray
    k: Optional[int] = None
    loop: Optional[str] = None
    shift: Optional[int] = None
    basepoint: Optional[Tuple[Fraction, Fraction]] = None

    @property
    def n(self) -> int:
        return self.samples.shape[1]

    @property
    def resolution(self) -> int:
        return len(self.times) - 1

    def min_separation(self) -> float:
        """Smallest distance between two strands over all samples."""

        if self.n < 2:
            return math.inf
        diff = self.samples[:, :, None, :] - self.samples[:, None, :, :]
        dist = np.hypot(diff[..., 0], diff[..., 1])
        dist[:, np.arange(self.n), np.arange(self.n)] = np.inf
        return float(dist.min())

    def closing_permutation(self, tolerance: float = 1e-7) -> List[int]:
        """
        The permutation p with end position of strand j equal to the start position of strand p[j].

        Raises:
            TracingError: if the end configuration is not the start configuration.
        """

        start, end = self.samples[0], self.samples[-1]
        diff = end[:, None, :] - start[None, :, :]
        dist = np.hypot(diff[..., 0], diff[..., 1])
        order = [int(i) for i in np.argmin(dist, axis=1)]
        if sorted(order) != list(range(self.n)) or np.max(dist[np.arange(self.n), order]) > tolerance:
            raise TracingError("The motion does not end on its starting configuration.")
        return order


def check_separation(strands: StrandSet, tolerance: float = 1e-9) -> None:
    separation = strands.min_separation()
    if separation <= tolerance:
        raise TracingError(f"Two strands collide (separation {separation:.3e}); refine the resolution.")


def loop_motion(k: int, word: str, basepoint: Sequence = (Fraction(1, 8), 0)) -> Tuple[Motion, DeckMap]:
    """
    Motion of the orbit of x_0 along the lift of a word in u, v. Each letter lifts to a straight
    segment from G x_0 to G D x_0, where G is the deck map of the prefix and D that of the letter.
    """

    letters = parse_loop_word(word)
    if not letters:
        raise InputError("The loop word is empty.")
    x0 = (Fraction(basepoint[0]), Fraction(basepoint[1]))
    prefix = identity_map()
    pieces = []
    for name, sign in letters:
        deck = loop_deck_map(name, k)
        deck = deck if sign > 0 else deck.inverse()
        start = prefix(x0)
        prefix = prefix.compose(deck)
        pieces.append(SegmentLiftMotion(k, start, prefix(x0)))
    motion = pieces[0] if len(pieces) == 1 else ConcatenatedMotion(pieces)
    return motion, prefix


def orbit_strands(
    k: int,
    loop: str,
    resolution: int = 1024,
    basepoint: Sequence = (Fraction(1, 8), 0),
    tolerance: float = 1e-9,
) -> StrandSet:
    """
    Strands s_i(t) = h(tau^i(xi(t))), i < 4k, for the lift xi of a Klein bottle loop from x_0.

    Args:
        k (int): the action is by Z_4k, k >= 1.
        loop (str): "u", "v", or any word in u, v such as "u v u v^-1".
        resolution (int): samples per letter, >= 64.
        basepoint (tuple): x_0 = (a_0, b_0), rationals.
        tolerance (float): minimal allowed distance between two strands.

    Returns:
        StrandSet: the sampled motion.

    Raises:
        TracingError: if two strands come closer than the tolerance.
    """

    if k < 1:
        raise InputError(f"k must be >= 1, got {k}.")
    if resolution < 64:
        raise InputError(f"resolution must be >= 64, got {resolution}.")
    motion, deck = loop_motion(k, loop, basepoint)
    letters = parse_loop_word(loop)
    shift = sum(sign * loop_shift(name, k) for name, sign in letters) % (4 * k)
    times = motion.sample_times(resolution)
    strands = StrandSet(
        motion=motion,
        times=times,
        samples=motion.positions(times),
        k=k,
        loop=loop,
        shift=shift,
        basepoint=(Fraction(basepoint[0]), Fraction(basepoint[1])),
    )
    check_separation(strands, tolerance)
    logger.debug(f"Orbit strands k={k} loop={loop!r}: {strands.resolution} samples, shift {shift}")
    return strands


def concatenated_loop(k: int, word: str, resolution: int = 1024, basepoint: Sequence = (Fraction(1, 8), 0)) -> StrandSet:
    """Orbit strands of a whole word in u, v traced as a single motion."""

    return orbit_strands(k, word, resolution, basepoint)


def sampled(motion: Motion, resolution: int) -> StrandSet:
    """StrandSet of an arbitrary motion."""

    times = motion.sample_times(resolution)
    return StrandSet(motion=motion, times=times, samples=motion.positions(times))
