__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

"""
Reading an Artin word off a planar motion.

Points are ordered by their projection p = x cos(phi) + y sin(phi). Each time two neighbours swap,
a letter +-(i + 1) is emitted, i being the 0-based position of the left one. The crossing is
positive when the strand coming from the left has the smaller transverse coordinate
q = -x sin(phi) + y cos(phi), so two points turning half a turn counterclockwise give sigma_1."""

from typing import List, Optional, Sequence, Tuple
import logging
import math

import numpy as np

from src.braids.braid_word import BraidWord, permutation_braid
from src.errors import InputError, TracingError
from src.tracer.strands import ConcatenatedMotion, LineIsotopy, Motion, PermutedMotion, StrandSet

logger = logging.getLogger(__name__)


class CrossingDetector:
    """
    Args:
        motion (Motion): the motion to read.
        projection_angle (float): phi, with cos(phi) > 0 so that a horizontal line is read left to right.
        refinement_cap (int): maximal bisection depth around a sample interval.
        tolerance (float): minimal transverse gap accepted at a crossing.
    """

    def __init__(self, motion: Motion, projection_angle: float = 0.3, refinement_cap: int = 40, tolerance: float = 1e-9):
        if math.cos(projection_angle) <= 0:
            raise InputError(f"The projection angle must satisfy cos(angle) > 0, got {projection_angle}.")
        self.motion = motion
        self.cos = math.cos(projection_angle)
        self.sin = math.sin(projection_angle)
        self.refinement_cap = refinement_cap
        self.tolerance = tolerance
        self.max_depth = 0

    def project(self, positions: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        x, y = positions[..., 0], positions[..., 1]
        return x * self.cos + y * self.sin, -x * self.sin + y * self.cos

    def order_at(self, times: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        p, q = self.project(self.motion.positions(times))
        return np.argsort(p, axis=1, kind="stable"), p, q

    @staticmethod
    def _adjacent_swaps(before: np.ndarray, after: np.ndarray) -> Optional[List[int]]:
        """Positions i such that after = before with (i, i+1) swapped, if the swaps are disjoint."""

        swaps = []
        i = 0
        n = len(before)
        while i < n:
            if before[i] == after[i]:
                i += 1
            elif i + 1 < n and before[i] == after[i + 1] and before[i + 1] == after[i]:
                swaps.append(i)
                i += 2
            else:
                return None
        return swaps

    def _sign(self, t0: float, t1: float, left: int, right: int) -> Optional[int]:
        p, q = self.project(self.motion.positions(np.array([t0, t1])))
        d0 = p[0, right] - p[0, left]
        d1 = p[1, right] - p[1, left]
        t_star = t0 + (t1 - t0) * d0 / (d0 - d1) if d0 != d1 else 0.5 * (t0 + t1)
        _, q_star = self.project(self.motion.positions(np.array([t_star])))
        gap = q_star[0, right] - q_star[0, left]
        if abs(gap) <= self.tolerance:
            return None
        return 1 if gap > 0 else -1

    def resolve(self, t0: float, t1: float, before: np.ndarray, after: np.ndarray, depth: int = 0) -> List[int]:
        """Letters for the order change between two times, bisecting until every change is simple."""

        self.max_depth = max(self.max_depth, depth)
        swaps = self._adjacent_swaps(before, after)
        if swaps is not None:
            letters = []
            for i in swaps:
                sign = self._sign(t0, t1, int(before[i]), int(before[i + 1]))
                if sign is None:
                    break
                letters.append(sign * (i + 1))
            else:
                return letters
        if depth >= self.refinement_cap:
            raise TracingError(f"Unresolved crossing after {depth} bisections in [{t0:.12f}, {t1:.12f}].", (t0, t1))
        middle = 0.5 * (t0 + t1)
        order, _, _ = self.order_at(np.array([middle]))
        return self.resolve(t0, middle, before, order[0], depth + 1) + self.resolve(middle, t1, order[0], after, depth + 1)

    def trace(self, times: np.ndarray) -> List[int]:
        order, _, _ = self.order_at(times)
        letters: List[int] = []
        changed = np.flatnonzero(np.any(order[1:] != order[:-1], axis=1))
        for index in changed:
            letters += self.resolve(float(times[index]), float(times[index + 1]), order[index], order[index + 1])
        logger.debug(f"{len(letters)} crossings, refinement depth {self.max_depth}")
        return letters


def closed_motion(strands: StrandSet) -> Tuple[ConcatenatedMotion, LineIsotopy]:
    """
    The motion of the strands conjugated by the line isotopy of their start configuration: from the
    line to X, along the strands, and back to the line.
    """

    closing = strands.closing_permutation()
    isotopy = LineIsotopy(strands.samples[0])
    identity = list(range(strands.n))
    pieces = [PermutedMotion(isotopy, identity, reverse=True), strands.motion, PermutedMotion(isotopy, closing)]
    return ConcatenatedMotion(pieces), isotopy


def trace_braid(
    strands: StrandSet,
    projection_angle: float = 0.3,
    refinement_cap: int = 40,
    tolerance: float = 1e-9,
) -> BraidWord:
    """
    Artin word of a closed motion, with the start configuration identified with n points on a line
    by the canonical line isotopy. The equality class does not depend on the resolution or on the
    projection angle.

    Args:
        strands (StrandSet): the sampled motion, ending on its starting configuration.
        projection_angle (float): phi in radians, cos(phi) > 0.
        refinement_cap (int): maximal bisection depth.
        tolerance (float): minimal transverse gap at a crossing.

    Returns:
        BraidWord: the word, positions numbered left to right on the line.

    Raises:
        TracingError: when a crossing cannot be resolved within the refinement cap.
    """

    motion, _ = closed_motion(strands)
    detector = CrossingDetector(motion, projection_angle, refinement_cap, tolerance)
    times = motion.sample_times(strands.resolution)
    return BraidWord(strands.n, tuple(detector.trace(times)))


def orbit_labels(n: int, slots: Sequence[int]) -> Tuple[int, ...]:
    """Label of the point tau^j(x_0) is -j mod n, which makes the cyclic permutation (1,n,...,2)."""

    return tuple((-slot) % n for slot in slots)


def label_conjugator(strands: StrandSet) -> BraidWord:
    """Positive permutation braid taking line positions to orbit labels."""

    isotopy = LineIsotopy(strands.samples[0])
    return permutation_braid(orbit_labels(strands.n, isotopy.slot_at_position()))


def trace_labelled(strands: StrandSet, projection_angle: float = 0.3, refinement_cap: int = 40) -> BraidWord:
    """c^-1 W c, where W is the traced word and c the label conjugator."""

    word = trace_braid(strands, projection_angle, refinement_cap)
    conjugator = label_conjugator(strands)
    return conjugator.inverse() * word * conjugator
