__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

"""
Artin action of B_n on the free group F_n, used as an oracle independent of the normal form.

sigma_i acts by x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i, and this action is faithful. Free group
elements are not stored as words (their length grows exponentially with the braid length). Instead
F_n is embedded in F_2 = <a, b> by x_j -> a^j b a^-j, and F_2 in SL_2(Z) by the Sanov matrices
a = [[1, 2], [0, 1]], b = [[1, 0], [2, 1]]. Both embeddings are injective, so two braids act the
same way iff the matrix images of the x_j agree."""

from typing import Tuple

from src.braids.braid_word import BraidWord
from src.errors import InputError

Matrix = Tuple[int, int, int, int]

_A = (1, 2, 0, 1)
_A_INV = (1, -2, 0, 1)
_B = (1, 0, 2, 1)


def _mul(x: Matrix, y: Matrix) -> Matrix:
    return (
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    )


def _inv(x: Matrix) -> Matrix:
    # Determinant one.
    return (x[3], -x[1], -x[2], x[0])


def free_generator_images(n: int) -> Tuple[Matrix, ...]:
    images = []
    a_power, a_power_inv = _A, _A_INV
    for _ in range(n):
        images.append(_mul(_mul(a_power, _B), a_power_inv))
        a_power, a_power_inv = _mul(a_power, _A), _mul(_A_INV, a_power_inv)
    return tuple(images)


def artin_action(word: BraidWord) -> Tuple[Matrix, ...]:
    """
    Images of the free generators under the automorphism of the braid, as SL_2(Z) matrices.

    Letters are composed as phi_{w sigma} = phi_w o phi_sigma, so appending sigma_i replaces
    (M_i, M_{i+1}) by (M_i M_{i+1} M_i^-1, M_i) and appending sigma_i^-1 replaces them by
    (M_{i+1}, M_{i+1}^-1 M_i M_{i+1}).
    """

    images = list(free_generator_images(word.n))
    for e in word.letters:
        i = abs(e) - 1
        left, right = images[i], images[i + 1]
        if e > 0:
            images[i] = _mul(_mul(left, right), _inv(left))
            images[i + 1] = left
        else:
            images[i] = right
            images[i + 1] = _mul(_mul(_inv(right), left), right)
    return tuple(images)


def artin_action_equal(w1: BraidWord, w2: BraidWord) -> bool:
    if w1.n != w2.n:
        raise InputError(f"Cannot compare braids on {w1.n} and {w2.n} strands.")
    return artin_action(w1) == artin_action(w2)
