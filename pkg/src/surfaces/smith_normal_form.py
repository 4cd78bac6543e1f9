__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

"""
Smith normal form over arbitrary-precision integers, with the change of basis matrices, and the
abelianization of a finite presentation.

For an integer matrix R we compute unimodular U, V with U R V = D diagonal, d_1 | d_2 | ... The
abelianization of <x_1..x_g | r_1..r_s> is Z^g / rowspace(R) where R is the exponent matrix; in the
coordinates y = x V it is a direct sum of Z / d_i, and the i-th new basis vector is the row
e_i V^-1 in the original generators. Matrices are numpy object arrays so entries never overflow."""

from typing import List, Optional, Sequence
import dataclasses
import logging

import numpy as np

from src.surfaces.presentations import as_group

logger = logging.getLogger(__name__)


@dataclasses.dataclass
class SmithForm:
    diagonal: List[int]
    left: np.ndarray
    right: np.ndarray
    right_inverse: np.ndarray

    @property
    def rank(self) -> int:
        """Rank of the matrix, i.e. the number of nonzero diagonal entries."""

        return sum(1 for d in self.diagonal if d != 0)


def _eye(size: int) -> np.ndarray:
    return np.eye(size, dtype=object)


def smith_normal_form(matrix) -> SmithForm:
    """
    Smith normal form with partial pivoting on the smallest nonzero entry.

    Args:
        matrix: integer matrix (nested lists or array), rows x cols.

    Returns:
        SmithForm: diagonal entries (non-negative, each dividing the next) and U, V, V^-1 with
        U @ matrix @ V == diag.
    """

    D = np.array(matrix, dtype=object)
    if D.ndim != 2:
        D = D.reshape(len(matrix), -1) if len(matrix) else np.zeros((0, 0), dtype=object)
    rows, cols = D.shape
    U, V, V_inv = _eye(rows), _eye(cols), _eye(cols)

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            D[[i, j]] = D[[j, i]]
            U[[i, j]] = U[[j, i]]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            D[:, [i, j]] = D[:, [j, i]]
            V[:, [i, j]] = V[:, [j, i]]
            V_inv[[i, j]] = V_inv[[j, i]]

    t = 0
    while t < min(rows, cols):
        block = D[t:, t:]
        nonzero = np.argwhere(block != 0)
        if len(nonzero) == 0:
            break
        i, j = min(nonzero, key=lambda ij: abs(block[ij[0], ij[1]]))
        swap_rows(t, t + int(i))
        swap_cols(t, t + int(j))
        while True:
            pivot = D[t, t]
            for i in np.flatnonzero(D[t + 1 :, t] != 0) + t + 1:
                q = D[i, t] // pivot
                D[i] -= q * D[t]
                U[i] -= q * U[t]
            for j in np.flatnonzero(D[t, t + 1 :] != 0) + t + 1:
                q = D[t, j] // pivot
                D[:, j] -= q * D[:, t]
                V[:, j] -= q * V[:, t]
                # V^-1 picks up the inverse elementary operation on its rows.
                V_inv[t] += q * V_inv[j]
            rest_rows = np.flatnonzero(D[t + 1 :, t] != 0) + t + 1
            rest_cols = np.flatnonzero(D[t, t + 1 :] != 0) + t + 1
            if len(rest_rows) or len(rest_cols):
                candidates = [(abs(D[i, t]), int(i), t) for i in rest_rows]
                candidates += [(abs(D[t, j]), t, int(j)) for j in rest_cols]
                _, i, j = min(candidates)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            if abs(pivot) != 1:
                offending = np.argwhere(D[t + 1 :, t + 1 :] % pivot != 0)
                if len(offending):
                    i = int(offending[0][0]) + t + 1
                    D[t] += D[i]
                    U[t] += U[i]
                    continue
            break
        if D[t, t] < 0:
            D[t] = -D[t]
            U[t] = -U[t]
        t += 1

    diagonal = [int(D[k, k]) for k in range(min(rows, cols))]
    logger.debug(f"Smith form of a {rows}x{cols} matrix, rank {t}")
    return SmithForm(diagonal=diagonal, left=U, right=V, right_inverse=V_inv)


@dataclasses.dataclass
class Abelianization:
    rank: int
    torsion: List[int]
    smith: SmithForm

    def torsion_positions(self) -> List[int]:
        return [k for k, d in enumerate(self.smith.diagonal) if d > 1]

    def torsion_generator(self, position: Optional[int] = None) -> np.ndarray:
        """Row vector, in the original generators, of a cyclic torsion summand."""

        positions = self.torsion_positions()
        if not positions:
            raise ValueError("The abelianization is torsion free.")
        return self.smith.right_inverse[positions[0] if position is None else position]


def abelianization(presentation) -> Abelianization:
    """
    Free rank and invariant factors (> 1) of the abelianization of a presentation.

    Args:
        presentation: a GroupPresentation or SurfacePresentation.

    Returns:
        Abelianization: rank, torsion and the Smith form used to compute them.
    """

    group = as_group(presentation)
    matrix = group.exponent_matrix()
    smith = smith_normal_form(matrix)
    torsion = [d for d in smith.diagonal if d > 1]
    rank = group.n_generators - smith.rank
    return Abelianization(rank=rank, torsion=torsion, smith=smith)


def evaluate_row(row: Sequence[int], values: Sequence[int]) -> int:
    return int(sum(int(a) * int(b) for a, b in zip(row, values)))
