__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"
import numpy as np
import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_smith_form
from sympy.polys.domains import ZZ

from src.surfaces.presentations import GroupPresentation, SurfacePresentation
from src.surfaces.smith_normal_form import abelianization, evaluate_row, smith_normal_form


def _check(matrix):
    smith = smith_normal_form(matrix)
    m = np.array(matrix, dtype=object)
    product = smith.left.dot(m).dot(smith.right)
    rows, cols = m.shape
    for i in range(rows):
        for j in range(cols):
            expected = smith.diagonal[i] if i == j else 0
            assert product[i, j] == expected
    assert (smith.right.dot(smith.right_inverse) == np.eye(cols, dtype=object)).all()
    nonzero = [d for d in smith.diagonal if d != 0]
    assert all(d > 0 for d in nonzero)
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    return smith


@pytest.mark.parametrize(
    "matrix",
    [[[2, 0], [0, 3]], [[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [[0, 0, 0]], [[1, 2], [3, 4], [5, 6]], [[6]]],
)
def test_smith_form(matrix):
    _check(matrix)


def test_smith_diagonal_values():
    assert smith_normal_form([[2, 0], [0, 3]]).diagonal == [1, 6]
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]).diagonal == [2, 6, 12]


@pytest.mark.parametrize("matrix", [[[2, 0], [0, 3]], [[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [[4, 6], [6, 4]]])
def test_invariant_factors_match_sympy(matrix):
    reference = sympy_smith_form(sympy.Matrix(matrix), domain=ZZ)
    expected = [abs(int(reference[i, i])) for i in range(min(reference.shape))]
    assert smith_normal_form(matrix).diagonal == expected


@pytest.mark.parametrize(
    "case, m, rank, torsion",
    [
        ("orientable", 1, 2, []),
        ("orientable", 2, 4, []),
        ("nonorientable-odd", 0, 0, [2]),
        ("nonorientable-odd", 1, 2, [2]),
        ("nonorientable-even", 0, 1, [2]),
        ("nonorientable-even", 1, 3, [2]),
    ],
)
def test_surface_abelianization(case, m, rank, torsion):
    ab = abelianization(SurfacePresentation(case, m))
    assert ab.rank == rank
    assert ab.torsion == torsion


def test_torsion_generator_is_the_distinguished_class():
    # In <u, v | u v u v^-1> the class of order two is u.
    ab = abelianization(SurfacePresentation("nonorientable-even", 0))
    row = ab.torsion_generator()
    assert evaluate_row(row, [1, 0]) % 2 == 1
    assert evaluate_row(row, [0, 1]) % 2 == 0


def test_torsion_free_group_has_no_torsion_generator():
    ab = abelianization(GroupPresentation(("x", "y"), ((1, 2, -1, -2),)))
    assert ab.torsion == []
    with pytest.raises(ValueError):
        ab.torsion_generator()


def test_evaluate_row():
    assert evaluate_row([1, -2, 0], [3, 1, 7]) == 1
