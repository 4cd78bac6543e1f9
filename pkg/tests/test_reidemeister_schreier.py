__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"
from math import factorial

import pytest

from src.braids.cyclic_braid import cyclic_generator, cyclic_power
from src.errors import InputError, UnsupportedError
from src.surfaces.presentations import GroupPresentation, SurfacePresentation
from src.surfaces.reidemeister_schreier import (
    compose,
    invert,
    orientation_cover,
    perm_of_word,
    subgroup_presentation,
)
from src.surfaces.smith_normal_form import abelianization


def test_permutation_helpers():
    p, q = (1, 0, 2), (0, 2, 1)
    assert compose(p, q) == (2, 0, 1)
    assert compose(p, invert(p)) == (0, 1, 2)
    assert perm_of_word((1, 2), [p, q]) == (2, 0, 1)
    assert perm_of_word((-2,), [p, q]) == q


@pytest.mark.parametrize(
    "case, m",
    [("nonorientable-odd", 0), ("nonorientable-odd", 1), ("nonorientable-even", 0), ("nonorientable-even", 1)],
)
def test_orientation_cover_is_orientable(case, m):
    base = SurfacePresentation(case, m)
    cover = orientation_cover(base)
    assert cover.index == 2
    assert cover.presentation.is_orientable()
    ab = abelianization(cover.presentation)
    assert ab.torsion == []
    assert ab.rank == 2 - 2 * base.euler_characteristic()


def test_orientation_cover_of_an_orientable_surface_is_itself():
    cover = orientation_cover(SurfacePresentation("orientable", 1))
    assert cover.index == 1
    assert abelianization(cover.presentation).rank == 2


def test_schreier_generators_lie_in_the_subgroup():
    p = SurfacePresentation("nonorientable-odd", 1)
    n = 4
    images = [(1, 0, 2, 3), cyclic_generator(n), cyclic_generator(n)]
    subgroup = [cyclic_power(n, m) for m in range(n)]
    result = subgroup_presentation(p, images, subgroup)
    assert result.index == factorial(n) // n
    assert all(image in subgroup for image in result.generator_images)
    for word, image in zip(result.generator_words, result.generator_images):
        assert perm_of_word(word, images) == image
    # A cover of degree d of a one-relator surface complex: d (g - 1) + 1 generators.
    assert result.presentation.n_generators == result.index * 2 + 1
    assert len(result.presentation.relators) == result.index
    assert result.presentation.euler_characteristic() == result.index * p.euler_characteristic()


def test_transversal_is_prefix_closed():
    p = SurfacePresentation("nonorientable-odd", 1)
    images = [(1, 0, 2), cyclic_generator(3), cyclic_generator(3)]
    result = subgroup_presentation(p, images, [(0, 1, 2)])
    transversal = set(result.transversal)
    assert result.index == 6
    assert all(word[:-1] in transversal for word in result.transversal if word)


def test_subgroup_presentation_errors():
    p = GroupPresentation(("x",), ((1, 1),))
    with pytest.raises(InputError):
        subgroup_presentation(p, [(1, 2, 0)], [(0, 1, 2)])
    with pytest.raises(UnsupportedError):
        subgroup_presentation(p, [(0, 0)], [(0, 1)])
    q = GroupPresentation(("x",), ())
    with pytest.raises(InputError):
        subgroup_presentation(q, [(1, 2, 0)], [(1, 2, 0)])
    with pytest.raises(InputError):
        subgroup_presentation(q, [(1, 2, 0), (0, 1, 2)], [(0, 1, 2)])
    with pytest.raises(UnsupportedError):
        subgroup_presentation(q, [(1, 2, 0)], [(0, 1, 2)], max_index=2)


def test_orientation_cover_needs_marks():
    with pytest.raises(InputError):
        orientation_cover(GroupPresentation(("x",), ()))
