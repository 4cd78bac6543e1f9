__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"
import numpy as np
import pytest

from src.braids.cyclic_braid import ZnElement
from src.errors import InputError
from src.surfaces.homomorphisms import (
    CyclicHom,
    count_homs,
    enumerate_homs,
    hom_from_dict,
    integer_lift,
    require_valid,
    theta_of_delta,
    torsion_generator_image,
    validate_hom,
)
from src.surfaces.presentations import SurfacePresentation


def test_images_must_cover_the_generators():
    p = SurfacePresentation("nonorientable-even", 0)
    with pytest.raises(InputError):
        CyclicHom(p, 4, {"u": 2})
    with pytest.raises(InputError):
        CyclicHom(p, 4, {"u": 2, "v": 1, "w": 0})
    with pytest.raises(InputError):
        CyclicHom(p, 4, {"u": ZnElement(6, 2), "v": 1})


def test_images_are_reduced():
    theta = CyclicHom(SurfacePresentation("nonorientable-even", 0), 4, {"u": 6, "v": -3})
    assert theta.residues() == [2, 1]
    assert theta((1, 2, 1, -2)).is_zero()


def test_relator_must_map_to_zero():
    theta = CyclicHom(SurfacePresentation("nonorientable-odd", 0), 4, {"c": 1})
    report = validate_hom(theta)
    assert not report.passed
    assert [entry.relation for entry in report.failures] == ["relator_maps_to_zero"]
    with pytest.raises(InputError):
        require_valid(theta)


def test_images_must_generate():
    theta = CyclicHom(SurfacePresentation("orientable", 1), 4, {"a1": 2, "a2": 0})
    report = validate_hom(theta)
    assert [entry.relation for entry in report.failures] == ["surjective"]


@pytest.mark.parametrize(
    "case, m, n, count",
    [
        ("nonorientable-odd", 0, 2, 1),
        ("nonorientable-odd", 0, 4, 0),
        ("nonorientable-even", 0, 4, 4),
        ("orientable", 1, 2, 3),
    ],
)
def test_count_homs(case, m, n, count):
    assert count_homs(case, m, n) == count


@pytest.mark.parametrize("case", ["nonorientable-odd", "nonorientable-even"])
@pytest.mark.parametrize("m", [0, 1])
@pytest.mark.parametrize("n", [2, 4, 6])
def test_delta_hat_is_the_torsion_class(case, m, n):
    for theta in enumerate_homs(case, m, n):
        delta = theta_of_delta(theta)
        assert torsion_generator_image(theta) == delta
        assert delta.is_zero() or 2 * delta.value == n


def test_orientable_surfaces_have_no_torsion():
    theta = CyclicHom(SurfacePresentation("orientable", 1), 3, {"a1": 1, "a2": 2})
    assert torsion_generator_image(theta).is_zero()
    assert theta_of_delta(theta).is_zero()


@pytest.mark.parametrize("case, m, n", [("orientable", 1, 5), ("nonorientable-odd", 1, 4), ("nonorientable-even", 1, 6)])
def test_integer_lift(case, m, n):
    for theta in enumerate_homs(case, m, n):
        lift = integer_lift(theta)
        if not theta_of_delta(theta).is_zero():
            assert lift is None
            continue
        assert [value % n for value in lift] == theta.residues()
        relator = np.array(theta.source.as_group().exponent_matrix(), dtype=object)
        assert all(int(x) == 0 for x in relator.dot(np.array(lift, dtype=object)))


def test_hom_from_dict():
    theta = hom_from_dict({"case": "nonorientable-even", "m": 0, "n": 4, "theta": {"u": 2, "v": 1}})
    assert theta.residues() == [2, 1]


@pytest.mark.parametrize(
    "data",
    [
        {"m": 0, "n": 4, "theta": {"u": 2, "v": 1}},
        {"case": "nonorientable-even", "m": "0", "n": 4, "theta": {"u": 2, "v": 1}},
        {"case": "nonorientable-even", "m": 0, "n": 4, "theta": [2, 1]},
        {"case": "nonorientable-even", "m": 0, "n": 4, "theta": {"u": "2", "v": 1}},
        {"case": "klein", "m": 0, "n": 4, "theta": {"u": 2, "v": 1}},
        [1, 2],
    ],
)
def test_hom_from_dict_rejects_malformed_instances(data):
    with pytest.raises(InputError):
        hom_from_dict(data)
