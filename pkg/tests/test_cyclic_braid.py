__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"
import pytest

from src.braids.braid_word import BraidWord, permutation_tuple
from src.braids.cyclic_braid import (
    CyclicBraid,
    ZnElement,
    cyclic_class,
    cyclic_generator,
    cyclic_power,
    decompose,
    pi2,
    pi_compatible,
    verify_presentation,
)
from src.braids.garside import equal
from src.braids.pure_braid import a_gen, g_word
from src.errors import InputError, MembershipError


def test_residues():
    assert ZnElement(6, 7).value == 1
    assert ZnElement(6, -1).value == 5
    assert ZnElement(6, 5) + 1 == ZnElement(6, 0)
    assert -ZnElement(4, 1) == ZnElement(4, 3)
    assert 3 * ZnElement(4, 3) == ZnElement(4, 1)
    assert ZnElement.parse("3 mod 4") == ZnElement(4, 3)
    assert str(ZnElement(4, 3)) == "3 mod 4"


def test_residues_need_the_same_modulus():
    with pytest.raises(InputError):
        ZnElement(4, 1) + ZnElement(6, 1)
    with pytest.raises(InputError):
        ZnElement.parse("three")


def test_cyclic_generator_is_k_to_k_minus_one():
    assert cyclic_generator(4) == (3, 0, 1, 2)
    assert cyclic_power(4, 1) == cyclic_generator(4)
    assert cyclic_power(4, 4) == (0, 1, 2, 3)


@pytest.mark.parametrize("n", range(2, 7))
def test_cyclic_class(n):
    for m in range(n):
        assert cyclic_class(cyclic_power(n, m)) == m


def test_cyclic_class_rejects_other_permutations():
    with pytest.raises(MembershipError):
        cyclic_class((1, 0, 2))


def test_g_has_class_one():
    for n in range(2, 7):
        assert permutation_tuple(g_word(n)) == cyclic_generator(n)
        assert pi2(CyclicBraid.g(n)) == ZnElement(n, 1)


def test_cyclic_braid_membership():
    with pytest.raises(MembershipError):
        CyclicBraid(BraidWord.sigma(1, 3))
    assert pi2(CyclicBraid(a_gen(1, 3, 3).word)).is_zero()


def test_pi2_is_a_homomorphism():
    g = CyclicBraid.g(5)
    x = CyclicBraid(a_gen(2, 4, 5).word) * g**3
    y = g**-1 * CyclicBraid(a_gen(1, 5, 5).word)
    assert pi2(x * y) == pi2(x) + pi2(y)
    assert pi2(x.inverse()) == -pi2(x)


def test_decompose():
    g = CyclicBraid.g(4)
    b = CyclicBraid(a_gen(1, 3, 4).word) * g**3
    pure, m = decompose(b)
    assert m == 3
    assert equal(pure.word, a_gen(1, 3, 4).word)


def test_pi_compatible():
    assert pi_compatible(BraidWord.sigma(1, 3), (1, 0, 2))
    assert not pi_compatible(BraidWord.sigma(2, 3), (1, 0, 2))


@pytest.mark.parametrize("n", range(2, 6))
def test_presentation(n):
    report = verify_presentation(n)
    assert report.passed
    assert report.count("II.wrap") == n - 1


@pytest.mark.slow
def test_presentation_six_strands():
    assert verify_presentation(6).passed


def test_presentation_needs_two_strands():
    with pytest.raises(InputError):
        verify_presentation(1)
