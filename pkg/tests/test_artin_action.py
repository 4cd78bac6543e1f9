__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"
import numpy as np
import pytest

from src.braids.artin_action import artin_action, artin_action_equal, free_generator_images
from src.braids.braid_word import BraidWord
from src.braids.garside import equal
from src.configurations.suite_confs import SuiteConf
from src.errors import InputError
from src.suites import oracle_suite


def test_identity_acts_trivially():
    assert artin_action(BraidWord.identity(4)) == free_generator_images(4)


def test_free_generator_images_are_distinct():
    images = free_generator_images(5)
    assert len(set(images)) == 5


def test_oracle_respects_the_braid_relations():
    assert artin_action_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
    assert artin_action_equal(BraidWord(4, (1, 3)), BraidWord(4, (3, 1)))
    assert not artin_action_equal(BraidWord(3, (1, 2)), BraidWord(3, (2, 1)))
    assert not artin_action_equal(BraidWord(3, (1, 1)), BraidWord.identity(3))


def test_oracle_needs_the_same_strand_count():
    with pytest.raises(InputError):
        artin_action_equal(BraidWord.identity(2), BraidWord.identity(3))


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_oracle_agrees_with_garside(seed):
    rng = np.random.default_rng(seed)
    for _ in range(100):
        n = int(rng.integers(2, 5))
        letters = rng.integers(1, n, size=8) * rng.choice([-1, 1], size=8)
        word = BraidWord(n, tuple(int(x) for x in letters))
        other = BraidWord(n, tuple(int(x) for x in reversed(letters)))
        assert equal(word, other) == artin_action_equal(word, other)
        assert artin_action_equal(word * word.inverse(), BraidWord.identity(n))


def test_oracle_suite_small():
    report = oracle_suite(SuiteConf(oracle_pairs=300, oracle_n_max=4, oracle_length=12))
    assert report.passed


@pytest.mark.slow
def test_oracle_suite_full():
    report = oracle_suite(SuiteConf(oracle_pairs=10000, oracle_n_max=5, oracle_length=25))
    assert report.passed
