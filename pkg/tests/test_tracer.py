__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"
from fractions import Fraction
import math

import numpy as np
import pytest

from src.braids.braid_word import BraidWord, permutation_tuple
from src.braids.cyclic_braid import cyclic_generator, pi2
from src.braids.garside import equal, is_identity
from src.configurations.tracer_confs import TracerConf
from src.errors import InputError, TracingError
from src.tracer import alpha_beta as alpha_beta_module
from src.tracer.alpha_beta import alpha_beta, cached_alpha_beta, trace_alpha_beta
from src.tracer.crossings import CrossingDetector, orbit_labels, trace_braid
from src.tracer.registry import WitnessRegistry, default_registry_path, registry_key
from src.tracer.strands import FunctionMotion, orbit_strands, sampled
from src.tracer.torus_action import (
    TorusPoint,
    check_free_action,
    identity_map,
    lift_endpoints,
    loop_deck_map,
    orbit,
    parse_loop_word,
    tau_lift,
    tau_power,
)


def rotation(turns: float):
    """Two antipodal points on the unit circle turning counter-clockwise."""

    def positions(times):
        angle = math.pi * turns * times
        first = np.stack([np.cos(angle), np.sin(angle)], axis=-1)
        return np.stack([first, -first], axis=1)

    return FunctionMotion(2, positions)


def test_torus_points_are_reduced():
    point = TorusPoint(Fraction(5, 4), Fraction(-1, 4))
    assert (point.a, point.b) == (Fraction(1, 4), Fraction(3, 4))
    assert TorusPoint("1/8", 0) == TorusPoint(Fraction(9, 8), 1)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_tau_has_order_4k(k):
    point = TorusPoint(Fraction(1, 8), Fraction(1, 5))
    assert tau_power(point, 4 * k, k) == point
    assert tau_power(tau_power(point, 1, k), 1, k) == tau_power(point, 2, k)
    assert len(set(orbit(point, k))) == 4 * k


def test_deck_maps():
    tau = tau_lift(1)
    assert tau.compose(tau.inverse()) == identity_map()
    assert tau((Fraction(1, 8), 0)) == (Fraction(-1, 8), Fraction(1, 8) + Fraction(1, 4))
    u = loop_deck_map("u", 2)
    assert u.inverse()(u((Fraction(1, 3), Fraction(1, 7)))) == (Fraction(1, 3), Fraction(1, 7))
    with pytest.raises(InputError):
        loop_deck_map("w", 1)


def test_loop_words():
    assert parse_loop_word("u v^-2") == (("u", 1), ("v", -1), ("v", -1))
    assert parse_loop_word(["v", "u^2"]) == (("v", 1), ("u", 1), ("u", 1))
    with pytest.raises(InputError):
        parse_loop_word("u w")


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("basepoint", [(Fraction(1, 8), 0), (Fraction(1, 3), Fraction(1, 5))])
def test_lift_endpoints(k, basepoint):
    report = lift_endpoints(k, basepoint)
    assert report.passed, report.failures


@pytest.mark.parametrize("k", [1, 2, 3])
def test_action_is_free(k):
    assert check_free_action(k, trials=200).passed


def test_free_action_needs_positive_k():
    with pytest.raises(InputError):
        check_free_action(0)


@pytest.mark.parametrize("loop,shift", [("u", 2), ("v", 1)])
def test_orbit_strands_close_up(loop, shift):
    strands = orbit_strands(1, loop, resolution=128)
    assert strands.n == 4
    assert strands.shift == shift
    assert strands.min_separation() > 1e-9
    assert strands.closing_permutation() == [(j + shift) % 4 for j in range(4)]


def test_orbit_strands_reject_bad_input():
    with pytest.raises(InputError):
        orbit_strands(0, "u")
    with pytest.raises(InputError):
        orbit_strands(1, "u", resolution=10)
    with pytest.raises(InputError):
        orbit_strands(1, "w")


def test_half_turn_is_a_positive_crossing():
    word = trace_braid(sampled(rotation(1.0), 64))
    assert equal(word, BraidWord(2, (1,)))


def test_full_turn_is_the_full_twist():
    word = trace_braid(sampled(rotation(2.0), 64))
    assert equal(word, BraidWord(2, (1, 1)))
    assert not equal(word, BraidWord(2, (1,)))


def test_stationary_motion_is_trivial():
    points = np.array([[1.0, 0.0], [0.0, 1.5], [-1.0, -0.5]])
    motion = FunctionMotion(3, lambda times: np.repeat(points[None], len(times), axis=0))
    assert is_identity(trace_braid(sampled(motion, 64)))


@pytest.mark.parametrize("angle", [0.0, 0.3, -1.2])
def test_trace_does_not_depend_on_the_projection(angle):
    word = trace_braid(sampled(rotation(3.0), 128), projection_angle=angle)
    assert equal(word, BraidWord(2, (1, 1, 1)))


def test_projection_must_read_left_to_right():
    with pytest.raises(InputError):
        CrossingDetector(rotation(1.0), projection_angle=2.0)


def test_orbit_labels_follow_the_cyclic_generator():
    assert orbit_labels(4, [0, 1, 2, 3]) == (0, 3, 2, 1)
    assert orbit_labels(4, [2, 0, 3, 1]) == (2, 0, 1, 3)


def test_traced_pair(traced_pair):
    alpha, beta = traced_pair
    assert pi2(alpha).value == 2
    assert pi2(beta).value == 1
    assert permutation_tuple(beta.word) == cyclic_generator(4)
    assert is_identity(alpha.word * beta.word * alpha.word * beta.word.inverse())


def test_trace_is_stable_under_resolution_and_angle(traced_pair):
    alpha, beta = traced_pair
    for conf in (TracerConf(resolution=512, use_registry=False), TracerConf(resolution=256, projection_angle=0.4, use_registry=False)):
        other_alpha, other_beta, _ = trace_alpha_beta(1, conf)
        assert equal(other_alpha.word, alpha.word)
        assert equal(other_beta.word, beta.word)


@pytest.mark.slow
def test_trace_for_z8():
    alpha, beta, provenance = trace_alpha_beta(2, TracerConf(resolution=256, use_registry=False))
    assert pi2(alpha).value == 4
    assert pi2(beta).value == 1
    assert provenance["k"] == 2


def test_trace_rejects_bad_k():
    with pytest.raises(InputError):
        trace_alpha_beta(0)


def test_tracer_conf_checks():
    with pytest.raises(AssertionError):
        TracerConf(resolution=32)
    with pytest.raises(AssertionError):
        TracerConf(projection_angle=2.0)
    conf = TracerConf(basepoint=("1/3", "1/5"))
    assert conf.basepoint == (Fraction(1, 3), Fraction(1, 5))
    assert conf.basepoint_key == ("1/3", "1/5")
    with pytest.raises(AssertionError):
        TracerConf(basepoint=("a", "0"))
    with pytest.raises(AssertionError):
        TracerConf(basepoint=("1/0", "0"))


def test_registry_path_follows_the_environment(isolated_registry):
    assert default_registry_path() == str(isolated_registry)
    assert WitnessRegistry().path == str(isolated_registry)


def test_registry_round_trip(tmp_path, traced_pair):
    alpha, beta = traced_pair
    path = str(tmp_path / "pairs.json")
    key = registry_key(1, 256, 0.3, ("1/8", "0"))
    WitnessRegistry(path).put(key, alpha, beta, {"k": 1, "checks": ["pi2_alpha"]})
    registry = WitnessRegistry(path)
    assert key in registry
    stored_alpha, stored_beta, provenance = registry.get(key)
    assert provenance == {"k": 1, "checks": ["pi2_alpha"]}
    assert equal(stored_alpha.word, alpha.word)
    assert equal(stored_beta.word, beta.word)


def test_registry_discards_bad_entries(tmp_path, caplog):
    registry = WitnessRegistry(str(tmp_path / "pairs.json"))
    registry.entries["bad"] = {"k": 1, "alpha": "n=4 1", "beta": "n=4 1"}
    assert registry.get("bad") is None
    assert "bad" not in registry
    assert "Discarding" in caplog.text


def test_registry_ignores_unreadable_files(tmp_path):
    path = tmp_path / "pairs.json"
    path.write_text("{not json")
    assert len(WitnessRegistry(str(path))) == 0


def test_alpha_beta_uses_the_registry(traced_pair, monkeypatch):
    alpha, beta = traced_pair
    conf = TracerConf(resolution=256)
    calls = []

    def fake_trace(k, conf):
        calls.append(k)
        return alpha, beta, {"k": k}

    monkeypatch.setattr(alpha_beta_module, "trace_alpha_beta", fake_trace)
    registry = WitnessRegistry()
    _, _, traced = alpha_beta(1, conf, registry)
    assert calls == [1]
    assert traced == {"k": 1}
    assert registry_key(1, 256, 0.3, conf.basepoint_key) in registry
    _, _, stored = alpha_beta(1, conf, WitnessRegistry())
    assert calls == [1]
    assert stored == traced


def test_default_provider_keeps_tracing_errors(monkeypatch):
    def failing(k):
        raise TracingError("Strands collide.", interval=(0.25, 0.5))

    monkeypatch.setattr(alpha_beta_module, "alpha_beta", failing)
    with pytest.raises(TracingError) as exc:
        cached_alpha_beta.__wrapped__(1)
    assert exc.value.interval == (0.25, 0.5)

    def rejecting(k):
        raise InputError("k must be >= 1.")

    monkeypatch.setattr(alpha_beta_module, "alpha_beta", rejecting)
    with pytest.raises(TracingError):
        cached_alpha_beta.__wrapped__(1)
