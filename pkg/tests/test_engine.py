__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"
import pytest

from src.braids.cyclic_braid import CyclicBraid, ZnElement
from src.braids.pure_braid import full_twist
from src.borsuk_ulam.certificates import Decision, ParityObstruction, WitnessHom
from src.borsuk_ulam.engine import (
    bu_predicate,
    decide,
    enumerate_instances,
    expected_delta,
    obstruction_certificate,
)
from src.borsuk_ulam.witnesses import (
    check_alpha_beta,
    verify_witness,
    witness_lift,
    witness_prop1,
    witness_prop2,
    witnesses_equal,
)
from src.errors import DomainError, InputError, UnsupportedError
from src.surfaces.homomorphisms import CyclicHom, enumerate_homs
from src.surfaces.presentations import GroupPresentation, SurfacePresentation


def _theta(case, m, n, **images):
    return CyclicHom(SurfacePresentation(case, m), n, images)


def test_projective_plane_has_the_property():
    theta = _theta("nonorientable-odd", 0, 2, c=1)
    decision = decide(theta)
    assert decision.has_bu_property
    assert isinstance(decision.certificate, ParityObstruction)
    assert decision.certificate.full_twist_eps == 1
    assert bu_predicate(theta)


def test_n6_obstruction():
    theta = _theta("nonorientable-even", 1, 6, u=3, v=1, a1=0, a2=0)
    certificate = obstruction_certificate(theta)
    assert certificate.k == 1
    assert certificate.full_twist_eps == 15
    assert certificate.identity == "2*eps(w_delta) + 15 = 0"
    assert certificate.to_dict()["unsatisfiable"]


def test_obstruction_preconditions():
    with pytest.raises(DomainError):
        obstruction_certificate(_theta("nonorientable-even", 0, 4, u=2, v=1))
    with pytest.raises(DomainError):
        obstruction_certificate(_theta("orientable", 1, 6, a1=1, a2=0))
    with pytest.raises(DomainError):
        obstruction_certificate(_theta("nonorientable-even", 0, 6, u=0, v=1))


def test_orientable_surfaces_never_have_the_property():
    for theta in enumerate_homs("orientable", 1, 6):
        decision = decide(theta)
        assert not decision.has_bu_property
        assert decision.certificate.rule == "g-powers"
        assert decision.verified


def test_witness_when_delta_vanishes():
    theta = _theta("nonorientable-odd", 1, 6, c=0, a1=1, a2=5)
    psi = witness_prop1(theta)
    assert psi.images["c"].word.is_empty()
    assert verify_witness(psi, theta).passed
    with pytest.raises(DomainError):
        witness_prop1(_theta("nonorientable-odd", 1, 6, c=3, a1=1, a2=0))


def test_invalid_theta_is_rejected():
    with pytest.raises(InputError):
        decide(_theta("nonorientable-odd", 0, 4, c=1))


def test_klein_bottle_odd_branch(alpha_beta_provider):
    theta = _theta("nonorientable-even", 0, 4, u=2, v=1)
    decision = decide(theta, alpha_beta=alpha_beta_provider)
    assert not decision.has_bu_property
    assert decision.certificate.rule == "alpha-beta-odd"
    assert decision.verified
    assert not bu_predicate(theta)


@pytest.mark.parametrize(
    "case, m, images",
    [
        ("nonorientable-odd", 1, {"c": 2, "a1": 1, "a2": 0}),
        ("nonorientable-odd", 1, {"c": 2, "a1": 2, "a2": 3}),
        ("nonorientable-odd", 2, {"c": 2, "a1": 0, "a2": 2, "a3": 1, "a4": 1}),
        ("nonorientable-even", 1, {"u": 2, "v": 2, "a1": 3, "a2": 1}),
        ("nonorientable-even", 1, {"u": 2, "v": 0, "a1": 2, "a2": 1}),
    ],
)
def test_even_branch(alpha_beta_provider, case, m, images):
    theta = CyclicHom(SurfacePresentation(case, m), 4, images)
    alpha, beta = alpha_beta_provider(1)
    psi = witness_prop2(theta, alpha, beta)
    assert psi.rule == "alpha-beta-even"
    report = verify_witness(psi, theta)
    assert report.passed, [entry.to_dict() for entry in report.failures]


def test_check_alpha_beta_rejects_bad_pairs(traced_pair):
    alpha, beta = traced_pair
    with pytest.raises(InputError):
        check_alpha_beta(beta, beta, 1)
    with pytest.raises(InputError):
        check_alpha_beta(alpha, alpha, 1)
    with pytest.raises(InputError):
        check_alpha_beta(alpha * CyclicBraid(full_twist(4).word), beta, 1)
    with pytest.raises(InputError):
        check_alpha_beta(CyclicBraid.identity(8), beta, 2)


def test_witness_prop2_preconditions(traced_pair):
    alpha, beta = traced_pair
    with pytest.raises(DomainError):
        witness_prop2(_theta("nonorientable-even", 0, 4, u=0, v=1), alpha, beta)
    with pytest.raises(DomainError):
        witness_prop2(_theta("orientable", 1, 4, a1=1, a2=0), alpha, beta)


def test_corrupted_witness_fails_verification(traced_pair):
    alpha, beta = traced_pair
    theta = _theta("nonorientable-even", 0, 4, u=2, v=1)
    psi = witness_prop2(theta, alpha, beta)
    images = dict(psi.images)
    # The full twist is central, so the relator picks up Delta^4.
    images["u"] = alpha * CyclicBraid(full_twist(4).word)
    broken = WitnessHom(psi.source, 4, images, rule="manual")
    report = verify_witness(broken, theta)
    assert not report.passed
    assert report.failures[0].relation == "relator_trivial"
    assert witnesses_equal(psi, psi)
    assert not witnesses_equal(psi, broken)


def test_decision_invariant():
    theta = _theta("nonorientable-odd", 0, 2, c=1)
    certificate = obstruction_certificate(theta)
    with pytest.raises(InputError):
        Decision(False, certificate)
    body = Decision(True, certificate).to_dict()
    assert body["schema"] == 1
    assert body["certificate"]["kind"] == "parity_obstruction"


def test_lift_witness_on_a_generic_presentation():
    # The Klein bottle group as a generic marked presentation.
    group = GroupPresentation(("x", "y"), ((1, 2, 1, -2),), (1, -1))
    theta = CyclicHom(group, 6, {"x": 0, "y": 1})
    decision = decide(theta)
    assert not decision.has_bu_property
    assert decision.certificate.rule == "lift"
    assert decision.verified
    witness = witness_lift(theta)
    assert verify_witness(witness, theta).passed


def test_generic_presentations_with_odd_torsion_image():
    group = GroupPresentation(("x", "y"), ((1, 2, 1, -2),), (1, -1))
    assert decide(CyclicHom(group, 6, {"x": 3, "y": 1})).has_bu_property
    with pytest.raises(UnsupportedError):
        decide(CyclicHom(group, 4, {"x": 2, "y": 1}))


def test_enumerate_instances_skips_the_sphere():
    instances = list(enumerate_instances(4, 0))
    assert all(isinstance(theta.source, SurfacePresentation) for theta in instances)
    assert all(theta.source.m > 0 or theta.source.case.value != "orientable" for theta in instances)
    assert len(instances) == 1 + 3 + 2 + 4


def test_expected_delta():
    theta = _theta("nonorientable-even", 0, 4, u=2, v=1)
    assert expected_delta(theta) == ZnElement(4, 2)


def _needs_k2(theta):
    source = theta.source
    return theta.n == 8 and source.delta_hat is not None and theta.images[source.delta_hat].value == 4


@pytest.mark.parametrize("n", range(2, 9))
def test_decisions_match_the_closed_form(alpha_beta_provider, n):
    provider = alpha_beta_provider if n == 4 else None
    for m in (0, 1):
        for case in ("nonorientable-odd", "nonorientable-even", "orientable"):
            if case == "orientable" and m == 0:
                continue
            for theta in enumerate_homs(case, m, n):
                if _needs_k2(theta):
                    continue
                decision = decide(theta, alpha_beta=provider)
                assert decision.has_bu_property == bu_predicate(theta)
                assert decision.verified


@pytest.mark.slow
def test_acceptance_sweep():
    from src.configurations.suite_confs import SuiteConf
    from src.suites import decision_suite
    from src.tracer.alpha_beta import cached_alpha_beta

    report = decision_suite(SuiteConf(decision_n_max=12, decision_m_max=2), cached_alpha_beta)
    assert report.passed
