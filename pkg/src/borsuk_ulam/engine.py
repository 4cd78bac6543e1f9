__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

"""
The Borsuk-Ulam decision for free Z_n actions on closed surfaces mapping to the plane.

(M, Z_n, tau; R^2) has the Borsuk-Ulam property exactly when n = 2 mod 4, M_tau is non-orientable
and theta_Ab(delta) is nontrivial. A negative verdict comes with a witness psi, a positive one with
the parity obstruction carried by the full twist."""

from typing import Callable, Iterator, Optional, Tuple
import logging

from src.braids.cyclic_braid import CyclicBraid, ZnElement
from src.braids.pure_braid import epsilon, full_twist
from src.borsuk_ulam.certificates import Decision, ParityObstruction
from src.borsuk_ulam.witnesses import verify_witness, witness_lift, witness_prop1, witness_prop2
from src.errors import DomainError, UnsupportedError
from src.surfaces.homomorphisms import (
    CyclicHom,
    enumerate_homs,
    require_valid,
    theta_of_delta,
    torsion_generator_image,
)
from src.surfaces.presentations import SurfaceCase, SurfacePresentation, as_group
from src.surfaces.smith_normal_form import abelianization

logger = logging.getLogger(__name__)

AlphaBetaProvider = Callable[[int], Tuple[CyclicBraid, CyclicBraid]]


def _default_alpha_beta(k: int) -> Tuple[CyclicBraid, CyclicBraid]:
    from src.tracer.alpha_beta import cached_alpha_beta

    return cached_alpha_beta(k)


def _is_orientable(theta: CyclicHom) -> bool:
    group = as_group(theta.source)
    if group.marks is not None:
        return group.is_orientable()
    return not abelianization(group).torsion


def bu_predicate(theta: CyclicHom) -> bool:
    """
    Closed form of the criterion, computed from the abelianization and independent of decide.
    """

    if theta.n % 4 != 2:
        return False
    if _is_orientable(theta):
        return False
    return not torsion_generator_image(theta).is_zero()


def obstruction_certificate(theta: CyclicHom) -> ParityObstruction:
    """
    Parity obstruction for n = 4k + 2 with theta(delta_hat) = 2k + 1. The value eps(Delta_n^2) is
    computed from the full twist word.

    Raises:
        DomainError: if the preconditions do not hold.
    """

    n = theta.n
    if n % 4 != 2:
        raise DomainError(f"The parity obstruction needs n = 2 mod 4, got n={n}.")
    if _is_orientable(theta):
        raise DomainError("The parity obstruction needs a non-orientable orbit surface.")
    delta = theta_of_delta(theta)
    if delta.value != n // 2:
        raise DomainError(f"The parity obstruction needs theta(delta_hat) = {n // 2}, got {delta}.")
    eps = epsilon(full_twist(n))
    if eps % 2 != 1:
        raise DomainError(f"eps(Delta_{n}^2) = {eps} is even.")
    return ParityObstruction(n=n, theta_delta=delta, full_twist_eps=eps)


def decide(
    theta: CyclicHom,
    alpha_beta: Optional[AlphaBetaProvider] = None,
    verify: bool = True,
) -> Decision:
    """
    Decides the Borsuk-Ulam property for the action encoded by theta.

    Args:
        theta (CyclicHom): a valid homomorphism pi_1(M_tau) -> Z_n.
        alpha_beta (callable): k -> (alpha, beta) for the n = 4k witness. Defaults to the tracer.
        verify (bool): whether to verify the witness by braid equality.

    Returns:
        Decision: the verdict with its certificate (and the verification report when verified).

    Raises:
        InputError: if theta is not a valid homomorphism.
    """

    require_valid(theta)
    n = theta.n
    if isinstance(theta.source, SurfacePresentation):
        delta = theta_of_delta(theta)
        if delta.is_zero():
            witness = witness_prop1(theta)
        elif n % 4 == 0:
            alpha, beta = (alpha_beta or _default_alpha_beta)(n // 4)
            witness = witness_prop2(theta, alpha, beta)
        else:
            return Decision(True, obstruction_certificate(theta))
    else:
        delta = torsion_generator_image(theta)
        if delta.is_zero():
            witness = witness_lift(theta)
        elif n % 4 == 2:
            return Decision(True, obstruction_certificate(theta))
        else:
            raise UnsupportedError("Generic presentations with theta_Ab(delta) != 0 and n = 0 mod 4 have no witness rule.")
    report = verify_witness(witness, theta) if verify else None
    decision = Decision(False, witness, report)
    if report is not None and not report.passed:
        logger.error(f"Witness {witness.rule} failed verification for theta={theta.residues()} mod {n}")
    else:
        logger.debug(f"Decision for theta={theta.residues()} mod {n}: no BU property ({witness.rule})")
    return decision


def enumerate_instances(n_max: int, m_max: int, cases=None) -> Iterator[CyclicHom]:
    """All valid theta for the standard presentations with 2 <= n <= n_max and m <= m_max."""

    cases = list(cases) if cases is not None else list(SurfaceCase)
    for case in cases:
        for m in range(m_max + 1):
            if case == SurfaceCase.ORIENTABLE_I and m == 0:
                # No generators, hence no surjection.
                continue
            for n in range(2, n_max + 1):
                yield from enumerate_homs(case, m, n)


def expected_delta(theta: CyclicHom) -> ZnElement:
    """theta(delta_hat) must be 0 or n/2."""

    delta = theta_of_delta(theta)
    assert delta.is_zero() or 2 * delta.value == theta.n, f"theta(delta_hat) = {delta} is neither 0 nor n/2."
    return delta
