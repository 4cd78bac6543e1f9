__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"
"""
The braids alpha and beta of the Z_4k action on the torus over the Klein bottle, traced from the
geometric motion of an orbit along the loops u and v.

A traced pair is only returned once pi2(alpha) = 2k, pi2(beta) = 1 and alpha beta alpha beta^-1 = 1
have been checked by braid equality."""

from typing import Dict, Optional, Tuple
import functools
import logging

from src.braids.braid_word import BraidWord
from src.braids.cyclic_braid import CyclicBraid
from src.braids.garside import is_identity, normal_form
from src.configurations.tracer_confs import TracerConf
from src.errors import BUCertError, InputError, MembershipError, TracingError
from src.tracer.crossings import trace_labelled
from src.tracer.registry import WitnessRegistry, registry_key
from src.tracer.strands import concatenated_loop, orbit_strands
from src.utils import ScopedTimer

logger = logging.getLogger(__name__)


def _shortest(word: BraidWord) -> BraidWord:
    candidate = normal_form(word).to_word()
    return candidate if len(candidate) < len(word) else word


def trace_loop(k: int, loop: str, conf: TracerConf) -> BraidWord:
    strands = orbit_strands(k, loop, conf.resolution, conf.basepoint, conf.separation_tolerance)
    return trace_labelled(strands, conf.projection_angle, conf.refinement_cap)


def trace_alpha_beta(k: int, conf: Optional[TracerConf] = None) -> Tuple[CyclicBraid, CyclicBraid, Dict]:
    """
    Traces alpha from u and beta from v, then checks them.

    Args:
        k (int): the action is by Z_4k.
        conf (TracerConf): tracing parameters.

    Returns:
        tuple: alpha, beta and a provenance dict (k, resolution, angle, basepoint, checks).

    Raises:
        InputError: if k < 1.
        TracingError: if the tracing fails or the traced pair does not pass the checks.
    """

    if k < 1:
        raise InputError(f"k must be >= 1, got {k}.")
    conf = conf or TracerConf()
    n = 4 * k
    with ScopedTimer(f"trace_alpha_beta(k={k})", active=logger.isEnabledFor(logging.DEBUG)):
        alpha_word = _shortest(trace_loop(k, "u", conf))
        beta_word = _shortest(trace_loop(k, "v", conf))
        relator = concatenated_loop(k, "u v u v^-1", conf.resolution, conf.basepoint)
        relator_word = trace_labelled(relator, conf.projection_angle, conf.refinement_cap)
    try:
        alpha, beta = CyclicBraid(alpha_word), CyclicBraid(beta_word)
    except MembershipError as exc:
        raise TracingError(f"Traced braid is not in B_Z{n}: {exc}") from exc

    from src.borsuk_ulam.witnesses import check_alpha_beta

    try:
        check_alpha_beta(alpha, beta, k)
    except InputError as exc:
        raise TracingError(f"Traced pair for k={k} failed its checks: {exc}") from exc
    if not is_identity(relator_word):
        raise TracingError(f"The traced loop u v u v^-1 is not the identity braid for k={k}.")

    provenance = {
        "k": k,
        "resolution": conf.resolution,
        "angle": conf.projection_angle,
        "basepoint": list(conf.basepoint_key),
        "checks": ["pi2_alpha", "pi2_beta", "alpha_beta_alpha_beta_inv", "concatenated_relator"],
    }
    logger.info(f"Traced alpha ({len(alpha.word)} letters) and beta ({len(beta.word)} letters) on {n} strands")
    return alpha, beta, provenance


def alpha_beta(
    k: int,
    conf: Optional[TracerConf] = None,
    registry: Optional[WitnessRegistry] = None,
) -> Tuple[CyclicBraid, CyclicBraid, Dict]:
    """
    alpha, beta and their provenance for Z_4k, from the registry when it holds a pair for the same
    parameters, otherwise traced and stored.
    """

    conf = conf or TracerConf()
    if conf.use_registry and registry is None:
        registry = WitnessRegistry()
    key = registry_key(k, conf.resolution, conf.projection_angle, conf.basepoint_key)
    if conf.use_registry:
        cached = registry.get(key)
        if cached is not None:
            return cached
    alpha, beta, provenance = trace_alpha_beta(k, conf)
    if conf.use_registry:
        registry.put(key, alpha, beta, provenance)
    return alpha, beta, provenance


@functools.lru_cache(maxsize=None)
def cached_alpha_beta(k: int) -> Tuple[CyclicBraid, CyclicBraid]:
    """Default pair provider of the decision engine."""

    try:
        alpha, beta, _ = alpha_beta(k)
    except TracingError:
        # Already carries the failing interval.
        raise
    except BUCertError as exc:
        raise TracingError(str(exc)) from exc
    return alpha, beta
