__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"
"""
Verification suites run from run.py. Each suite returns a Report; run_suites collects them into
one JSON summary."""

from typing import Callable, Dict, List, Optional
import json
import logging

import numpy as np

from src.braids.artin_action import artin_action_equal
from src.braids.braid_word import BraidWord
from src.braids.cyclic_braid import verify_presentation
from src.braids.garside import equal
from src.braids.pure_braid import check_relations_I, epsilon, full_twist
from src.borsuk_ulam.certificates import ParityObstruction
from src.borsuk_ulam.engine import bu_predicate, decide
from src.configurations.engine_confs import EngineConf
from src.configurations.sigma_confs import SigmaConf
from src.configurations.suite_confs import SuiteConf
from src.configurations.tracer_confs import TracerConf
from src.errors import BUCertError
from src.surfaces.homomorphisms import enumerate_homs
from src.surfaces.presentations import SurfaceCase
from src.symmetric.sigma_examples import decide_M2_cyclic, parity_obstruction_M2, witness_M1
from src.tracer.alpha_beta import alpha_beta, trace_alpha_beta
from src.tracer.registry import WitnessRegistry
from src.tracer.torus_action import check_free_action, lift_endpoints
from src.utils import SCHEMA_VERSION, Report, ScopedTimer

logger = logging.getLogger(__name__)
logging.basicConfig(format="%(asctime)s %(message)s", datefmt="%m/%d/%Y %I:%M:%S %p")


def presentation_suite(suite: SuiteConf) -> Report:
    report = Report(name="presentation")
    first, last = suite.presentation_n
    for n in range(first, last + 1):
        report.extend(verify_presentation(n))
        report.extend(check_relations_I(n))
    return report


def epsilon_suite(suite: SuiteConf) -> Report:
    report = Report(name="epsilon")
    first, last = suite.epsilon_n
    for n in range(first, last + 1):
        value = epsilon(full_twist(n))
        report.add("closed_form", value == n * (n - 1) // 2, (n,), value, n * (n - 1) // 2)
        report.add("odd_iff_2_3_mod_4", (value % 2 == 1) == (n % 4 in (2, 3)), (n,), value % 2)
        if n % 4 == 2:
            k = (n - 2) // 4
            report.add("value_4k_plus_2", value == (2 * k + 1) * (4 * k + 1), (n,), value, (2 * k + 1) * (4 * k + 1))
    return report


def decision_suite(suite: SuiteConf, provider: Callable, verify: bool = True) -> Report:
    """
    Decides every valid theta up to the configured bounds and checks the verdict against the
    closed form, the witness verification and the parity of the obstruction.
    """

    metadata = {"n_max": suite.decision_n_max, "m_max": suite.decision_m_max, "verify": verify}
    report = Report(name="decision", metadata=metadata)
    for case in SurfaceCase:
        for m in range(suite.decision_m_max + 1):
            if case == SurfaceCase.ORIENTABLE_I and m == 0:
                continue
            for n in range(2, suite.decision_n_max + 1):
                for count, theta in enumerate(enumerate_homs(case, m, n)):
                    if suite.decision_cap and count >= suite.decision_cap:
                        break
                    indices = (case.value, m, n, tuple(theta.residues()))
                    decision = decide(theta, alpha_beta=provider, verify=verify)
                    report.add("matches_predicate", decision.has_bu_property == bu_predicate(theta), indices)
                    if isinstance(decision.certificate, ParityObstruction):
                        report.add("obstruction_odd", decision.certificate.full_twist_eps % 2 == 1, indices)
                    elif verify:
                        report.add("witness_verified", decision.verified, indices, detail=decision.certificate.rule)
    return report


def _equal_variant(word: BraidWord, rng: np.random.Generator) -> BraidWord:
    """The same braid with a braid relation inserted at a random place."""

    n = word.n
    i = int(rng.integers(1, n))
    if n >= 3 and i < n - 1:
        relation = BraidWord(n, (i, i + 1, i, -(i + 1), -i, -(i + 1)))
    else:
        relation = BraidWord(n, (i, -i))
    cut = int(rng.integers(0, len(word.letters) + 1))
    return BraidWord(n, word.letters[:cut]) * relation * BraidWord(n, word.letters[cut:])


def oracle_suite(suite: SuiteConf) -> Report:
    report = Report(name="oracle", metadata={"pairs": suite.oracle_pairs})
    rng = np.random.default_rng(suite.seed)
    disagreements = 0
    for index in range(suite.oracle_pairs):
        n = int(rng.integers(2, suite.oracle_n_max + 1))

        def random_word() -> BraidWord:
            length = int(rng.integers(0, suite.oracle_length + 1))
            letters = rng.integers(1, n, size=length) * rng.choice([-1, 1], size=length)
            return BraidWord(n, tuple(int(x) for x in letters))

        w1 = random_word()
        w2 = _equal_variant(w1, rng) if index % 2 == 0 else random_word()
        garside, oracle = equal(w1, w2), artin_action_equal(w1, w2)
        if garside != oracle:
            disagreements += 1
            report.add("garside_vs_artin", False, (index,), w1, w2)
    report.add("disagreements", disagreements == 0, (), disagreements, 0)
    return report


def tracer_suite(suite: SuiteConf, tracer: TracerConf, registry: Optional[WitnessRegistry]) -> Report:
    report = Report(name="tracer")
    for k in suite.tracer_ks:
        report.extend(lift_endpoints(k, tracer.basepoint))
        with ScopedTimer(f"tracer k={k}"):
            alpha, beta, _ = alpha_beta(k, tracer, registry)
        report.add("pi2_alpha", alpha.klass.value == 2 * k, (k,), alpha.klass, 2 * k)
        report.add("pi2_beta", beta.klass.value == 1, (k,), beta.klass, 1)
        report.add("relator", equal(alpha.word * beta.word * alpha.word, beta.word), (k,), alpha.word, beta.word)
        if k == 1:
            finer = TracerConf(
                resolution=2 * tracer.resolution,
                projection_angle=tracer.projection_angle + 0.1,
                basepoint=tracer.basepoint_key,
                refinement_cap=tracer.refinement_cap,
                use_registry=False,
            )
            alpha2, beta2, _ = trace_alpha_beta(k, finer)
            report.add("stable_alpha", equal(alpha.word, alpha2.word), (k,), alpha.word, alpha2.word)
            report.add("stable_beta", equal(beta.word, beta2.word), (k,), beta.word, beta2.word)
    return report


def free_action_suite(suite: SuiteConf) -> Report:
    report = Report(name="free_action")
    for k in (1, 2, 3):
        report.extend(check_free_action(k, suite.free_action_trials, suite.seed))
    return report


def sigma_suite(suite: SuiteConf, sigma: SigmaConf) -> Report:
    report = Report(name="sigma")
    for n in suite.sigma_degrees:
        report.extend(witness_M1(n))
        report.extend(parity_obstruction_M2(n, sigma))
    restricted = decide_M2_cyclic(6, sigma)
    report.extend(restricted.report)
    report.add("m2_cyclic_verdict", restricted.has_bu_property is False, (6,), restricted.has_bu_property, False)
    return report


def run_suites(cfg: dict) -> Dict:
    """
    Runs the suites named in the mode settings and writes the summary when an output is set.

    Returns:
        dict: suite name -> report dict, plus the overall status.
    """

    suite: SuiteConf = cfg["mode"]["suite_settings"]
    tracer: TracerConf = cfg["tracer"]["tracer_settings"]
    engine: EngineConf = cfg["engine"]["engine_settings"]
    sigma: SigmaConf = cfg["sigma"]["sigma_settings"]
    registry = WitnessRegistry(engine.registry_path) if tracer.use_registry else None

    def provider(k: int):
        alpha, beta, _ = alpha_beta(k, tracer, registry)
        return alpha, beta

    suites = {
        "presentation": lambda: presentation_suite(suite),
        "epsilon": lambda: epsilon_suite(suite),
        "decision": lambda: decision_suite(suite, provider, engine.verify_witnesses),
        "oracle": lambda: oracle_suite(suite),
        "tracer": lambda: tracer_suite(suite, tracer, registry),
        "free_action": lambda: free_action_suite(suite),
        "sigma": lambda: sigma_suite(suite, sigma),
    }
    results: Dict[str, Dict] = {}
    failed: List[str] = []
    for name in suite.suites:
        timings: Dict[str, float] = {}
        try:
            with ScopedTimer(f"suite {name}", timings=timings):
                report = suites[name]()
        except BUCertError as exc:
            logger.error(f"Suite {name} aborted: {exc}")
            report = Report(name=name)
            report.add("completed", False, (), detail=str(exc))
        report.metadata["seconds"] = timings.get(f"suite {name}", 0.0)
        results[name] = report.to_dict()
        if not report.passed:
            failed.append(name)
        logger.warning(f"{name}: {report.count()} checks, {len(report.failures)} failures")
    summary = {"schema": SCHEMA_VERSION, "mode": cfg["mode"]["name"], "pass": not failed, "suites": results}
    if suite.output:
        with open(suite.output, "w") as f:
            json.dump(summary, f, indent=2)
    return summary
