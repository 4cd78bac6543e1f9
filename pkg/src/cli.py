__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"
"""
Command line front end. Every command prints one JSON document on standard output.

Exit status: 0 when the command succeeds, 1 when a verification fails, 2 on bad input."""

from typing import Any, Callable, Dict, List, Optional
import argparse
import json
import logging
import sys

from src.braids.braid_word import BraidWord, format_cycles, permutation_tuple
from src.braids.cyclic_braid import verify_presentation
from src.braids.garside import equal, normal_form
from src.braids.pure_braid import check_relations_I, epsilon
from src.borsuk_ulam.certificates import ParityObstruction
from src.borsuk_ulam.engine import decide, obstruction_certificate
from src.configurations.engine_confs import EngineConf
from src.configurations.sigma_confs import SigmaConf
from src.configurations.tracer_confs import TracerConf
from src.errors import BUCertError, DomainError, InputError, SearchError, TracingError
from src.surfaces.homomorphisms import hom_from_dict
from src.symmetric.sigma_examples import decide_M2_cyclic, parity_obstruction_M2, witness_M1
from src.tracer.alpha_beta import alpha_beta
from src.tracer.registry import WitnessRegistry
from src.utils import SCHEMA_VERSION

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


class Outcome:
    """JSON body, exit status and an optional prose summary."""

    def __init__(self, body: Dict[str, Any], status: int = EXIT_OK, summary: str = ""):
        self.body = dict(body)
        self.body.setdefault("schema", SCHEMA_VERSION)
        self.status = status
        self.summary = summary


def _report_outcome(report, summary: str) -> Outcome:
    status = EXIT_OK if report.passed else EXIT_FAILED
    return Outcome(report.to_dict(), status, f"{summary}: {report.count()} checks, {len(report.failures)} failures")


def _read_instance(path: str):
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except OSError as exc:
        raise InputError(f"Cannot read {path}: {exc}") from exc
    except ValueError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    return hom_from_dict(data)


def braid_command(args: argparse.Namespace) -> Outcome:
    words = [BraidWord.parse(text) for text in args.words]
    expected = {"eq": 2, "nf": 1, "perm": 1, "eps": 1}[args.action]
    if len(words) != expected:
        raise InputError(f"braid {args.action} takes {expected} word(s), got {len(words)}.")
    if args.action == "eq":
        result = equal(words[0], words[1])
        return Outcome({"equal": result}, summary=f"equal: {result}")
    word = words[0]
    if args.action == "nf":
        form = normal_form(word)
        return Outcome({"normal_form": str(form), "word": str(form.to_word())}, summary=str(form))
    if args.action == "perm":
        images = permutation_tuple(word)
        cycles = format_cycles(images)
        return Outcome({"permutation": list(images), "cycles": cycles}, summary=cycles)
    value = epsilon(word)
    return Outcome({"epsilon": value}, summary=f"eps = {value}")


def present_command(args: argparse.Namespace) -> Outcome:
    report = verify_presentation(args.n)
    report.extend(check_relations_I(args.n))
    return _report_outcome(report, f"presentation of B_Z{args.n}")


def _provider(args: argparse.Namespace) -> Callable:
    tracer = TracerConf(use_registry=not getattr(args, "no_registry", False))
    registry = WitnessRegistry(EngineConf().registry_path) if tracer.use_registry else None

    def provider(k: int):
        alpha, beta, _ = alpha_beta(k, tracer, registry)
        return alpha, beta

    return provider


def bu_command(args: argparse.Namespace) -> Outcome:
    theta = _read_instance(args.file)
    if args.action == "obstruct":
        certificate = obstruction_certificate(theta)
        return Outcome({"obstruction": certificate.to_dict()}, summary=certificate.identity)
    engine = EngineConf(verify_witnesses=not args.no_verify)
    decision = decide(theta, alpha_beta=_provider(args), verify=engine.verify_witnesses)
    status = EXIT_OK if decision.verified else EXIT_FAILED
    if args.action == "witness":
        if isinstance(decision.certificate, ParityObstruction):
            raise DomainError("The instance has the Borsuk-Ulam property, so no witness exists.")
        body = {"witness": decision.certificate.to_dict()}
        if decision.report is not None:
            body["verification"] = decision.report.to_dict()
        return Outcome(body, status, f"witness rule {decision.certificate.rule}")
    verdict = "has" if decision.has_bu_property else "does not have"
    return Outcome(decision.to_dict(), status, f"The action {verdict} the Borsuk-Ulam property.")


def trace_command(args: argparse.Namespace) -> Outcome:
    tracer = TracerConf(
        resolution=args.resolution,
        projection_angle=args.angle,
        basepoint=tuple(args.basepoint),
        use_registry=not args.no_registry,
    )
    registry = WitnessRegistry(EngineConf().registry_path) if tracer.use_registry else None
    alpha, beta, provenance = alpha_beta(args.k, tracer, registry)
    body = {
        "alpha": str(alpha.word),
        "beta": str(beta.word),
        "pi2": {"alpha": alpha.klass.value, "beta": beta.klass.value},
        "provenance": provenance,
    }
    return Outcome(body, summary=f"alpha: {len(alpha.word)} letters, beta: {len(beta.word)} letters")


def examples_command(args: argparse.Namespace) -> Outcome:
    sigma = SigmaConf(allow_large=args.allow_large)
    if args.case == "m1":
        return _report_outcome(witness_M1(args.n), f"theta_1 lift on {args.n} strands")
    if args.case == "m2-parity":
        report = parity_obstruction_M2(args.n, sigma)
        outcome = _report_outcome(report, f"theta_2 parity obstruction on {args.n} strands")
        outcome.body["label"] = report.metadata["verdict"]
        return outcome
    result = decide_M2_cyclic(args.n, sigma)
    status = EXIT_OK if result.report.passed else EXIT_FAILED
    verdict = "has" if result.has_bu_property else "does not have"
    return Outcome(result.to_dict(), status, f"The restricted Z_{args.n} action {verdict} the Borsuk-Ulam property.")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bucert", description="Borsuk-Ulam certificates for free Z_n actions")
    parser.add_argument("--human", action="store_true", help="Also print a prose summary on stderr")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at info level")
    commands = parser.add_subparsers(dest="command", required=True)

    braid = commands.add_parser("braid", help="Braid calculator")
    braid.add_argument("action", choices=["eq", "nf", "perm", "eps"])
    braid.add_argument("words", nargs="+", help='Braid words such as "n=3 1 2 -1"')
    braid.set_defaults(handler=braid_command)

    present = commands.add_parser("present", help="Check the presentation of B_Z_n")
    present.add_argument("action", choices=["verify"])
    present.add_argument("--n", type=int, required=True)
    present.set_defaults(handler=present_command)

    bu = commands.add_parser("bu", help="Borsuk-Ulam decision")
    bu.add_argument("action", choices=["decide", "witness", "obstruct"])
    bu.add_argument("-f", "--file", required=True, help="Instance file (JSON)")
    bu.add_argument("--no-registry", action="store_true", help="Do not use the witness registry")
    bu.add_argument("--no-verify", action="store_true", help="Skip the braid equality check of the witness")
    bu.set_defaults(handler=bu_command)

    trace = commands.add_parser("trace", help="Trace alpha and beta for Z_4k")
    trace.add_argument("--k", type=int, required=True)
    trace.add_argument("--resolution", type=int, default=1024)
    trace.add_argument("--angle", type=float, default=0.3)
    trace.add_argument("--basepoint", nargs=2, default=["1/8", "0"], metavar=("A", "B"))
    trace.add_argument("--no-registry", action="store_true")
    trace.set_defaults(handler=trace_command)

    examples = commands.add_parser("examples", help="Symmetric group examples")
    examples.add_argument("family", choices=["sigma"])
    examples.add_argument("--n", type=int, required=True)
    examples.add_argument("--case", choices=["m1", "m2-parity", "m2-cyclic"], required=True)
    examples.add_argument("--allow-large", action="store_true")
    examples.set_defaults(handler=examples_command)
    return parser


def _error_outcome(exc: BUCertError) -> Outcome:
    status = EXIT_FAILED if isinstance(exc, (TracingError, SearchError)) else EXIT_INPUT
    body = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, TracingError) and exc.interval is not None:
        body["interval"] = list(exc.interval)
    return Outcome(body, status, f"{type(exc).__name__}: {exc}")


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        format="%(asctime)s %(message)s",
        datefmt="%m/%d/%Y %I:%M:%S %p",
        level=logging.INFO if args.verbose else logging.WARNING,
    )
    logging.getLogger("numba").setLevel(logging.WARNING)
    try:
        outcome = args.handler(args)
    except BUCertError as exc:
        outcome = _error_outcome(exc)
    except (AssertionError, ValueError) as exc:
        # Configuration checks and argument conversions.
        outcome = Outcome({"error": "InputError", "message": str(exc)}, EXIT_INPUT, str(exc))
    json.dump(outcome.body, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")
    if args.human and outcome.summary:
        sys.stderr.write(outcome.summary + "\n")
    return outcome.status


if __name__ == "__main__":
    sys.exit(main())
