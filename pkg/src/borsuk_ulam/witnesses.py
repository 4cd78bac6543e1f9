__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

"""
Witness homomorphisms psi: pi_1(M_tau) -> B_{Z_n} with pi_2 o psi = theta. Their existence means
the quadruple (M, Z_n, tau; R^2) does not have the Borsuk-Ulam property."""

from typing import Dict, List
import logging

import numpy as np

from src.braids.braid_word import BraidWord, product
from src.braids.cyclic_braid import CyclicBraid, pi2
from src.braids.garside import equal, is_identity
from src.borsuk_ulam.certificates import WitnessHom
from src.errors import DomainError, InputError
from src.surfaces.homomorphisms import CyclicHom, integer_lift, theta_of_delta, torsion_generator_image
from src.surfaces.presentations import SurfaceCase, SurfacePresentation, as_group
from src.surfaces.smith_normal_form import abelianization
from src.utils import Report

logger = logging.getLogger(__name__)


def _g_power(n: int, exponent: int) -> CyclicBraid:
    return CyclicBraid.g(n) ** exponent


def _require_surface(theta: CyclicHom) -> SurfacePresentation:
    if not isinstance(theta.source, SurfacePresentation):
        raise DomainError("This witness rule is stated for the standard surface presentations.")
    return theta.source


def witness_prop1(theta: CyclicHom) -> WitnessHom:
    """
    Witness when theta(delta_hat) = 0: a_i -> g^{b_i}, delta_hat -> 1, v -> g^{theta(v)}.

    Raises:
        DomainError: if theta(delta_hat) is not 0.
    """

    source = _require_surface(theta)
    if not theta_of_delta(theta).is_zero():
        raise DomainError(f"witness_prop1 needs theta(delta_hat) = 0, got {theta_of_delta(theta)}.")
    n = theta.n
    images = {}
    for name in source.generators:
        if name == source.delta_hat:
            images[name] = CyclicBraid.identity(n)
        else:
            images[name] = _g_power(n, theta.images[name].value)
    return WitnessHom(source, n, images, rule="g-powers")


def check_alpha_beta(alpha: CyclicBraid, beta: CyclicBraid, k: int) -> None:
    """
    Raises:
        InputError: unless pi2(alpha) = 2k, pi2(beta) = 1 and alpha beta alpha beta^-1 = 1 in B_4k.
    """

    n = 4 * k
    if alpha.n != n or beta.n != n:
        raise InputError(f"alpha and beta must live on {n} strands.")
    if pi2(alpha).value != 2 * k:
        raise InputError(f"pi2(alpha) = {pi2(alpha)}, expected {2 * k} mod {n}.")
    if pi2(beta).value != 1:
        raise InputError(f"pi2(beta) = {pi2(beta)}, expected 1 mod {n}.")
    if not is_identity(alpha.word * beta.word * alpha.word * beta.word.inverse()):
        raise InputError("alpha beta alpha beta^-1 is not the identity braid.")


def witness_prop2(theta: CyclicHom, alpha: CyclicBraid, beta: CyclicBraid) -> WitnessHom:
    """
    Witness for n = 4k and theta(delta_hat) = 2k, built from a pair alpha, beta with
    pi2(alpha) = 2k, pi2(beta) = 1 and alpha beta alpha = beta.

    With z = theta(v) (z = 0 in the odd genus case) and psi(v) = beta^z:

    * z odd: delta_hat -> alpha, a_i -> g^{b_i}.
    * z even: j is the smallest index with b_j odd and j_hat its partner in the commutator
      [a_1, a_2], [a_3, a_4], ...; then delta_hat -> alpha^{(-1)^j}, a_j -> beta^{b_j},
      a_{j_hat} -> alpha^-1 beta^{b_{j_hat} + 2k}, and a_i -> g^{b_i} otherwise.

    Raises:
        DomainError: if n is not a multiple of 4 or theta(delta_hat) != 2k.
        InputError: if alpha, beta do not satisfy the conditions above.
    """

    source = _require_surface(theta)
    n = theta.n
    if n % 4 != 0 or source.delta_hat is None:
        raise DomainError(f"witness_prop2 needs n = 4k and a non-orientable source, got n={n}, {source.describe()}.")
    k = n // 4
    if theta_of_delta(theta).value != 2 * k:
        raise DomainError(f"witness_prop2 needs theta(delta_hat) = {2 * k}, got {theta_of_delta(theta)}.")
    check_alpha_beta(alpha, beta, k)

    b = {i: theta.images[f"a{i}"].value for i in range(1, 2 * source.m + 1)}
    z = theta.images["v"].value if source.case == SurfaceCase.NON_ORIENTABLE_EVEN_III else 0
    images: Dict[str, CyclicBraid] = {}
    if "v" in source.generators:
        images["v"] = beta**z
    if z % 2 == 1:
        images[source.delta_hat] = alpha
        for i, value in b.items():
            images[f"a{i}"] = _g_power(n, value)
        rule = "alpha-beta-odd"
    else:
        odd = [i for i, value in b.items() if value % 2 == 1]
        if not odd:
            # Surjectivity forces an odd b_j when theta(delta_hat) and z are even.
            raise DomainError("No generator a_j with odd image, theta cannot be surjective.")
        j = odd[0]
        j_hat = j + 1 if j % 2 == 1 else j - 1
        images[source.delta_hat] = alpha ** ((-1) ** j)
        for i, value in b.items():
            if i == j:
                images[f"a{i}"] = beta ** b[j]
            elif i == j_hat:
                images[f"a{i}"] = alpha.inverse() * beta ** (b[j_hat] + 2 * k)
            else:
                images[f"a{i}"] = _g_power(n, value)
        rule = "alpha-beta-even"
    return WitnessHom(source, n, images, rule=rule)


def _shorten_lift(lift: List[int], kernel: np.ndarray, n: int, passes: int = 4) -> List[int]:
    """Subtracts n times kernel vectors while that lowers the l1 norm of the lift."""

    b = np.array(lift, dtype=object)
    for _ in range(passes):
        improved = False
        for column in kernel.T:
            step = n * column
            for sign in (1, -1):
                candidate = b - sign * step
                if sum(abs(int(x)) for x in candidate) < sum(abs(int(x)) for x in b):
                    b = candidate
                    improved = True
        if not improved:
            break
    return [int(x) for x in b]


def witness_lift(theta: CyclicHom) -> WitnessHom:
    """
    Witness psi(x) = g^{b_x} for an integer lift b of theta with R b = 0. Such a lift exists exactly
    when theta vanishes on the torsion of H_1, and it works for any finite presentation.

    Raises:
        DomainError: if theta_Ab is nonzero on the torsion.
    """

    lift = integer_lift(theta)
    if lift is None:
        raise DomainError(f"theta_Ab(delta) = {torsion_generator_image(theta)} is nonzero, no integer lift exists.")
    smith = abelianization(theta.source).smith
    kernel = smith.right[:, smith.rank :]
    lift = _shorten_lift(lift, kernel, theta.n)
    logger.debug(f"Integer lift with max |b| = {max((abs(x) for x in lift), default=0)}")
    n = theta.n
    images = {name: _g_power(n, value) for name, value in zip(theta.source.generators, lift)}
    return WitnessHom(theta.source, n, images, rule="lift")


def relator_image(psi: WitnessHom, relator) -> BraidWord:
    words = []
    for letter in relator:
        image = psi.images[psi.source.generators[abs(letter) - 1]].word
        words.append(image if letter > 0 else image.inverse())
    return product(words, psi.n)


def verify_witness(psi: WitnessHom, theta: CyclicHom) -> Report:
    """
    Checks that psi is a homomorphism (every relator goes to the identity braid) and that
    pi2(psi(x)) = theta(x) on every generator.

    Returns:
        Report: one entry per relator and one per generator.
    """

    if psi.n != theta.n or tuple(psi.source.generators) != tuple(theta.source.generators):
        raise InputError("Witness and homomorphism must share the presentation and n.")
    group = as_group(psi.source)
    report = Report(name=f"verify_witness({psi.rule})", metadata={"n": psi.n, "rule": psi.rule})
    for index, relator in enumerate(group.relators):
        image = relator_image(psi, relator)
        trivial = is_identity(image)
        report.add("relator_trivial", trivial, (index,), image, BraidWord.identity(psi.n))
    for name in group.generators:
        got, expected = pi2(psi.images[name]), theta.images[name]
        report.add("pi2_matches_theta", got == expected, (name,), str(got), str(expected))
    if not report.passed and psi.rule.startswith("alpha-beta"):
        for entry in report.failures:
            logger.error(
                f"Witness check failed for {psi.rule}: {entry.relation} {entry.indices} lhs={entry.lhs_word} "
                f"rhs={entry.rhs_word}"
            )
    return report


def witnesses_equal(first: WitnessHom, second: WitnessHom) -> bool:
    """Generator-wise braid equality of two witnesses on the same presentation."""

    if first.n != second.n or tuple(first.source.generators) != tuple(second.source.generators):
        return False
    return all(equal(first.images[name].word, second.images[name].word) for name in first.source.generators)
