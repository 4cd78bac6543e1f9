__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"
"""
Free Sigma_n actions with orbit surfaces of low genus.

* theta_1 on the orientable surface of genus 2: a_1, a_2 -> (1,2) and a_3, a_4 -> (1,n,...,2).
  The braids sigma_1 and g lift it, so the action has no Borsuk-Ulam property.
* theta_2 on the non-orientable surface of genus 3: c -> (1,2) and a_1, a_2 -> (1,n,...,2).
  No braid homomorphism lifts it, because the relator would have odd evaluation. This only
  rules out the sufficient criterion and does not decide the Borsuk-Ulam property itself.
* Restricted to theta_2^-1 of the cyclic subgroup, the action is a free Z_n action whose
  decision is read off a Reidemeister-Schreier presentation of the preimage.

Permutations are 0-based image tuples composed left to right, as in sympy."""

from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple
import collections
import dataclasses
import logging

import numpy as np
import sympy
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.solvers.diophantine import diophantine

from src.braids.braid_word import BraidWord, permutation_tuple
from src.braids.cyclic_braid import cyclic_class, cyclic_generator, cyclic_power, pi_compatible
from src.braids.garside import equal, is_identity
from src.braids.pure_braid import a_gen, all_a_gens, epsilon, g_word
from src.borsuk_ulam.certificates import Decision
from src.borsuk_ulam.engine import decide
from src.configurations.sigma_confs import SigmaConf
from src.errors import InputError, SearchError, UnsupportedError
from src.surfaces.homomorphisms import CyclicHom, torsion_generator_image
from src.surfaces.presentations import SurfacePresentation, Word, orientation_character
from src.surfaces.reidemeister_schreier import (
    SchreierPresentation,
    invert,
    perm_of_word,
    subgroup_presentation,
)
from src.surfaces.smith_normal_form import abelianization
from src.utils import Report

logger = logging.getLogger(__name__)

Perm = Tuple[int, ...]

PART2_LABEL = "obstruction to the sufficient criterion"


def prop51_part2_label() -> str:
    """Verdict label of the theta_2 obstruction. It never claims the Borsuk-Ulam property."""

    return PART2_LABEL


def transposition(i: int, j: int, n: int) -> Perm:
    """(i, j) with 1-based entries."""

    images = list(range(n))
    images[i - 1], images[j - 1] = j - 1, i - 1
    return tuple(images)


@dataclasses.dataclass(frozen=True)
class SymHom:
    """
    Homomorphism from a surface group onto Sigma_n, given on generators.

    Args:
        source (SurfacePresentation): the orbit surface presentation.
        n (int): degree.
        images (dict): generator name -> permutation.
    """

    source: SurfacePresentation
    n: int
    images: Dict[str, Perm]

    def __post_init__(self):
        if set(self.images) != set(self.source.generators):
            raise InputError(f"Images must cover exactly {list(self.source.generators)}.")
        for name, image in self.images.items():
            if sorted(image) != list(range(self.n)):
                raise InputError(f"Image of {name} is not a permutation of {self.n} points.")

    def image_list(self) -> List[Perm]:
        return [tuple(self.images[name]) for name in self.source.generators]

    def __call__(self, word: Sequence[int]) -> Perm:
        return perm_of_word(word, self.image_list())

    def relator_image(self) -> Perm:
        return self(self.source.relator)

    def group_order(self) -> int:
        return int(PermutationGroup([Permutation(list(p)) for p in self.image_list()]).order())

    def validate(self) -> Report:
        report = Report(name=f"sym_hom(n={self.n})", metadata={"n": self.n})
        relator = self.relator_image()
        report.add("relator_maps_to_identity", relator == tuple(range(self.n)), (), str(relator), "identity")
        order = self.group_order()
        report.add("generates_sigma_n", order == factorial(self.n), (), order, factorial(self.n))
        return report

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "source": self.source.to_dict(),
            "images": {name: str(Permutation(list(self.images[name])).cyclic_form) for name in self.source.generators},
        }


def build_theta(which: int, n: int) -> SymHom:
    """
    theta_1 (orientable genus 2) or theta_2 (non-orientable genus 3) onto Sigma_n.

    Raises:
        InputError: if n <= 2 or which is not 1 or 2.
    """

    if n <= 2:
        raise InputError(f"The Sigma_n examples need n > 2, got n={n}.")
    swap = transposition(1, 2, n)
    cycle = cyclic_generator(n)
    if which == 1:
        source = SurfacePresentation("orientable", 2)
        images = {"a1": swap, "a2": swap, "a3": cycle, "a4": cycle}
    elif which == 2:
        source = SurfacePresentation("nonorientable-odd", 1)
        images = {"c": swap, "a1": cycle, "a2": cycle}
    else:
        raise InputError(f"which must be 1 or 2, got {which}.")
    theta = SymHom(source, n, images)
    report = theta.validate()
    assert report.passed, f"theta_{which} is not onto Sigma_{n}: {[e.relation for e in report.failures]}"
    return theta


def witness_M1(n: int, images: Optional[Dict[str, BraidWord]] = None) -> Report:
    """
    Checks the lift a_1, a_2 -> sigma_1 and a_3, a_4 -> g of theta_1: the relator goes to the
    identity braid and every braid permutation is the theta_1 image.

    Args:
        n (int): degree, n > 2.
        images (dict): optional replacement braids, by generator name.
    """

    theta = build_theta(1, n)
    psi = {"a1": BraidWord.sigma(1, n), "a2": BraidWord.sigma(1, n), "a3": g_word(n), "a4": g_word(n)}
    psi.update(images or {})
    report = Report(name=f"witness_M1(n={n})", metadata={"n": n})
    report.extend(theta.validate())
    relator = BraidWord.identity(n)
    for letter in theta.source.relator:
        image = psi[theta.source.generators[abs(letter) - 1]]
        relator = relator * (image if letter > 0 else image.inverse())
    report.add("relator_trivial", is_identity(relator), (), relator, BraidWord.identity(n))
    for name in theta.source.generators:
        report.add(
            "permutation_matches",
            pi_compatible(psi[name], theta.images[name]),
            (name,),
            str(permutation_tuple(psi[name])),
            str(theta.images[name]),
        )
    report.metadata["verdict"] = "no Borsuk-Ulam property" if report.passed else "undecided"
    return report


def _random_pure(n: int, rng: np.random.Generator, length: int = 4) -> BraidWord:
    pairs = all_a_gens(n)
    word = BraidWord.identity(n)
    for _ in range(int(rng.integers(0, length + 1))):
        i, j = pairs[int(rng.integers(0, len(pairs)))]
        factor = a_gen(i, j, n).word
        word = word * (factor if rng.integers(0, 2) else factor.inverse())
    return word


def parity_obstruction_M2(n: int, conf: Optional[SigmaConf] = None) -> Report:
    """
    A lift psi of theta_2 would send c to x sigma_1, a_1 to y g and a_2 to z g with x, y, z pure.
    The relator image then factors as

        x (sigma_1 x sigma_1^-1) A_{1,2} y (g z g^-1) (g y^-1 g^-1) z^-1,

    a product of pure braids whose evaluation is 2 eps(x) + 1, which cannot vanish. The report
    checks the invariance of eps under conjugation by sigma_1 and g on every A_{i,j}, the
    factorisation on sampled x, y, z, and the parity conclusion symbolically.
    """

    conf = conf or SigmaConf()
    theta = build_theta(2, n)
    report = Report(name=f"parity_obstruction_M2(n={n})", metadata={"n": n})
    report.extend(theta.validate())
    s1, g = BraidWord.sigma(1, n), g_word(n)

    report.add("eps_A12", epsilon(a_gen(1, 2, n)) == 1, (1, 2), epsilon(a_gen(1, 2, n)), 1)
    for i, j in all_a_gens(n):
        a = a_gen(i, j, n).word
        by_sigma = epsilon(s1 * a * s1.inverse())
        by_g = epsilon(g * a * g.inverse())
        report.add("eps_invariance", by_sigma == by_g == 1, (i, j), by_sigma, by_g)

    ex, ey, ez = sympy.symbols("eps_x eps_y eps_z", integer=True)
    symbolic = [ex, ex, sympy.Integer(1), ey, ez, -ey, -ez]
    evaluation = sympy.expand(sum(symbolic))
    solutions = diophantine(evaluation)
    report.add(
        "parity_contradiction",
        evaluation == 2 * ex + 1 and not solutions,
        (),
        str(evaluation),
        "0",
        detail=f"integer solutions: {sorted(solutions)}",
    )

    rng = np.random.default_rng(conf.seed)
    for sample in range(conf.samples):
        x, y, z = (_random_pure(n, rng) for _ in range(3))
        lhs = x * s1 * x * s1 * y * g * z * y.inverse() * g.inverse() * z.inverse()
        factors = [
            x,
            s1 * x * s1.inverse(),
            a_gen(1, 2, n).word,
            y,
            g * z * g.inverse(),
            g * y.inverse() * g.inverse(),
            z.inverse(),
        ]
        rhs = BraidWord.identity(n)
        for factor in factors:
            rhs = rhs * factor
        report.add("relator_factorisation", equal(lhs, rhs), (sample,), lhs, rhs)
        values = {ex: epsilon(x), ey: epsilon(y), ez: epsilon(z)}
        concrete = [epsilon(factor) for factor in factors]
        expected = [int(term.subs(values)) for term in symbolic]
        report.add("factor_evaluations", concrete == expected, (sample,), str(concrete), str(expected))

    report.metadata["verdict"] = prop51_part2_label()
    return report


def find_conjugator_words(theta: SymHom, targets: Sequence[Tuple[int, int]], depth: int = 8) -> List[Word]:
    """
    For each 1-based pair (i, j), the shortest word w, first in BFS order, such that theta(w c w^-1)
    is the transposition (i, j). Only the pair theta(w)^-1 {1, 2} matters, so the search runs on pairs.

    Raises:
        SearchError: if a pair is not reached within the depth.
    """

    n = theta.n
    images = theta.image_list()
    letters = [sign * x for x in range(1, len(images) + 1) for sign in (1, -1)]
    inverses = {letter: invert(images[letter - 1]) if letter > 0 else images[-letter - 1] for letter in letters}
    start = frozenset((0, 1))
    found: Dict[frozenset, Word] = {start: ()}
    queue = collections.deque([start])
    wanted = {frozenset((i - 1, j - 1)) for i, j in targets}
    while queue and not wanted <= set(found):
        pair = queue.popleft()
        word = found[pair]
        if len(word) >= depth:
            continue
        for letter in letters:
            # Prepending x maps the pair through theta(x)^-1.
            nxt = frozenset(inverses[letter][p] for p in pair)
            if nxt not in found:
                found[nxt] = (letter,) + word
                queue.append(nxt)
    missing = [pair for pair in targets if frozenset((pair[0] - 1, pair[1] - 1)) not in found]
    if missing:
        raise SearchError(f"No conjugator of length <= {depth} for {missing}; raise preimage_search_depth.")
    return [found[frozenset((i - 1, j - 1))] for i, j in targets]


def kernel_word(theta: SymHom, depth: int = 8) -> Tuple[Word, List[Word]]:
    """
    w = (prod_i l_i c l_i^-1) a_1^{2k+1} for n = 4k + 2, where l_i is a word with
    theta(l_i c l_i^-1) = (i, 2k+1+i).
    """

    n = theta.n
    half = n // 2
    conjugators = find_conjugator_words(theta, [(i, half + i) for i in range(1, half + 1)], depth)
    c = theta.source.index_of("c")
    a1 = theta.source.index_of("a1")
    word: List[int] = []
    for conjugator in conjugators:
        word += list(conjugator) + [c] + [-x for x in reversed(conjugator)]
    word += [a1] * half
    return tuple(word), conjugators


@dataclasses.dataclass
class CyclicRestriction:
    """
    Decision for the Z_n action obtained by restricting the theta_2 action to the preimage of the
    cyclic subgroup. decision is None when n != 2 mod 4, where the verdict needs no computation.
    """

    n: int
    has_bu_property: bool
    report: Report
    decision: Optional[Decision] = None
    schreier: Optional[SchreierPresentation] = None

    def to_dict(self) -> Dict:
        out = {
            "n": self.n,
            "has_bu_property": self.has_bu_property,
            "report": self.report.to_dict(),
        }
        if self.decision is not None:
            out["decision"] = self.decision.to_dict()
        if self.schreier is not None:
            out["index"] = self.schreier.index
            out["generators"] = self.schreier.presentation.n_generators
            out["relators"] = len(self.schreier.presentation.relators)
        return out


def decide_M2_cyclic(n: int, conf: Optional[SigmaConf] = None) -> CyclicRestriction:
    """
    Decides the Borsuk-Ulam property of the restricted Z_n action.

    For n = 4k + 2 this builds w in the kernel of theta_2 with odd orientation character, computes
    the Reidemeister-Schreier presentation of theta_2^-1(<(1,n,...,2)>) and decides the induced
    homomorphism onto Z_n on that presentation.

    Raises:
        UnsupportedError: when n exceeds full_pipeline_max_n and large instances are not allowed.
        SearchError: when no conjugator word is found within the search depth.
    """

    conf = conf or SigmaConf()
    theta = build_theta(2, n)
    report = Report(name=f"decide_M2_cyclic(n={n})", metadata={"n": n})
    if n % 4 != 2:
        report.add("short_circuit", True, (), detail="n != 2 mod 4, no Borsuk-Ulam property")
        return CyclicRestriction(n=n, has_bu_property=False, report=report)
    if n > conf.full_pipeline_max_n and not conf.allow_large:
        raise UnsupportedError(f"n={n} has index {factorial(n - 1)}; set allow_large to run it.")

    word, conjugators = kernel_word(theta, conf.preimage_search_depth)
    identity = tuple(range(n))
    report.add("w_in_kernel", theta(word) == identity, (), str(theta(word)), str(identity))
    sign = orientation_character(theta.source, word)
    report.add("w_orientation_reversing", sign == -1, (), sign, -1)
    report.metadata["conjugators"] = [theta.source.as_group().format_word(w) for w in conjugators]

    subgroup = [cyclic_power(n, m) for m in range(n)]
    schreier = subgroup_presentation(theta.source, theta.image_list(), subgroup)
    report.add("index", schreier.index == factorial(n - 1), (), schreier.index, factorial(n - 1))
    ab = abelianization(schreier.presentation)
    report.add("torsion", ab.torsion == [2], (), str(ab.torsion), "[2]")

    residues = {
        name: cyclic_class(image) for name, image in zip(schreier.presentation.generators, schreier.generator_images)
    }
    restricted = CyclicHom(schreier.presentation, n, residues)
    delta = torsion_generator_image(restricted)
    report.add("theta_delta_zero", delta.is_zero(), (), str(delta), "0")

    decision = decide(restricted)
    if decision.report is not None:
        report.extend(decision.report)
    logger.info(f"Restricted Z_{n} action: index {schreier.index}, has_bu_property={decision.has_bu_property}")
    return CyclicRestriction(
        n=n, has_bu_property=decision.has_bu_property, report=report, decision=decision, schreier=schreier
    )
