__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

"""
Homomorphisms theta: pi_1(M_tau) -> Z_n, given by generator images.

A free Z_n action on a surface M is encoded by the surjection of the fundamental group of its
orbit surface onto Z_n whose kernel is pi_1(M)."""

from typing import Dict, Iterator, List, Optional, Sequence, Union
import dataclasses
import itertools
import logging
import math

import numpy as np

from src.braids.cyclic_braid import ZnElement
from src.errors import InputError
from src.surfaces.presentations import GroupPresentation, SurfaceCase, SurfacePresentation, as_group
from src.surfaces.smith_normal_form import abelianization, evaluate_row
from src.utils import Report

logger = logging.getLogger(__name__)

Presentation = Union[SurfacePresentation, GroupPresentation]


@dataclasses.dataclass(frozen=True)
class CyclicHom:
    """
    Args:
        source (SurfacePresentation | GroupPresentation): presentation of the orbit surface group.
        n (int): order of the cyclic group.
        images (dict): generator name -> ZnElement (ints are accepted and reduced mod n).
    """

    source: Presentation
    n: int
    images: Dict[str, ZnElement]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError(f"n must be a positive integer, got {self.n}.")
        generators = self.source.generators
        missing = [name for name in generators if name not in self.images]
        unknown = [name for name in self.images if name not in generators]
        if missing or unknown:
            raise InputError(f"theta images must cover exactly {list(generators)}; missing {missing}, unknown {unknown}.")
        coerced = {}
        for name in generators:
            value = self.images[name]
            if isinstance(value, ZnElement):
                if value.n != self.n:
                    raise InputError(f"Image of {name} is mod {value.n}, expected mod {self.n}.")
                coerced[name] = value
            else:
                coerced[name] = ZnElement(self.n, int(value))
        object.__setattr__(self, "images", coerced)

    def residues(self) -> List[int]:
        """Images in generator order, as canonical residues 0..n-1."""

        return [self.images[name].value for name in self.source.generators]

    def __call__(self, word: Sequence[int]) -> ZnElement:
        residues = self.residues()
        total = 0
        for letter in word:
            total += residues[abs(letter) - 1] if letter > 0 else -residues[abs(letter) - 1]
        return ZnElement(self.n, total)

    def image_of(self, name: str) -> ZnElement:
        return self.images[name]

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "source": self.source.to_dict(),
            "theta": {name: self.images[name].value for name in self.source.generators},
        }


def validate_hom(theta: CyclicHom) -> Report:
    """
    Checks that every relator maps to 0 and that the images generate Z_n.

    Returns:
        Report: one entry per relator plus one for surjectivity.
    """

    group = as_group(theta.source)
    report = Report(name="validate_hom", metadata={"n": theta.n})
    for index, relator in enumerate(group.relators):
        image = theta(relator)
        report.add(
            "relator_maps_to_zero",
            image.is_zero(),
            (index,),
            group.format_word(relator),
            "0",
            detail=None if image.is_zero() else f"relator maps to {image}",
        )
    gcd = math.gcd(theta.n, *theta.residues()) if theta.residues() else theta.n
    report.add(
        "surjective",
        gcd == 1,
        (),
        detail=None if gcd == 1 else f"images generate the subgroup of index {gcd}",
    )
    return report


def require_valid(theta: CyclicHom) -> None:
    report = validate_hom(theta)
    if not report.passed:
        reasons = "; ".join(entry.detail or entry.relation for entry in report.failures)
        raise InputError(f"Invalid homomorphism to Z_{theta.n}: {reasons}")


def theta_of_delta(theta: CyclicHom) -> ZnElement:
    """
    Image of the distinguished element: 1 in case I, c in case II, u in case III. For generic
    presentations the distinguished element is the torsion class of the abelianization.
    """

    source = theta.source
    if isinstance(source, SurfacePresentation):
        if source.delta_hat is None:
            return ZnElement(theta.n, 0)
        return theta.images[source.delta_hat]
    return torsion_generator_image(theta)


def torsion_generator_image(theta: CyclicHom) -> ZnElement:
    """
    theta_Ab(delta), computed from the Smith form change of basis: delta is the order two class
    of H_1, written in the original generators as a row of V^-1.
    """

    ab = abelianization(theta.source)
    if not ab.torsion:
        return ZnElement(theta.n, 0)
    if ab.torsion != [2]:
        raise InputError(f"Expected torsion [2] for a non-orientable surface group, got {ab.torsion}.")
    row = ab.torsion_generator()
    return ZnElement(theta.n, evaluate_row(row, theta.residues()))


def integer_lift(theta: CyclicHom) -> Optional[List[int]]:
    """
    Integer vector b with b = theta (mod n) and R b = 0 for the exponent matrix R, or None when no
    such lift exists (exactly when theta is nonzero on the torsion of the abelianization).
    """

    ab = abelianization(theta.source)
    smith = ab.smith
    n = theta.n
    residues = np.array(theta.residues(), dtype=object)
    coordinates = smith.right_inverse.dot(residues) if len(residues) else residues
    lifted = []
    for position, value in enumerate(coordinates):
        d = smith.diagonal[position] if position < len(smith.diagonal) else 0
        if d != 0:
            if value % n != 0:
                return None
            lifted.append(0)
        else:
            value = int(value) % n
            lifted.append(value - n if value > n // 2 else value)
    if not len(lifted):
        return []
    b = smith.right.dot(np.array(lifted, dtype=object))
    return [int(x) for x in b]


def enumerate_homs(case: Union[SurfaceCase, str], m: int, n: int) -> Iterator[CyclicHom]:
    """All valid theta for a standard presentation, in lexicographic order of the residues."""

    source = SurfacePresentation(case, m)
    generators = source.generators
    for values in itertools.product(range(n), repeat=len(generators)):
        theta = CyclicHom(source, n, dict(zip(generators, values)))
        if validate_hom(theta).passed:
            yield theta


def count_homs(case: Union[SurfaceCase, str], m: int, n: int) -> int:
    return sum(1 for _ in enumerate_homs(case, m, n))


def hom_from_dict(data: Dict) -> CyclicHom:
    """
    Reads an instance: {"case": ..., "m": ..., "n": ..., "theta": {generator: residue}}.

    Raises:
        InputError: naming the missing or malformed field.
    """

    if not isinstance(data, dict):
        raise InputError("An instance must be a JSON object.")
    for field in ("case", "m", "n", "theta"):
        if field not in data:
            raise InputError(f"Instance field {field!r} is missing.")
    for field in ("m", "n"):
        if not isinstance(data[field], int) or isinstance(data[field], bool):
            raise InputError(f"Instance field {field!r} must be an integer, got {data[field]!r}.")
    if not isinstance(data["theta"], dict):
        raise InputError("Instance field 'theta' must map generator names to residues.")
    for name, value in data["theta"].items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise InputError(f"Instance field 'theta.{name}' must be an integer, got {value!r}.")
    source = SurfacePresentation(data["case"], data["m"])
    return CyclicHom(source, data["n"], dict(data["theta"]))
