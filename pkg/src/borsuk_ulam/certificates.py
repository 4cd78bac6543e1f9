__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

from typing import Any, Dict, Optional, Union
import dataclasses

from src.braids.cyclic_braid import CyclicBraid, ZnElement
from src.errors import InputError
from src.surfaces.homomorphisms import Presentation
from src.utils import SCHEMA_VERSION, Report


@dataclasses.dataclass(frozen=True)
class WitnessHom:
    """
    A homomorphism psi from the orbit surface group to B_{Z_n}, given on generators.

    Args:
        source (SurfacePresentation | GroupPresentation): the presentation psi is defined on.
        n (int): number of strands.
        images (dict): generator name -> CyclicBraid.
        rule (str): the construction that produced it.
    """

    source: Presentation
    n: int
    images: Dict[str, CyclicBraid]
    rule: str = "manual"

    def __post_init__(self):
        if set(self.images) != set(self.source.generators):
            raise InputError(f"Witness images must cover exactly {list(self.source.generators)}.")
        for name, image in self.images.items():
            if image.n != self.n:
                raise InputError(f"Image of {name} lives on {image.n} strands, expected {self.n}.")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rule": self.rule,
            "n": self.n,
            "images": {name: str(self.images[name].word) for name in self.source.generators},
            "pi2": {name: self.images[name].klass.value for name in self.source.generators},
        }


@dataclasses.dataclass(frozen=True)
class ParityObstruction:
    """
    The equation 2 eps(w_delta) + eps(Delta_n^2) = 0 in the integers, with eps(Delta_n^2) odd.

    Args:
        n (int): 4k + 2.
        theta_delta (ZnElement): the image of the distinguished element, 2k + 1.
        full_twist_eps (int): eps of the full twist, computed from the braid word.
    """

    n: int
    theta_delta: ZnElement
    full_twist_eps: int

    def __post_init__(self):
        assert self.n % 4 == 2, "The parity obstruction needs n = 4k + 2."
        assert self.full_twist_eps % 2 == 1, "eps of the full twist must be odd."

    @property
    def k(self) -> int:
        return (self.n - 2) // 4

    @property
    def identity(self) -> str:
        return f"2*eps(w_delta) + {self.full_twist_eps} = 0"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "theta_delta": str(self.theta_delta),
            "full_twist_eps": self.full_twist_eps,
            "identity": self.identity,
            "unsatisfiable": True,
        }


Certificate = Union[WitnessHom, ParityObstruction]


@dataclasses.dataclass
class Decision:
    """
    Borsuk-Ulam verdict for (M, Z_n, tau; R^2) with its certificate. The verdict is true exactly
    when the certificate is a parity obstruction.
    """

    has_bu_property: bool
    certificate: Certificate
    report: Optional[Report] = None

    def __post_init__(self):
        if self.has_bu_property != isinstance(self.certificate, ParityObstruction):
            raise InputError("A positive verdict needs a parity obstruction and a negative one a witness.")

    @property
    def verified(self) -> bool:
        return self.report is None or self.report.passed

    def to_dict(self) -> Dict[str, Any]:
        kind = "parity_obstruction" if isinstance(self.certificate, ParityObstruction) else "witness"
        out = {
            "schema": SCHEMA_VERSION,
            "has_bu_property": self.has_bu_property,
            "certificate": {"kind": kind, "data": self.certificate.to_dict()},
        }
        if self.report is not None:
            out["verification"] = self.report.to_dict()
        return out
