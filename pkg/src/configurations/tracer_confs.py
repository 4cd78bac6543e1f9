__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

from fractions import Fraction
from typing import Tuple
import dataclasses
import math


@dataclasses.dataclass
class TracerConf:
    """
    Configuration of the geometric tracer.

    Attributes:
        resolution (int): samples per loop letter.
        projection_angle (float): direction of the projection used to read crossings. (in radians)
        basepoint (tuple): the torus point x_0, as two rationals ("1/8") or numbers.
        refinement_cap (int): maximal number of bisections around a sample interval.
        separation_tolerance (float): minimal distance between two strands.
        use_registry (bool): read and write the witness registry.
    """

    resolution: int = 1024
    projection_angle: float = 0.3
    basepoint: tuple = ("1/8", "0")
    refinement_cap: int = 40
    separation_tolerance: float = 1e-9
    use_registry: bool = True

    def __post_init__(self):
        self.resolution = int(self.resolution)
        self.projection_angle = float(self.projection_angle)
        self.refinement_cap = int(self.refinement_cap)
        self.separation_tolerance = float(self.separation_tolerance)
        assert len(self.basepoint) == 2, "The basepoint must have two coordinates."
        try:
            self.basepoint = tuple(Fraction(str(x)) for x in self.basepoint)
        except (ValueError, ZeroDivisionError) as exc:
            raise AssertionError(f"The basepoint coordinates must be rationals, got {self.basepoint}.") from exc

        assert self.resolution >= 64, "The resolution must be at least 64."
        assert abs(self.projection_angle) < math.pi / 2, "The projection angle must be in (-pi/2, pi/2)."
        assert self.refinement_cap > 0, "The refinement cap must be greater than 0."
        assert self.separation_tolerance > 0.0, "The separation tolerance must be greater than 0."
        assert type(self.use_registry) is bool, "use_registry must be a boolean."

    @property
    def basepoint_key(self) -> Tuple[str, str]:
        return tuple(str(x) for x in self.basepoint)
