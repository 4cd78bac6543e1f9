__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

from typing import Optional
import dataclasses
import os

REGISTRY_ENV = "BUCERT_REGISTRY"
DEFAULT_REGISTRY = os.path.join("~", ".cache", "bucert", "witness_registry.json")


@dataclasses.dataclass
class EngineConf:
    """
    Configuration of the decision engine.

    Attributes:
        verify_witnesses (bool): check every witness by braid equality before returning it.
        registry_path (str): location of the witness registry. The BUCERT_REGISTRY environment
            variable takes precedence.
    """

    verify_witnesses: bool = True
    registry_path: Optional[str] = None

    def __post_init__(self):
        assert type(self.verify_witnesses) is bool, "verify_witnesses must be a boolean."
        env = os.environ.get(REGISTRY_ENV)
        if env:
            self.registry_path = env
        elif self.registry_path is None:
            self.registry_path = DEFAULT_REGISTRY
        assert type(self.registry_path) is str, "registry_path must be a string."
        self.registry_path = os.path.expanduser(self.registry_path)
