__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

import dataclasses


@dataclasses.dataclass
class SigmaConf:
    """
    Configuration of the symmetric group examples.

    Attributes:
        preimage_search_depth (int): longest word tried when lifting a permutation through theta_2.
        full_pipeline_max_n (int): largest degree for which the subgroup computation runs by default.
        allow_large (bool): run the subgroup computation beyond full_pipeline_max_n.
        samples (int): random pure braids used to check the factorisation identity.
        seed (int): seed of those samples.
    """

    preimage_search_depth: int = 8
    full_pipeline_max_n: int = 6
    allow_large: bool = False
    samples: int = 5
    seed: int = 0

    def __post_init__(self):
        self.preimage_search_depth = int(self.preimage_search_depth)
        self.full_pipeline_max_n = int(self.full_pipeline_max_n)
        self.samples = int(self.samples)
        self.seed = int(self.seed)
        assert type(self.allow_large) is bool, "allow_large must be a boolean."

        assert self.preimage_search_depth > 0, "The preimage search depth must be greater than 0."
        assert self.full_pipeline_max_n >= 3, "full_pipeline_max_n must be at least 3."
        assert self.samples >= 0, "The number of samples must be greater or equal to 0."
