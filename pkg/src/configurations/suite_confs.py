__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

import dataclasses


def _range(values) -> list:
    values = [int(v) for v in values]
    assert len(values) == 2 and values[0] <= values[1], "Ranges are given as [first, last]."
    return values


@dataclasses.dataclass
class SuiteConf:
    """
    Which verification suites run.py executes, and their bounds.

    Attributes:
        suites (list): names among presentation, epsilon, decision, oracle, tracer, free_action, sigma.
        presentation_n (list): [first, last] strand counts for the presentation checks.
        epsilon_n (list): [first, last] strand counts for the full twist evaluation.
        decision_n_max (int): largest n enumerated by the decision sweep.
        decision_m_max (int): largest handle count enumerated by the decision sweep.
        decision_cap (int): stop each (case, m, n) grid after this many instances, 0 for no cap.
        oracle_pairs (int): random word pairs compared against the Artin action.
        oracle_n_max (int): largest strand count of those words.
        oracle_length (int): largest length of those words.
        tracer_ks (list): values of k traced.
        free_action_trials (int): random rational points per k.
        sigma_degrees (list): degrees of the symmetric group examples.
        seed (int): seed of every random choice.
        output (str): optional path of the JSON summary.
    """

    suites: list = dataclasses.field(
        default_factory=lambda: ["presentation", "epsilon", "decision", "oracle", "tracer", "free_action", "sigma"]
    )
    presentation_n: list = dataclasses.field(default_factory=lambda: [2, 6])
    epsilon_n: list = dataclasses.field(default_factory=lambda: [2, 10])
    decision_n_max: int = 12
    decision_m_max: int = 2
    decision_cap: int = 0
    oracle_pairs: int = 10000
    oracle_n_max: int = 5
    oracle_length: int = 25
    tracer_ks: list = dataclasses.field(default_factory=lambda: [1, 2])
    free_action_trials: int = 1000
    sigma_degrees: list = dataclasses.field(default_factory=lambda: [3, 4, 5, 6])
    seed: int = 0
    output: str = ""

    def __post_init__(self):
        known = ["presentation", "epsilon", "decision", "oracle", "tracer", "free_action", "sigma"]
        self.suites = [str(s) for s in self.suites]
        assert all([s in known for s in self.suites]), f"Suites must be among {known}."
        self.presentation_n = _range(self.presentation_n)
        self.epsilon_n = _range(self.epsilon_n)
        self.decision_n_max = int(self.decision_n_max)
        self.decision_m_max = int(self.decision_m_max)
        self.decision_cap = int(self.decision_cap)
        self.oracle_pairs = int(self.oracle_pairs)
        self.oracle_n_max = int(self.oracle_n_max)
        self.oracle_length = int(self.oracle_length)
        self.tracer_ks = [int(k) for k in self.tracer_ks]
        self.free_action_trials = int(self.free_action_trials)
        self.sigma_degrees = [int(n) for n in self.sigma_degrees]
        self.seed = int(self.seed)
        self.output = str(self.output)

        assert self.presentation_n[0] >= 2, "Presentations are checked from n = 2."
        assert self.epsilon_n[0] >= 2, "The full twist needs n >= 2."
        assert self.decision_n_max >= 2, "decision_n_max must be at least 2."
        assert self.decision_m_max >= 0, "decision_m_max must be greater or equal to 0."
        assert self.decision_cap >= 0, "decision_cap must be greater or equal to 0."
        assert self.oracle_pairs >= 0, "oracle_pairs must be greater or equal to 0."
        assert self.oracle_n_max >= 2, "oracle_n_max must be at least 2."
        assert self.oracle_length >= 0, "oracle_length must be greater or equal to 0."
        assert all([k >= 1 for k in self.tracer_ks]), "Every traced k must be at least 1."
        assert all([n >= 3 for n in self.sigma_degrees]), "The symmetric group examples need n >= 3."
