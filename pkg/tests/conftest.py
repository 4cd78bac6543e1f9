__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"
import pytest

from src.configurations.tracer_confs import TracerConf
from src.tracer.alpha_beta import trace_alpha_beta


@pytest.fixture(autouse=True)
def isolated_registry(tmp_path, monkeypatch):
    """Keeps every test away from the user's witness registry."""

    path = tmp_path / "registry.json"
    monkeypatch.setenv("BUCERT_REGISTRY", str(path))
    return path


@pytest.fixture(scope="session")
def tracer_conf():
    return TracerConf(resolution=256, use_registry=False)


@pytest.fixture(scope="session")
def traced_pair(tracer_conf):
    """alpha and beta for Z_4, traced once per session."""

    alpha, beta, _ = trace_alpha_beta(1, tracer_conf)
    return alpha, beta


@pytest.fixture(scope="session")
def alpha_beta_provider(traced_pair):
    def provider(k):
        assert k == 1, "Only the Z_4 pair is traced in the test session."
        return traced_pair

    return provider
