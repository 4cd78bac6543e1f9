__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"
import json
import os

from omegaconf import OmegaConf
import pytest

from src.configurations import configFactory
from src.configurations.engine_confs import DEFAULT_REGISTRY, EngineConf
from src.configurations.suite_confs import SuiteConf
from src.configurations.tracer_confs import TracerConf
from src.configurations.sigma_confs import SigmaConf
from src.suites import decision_suite, run_suites

CFG = os.path.join(os.path.dirname(__file__), "..", "cfg")

if not OmegaConf.has_resolver("as_tuple"):
    OmegaConf.register_new_resolver("as_tuple", lambda *args: tuple(args))


def test_factory_knows_every_group():
    assert set(configFactory.getConfigs()) == {"tracer_settings", "engine_settings", "sigma_settings", "suite_settings"}
    assert isinstance(configFactory("tracer_settings", resolution=128), TracerConf)


@pytest.mark.parametrize(
    "group,name,key",
    [
        ("tracer", "default", "tracer_settings"),
        ("tracer", "fine", "tracer_settings"),
        ("engine", "default", "engine_settings"),
        ("sigma", "default", "sigma_settings"),
        ("mode", "quick", "suite_settings"),
        ("mode", "acceptance", "suite_settings"),
    ],
)
def test_yaml_groups_instantiate(group, name, key):
    cfg = OmegaConf.to_container(OmegaConf.load(os.path.join(CFG, group, f"{name}.yaml")), resolve=True)
    conf = configFactory(key, **cfg[key])
    if group == "tracer":
        assert conf.basepoint_key == ("1/8", "0")


def test_registry_path_from_environment(isolated_registry, monkeypatch):
    assert EngineConf().registry_path == str(isolated_registry)
    monkeypatch.delenv("BUCERT_REGISTRY")
    assert EngineConf().registry_path == os.path.expanduser(DEFAULT_REGISTRY)
    assert EngineConf(registry_path="~/pairs.json").registry_path == os.path.expanduser("~/pairs.json")


@pytest.mark.parametrize("verify", [True, False])
def test_decision_suite_follows_verify_witnesses(verify):
    def no_tracing(k):
        pytest.fail("n <= 3 needs no traced pair.")

    engine = EngineConf(verify_witnesses=verify)
    report = decision_suite(SuiteConf(decision_n_max=3, decision_m_max=1), no_tracing, engine.verify_witnesses)
    assert report.passed
    assert report.metadata["verify"] is verify
    assert (report.count("witness_verified") > 0) is verify
    assert report.count("matches_predicate") > 0


def test_suite_conf_checks():
    with pytest.raises(AssertionError):
        SuiteConf(suites=["presentation", "benchmarks"])
    with pytest.raises(AssertionError):
        SuiteConf(presentation_n=[4, 2])
    with pytest.raises(AssertionError):
        SuiteConf(epsilon_n=[1, 4])
    assert SuiteConf(decision_n_max="8").decision_n_max == 8


def test_run_suites(tmp_path):
    output = tmp_path / "summary.json"
    cfg = {
        "mode": {
            "name": "test",
            "suite_settings": SuiteConf(
                suites=["presentation", "epsilon", "free_action"],
                presentation_n=[2, 3],
                epsilon_n=[2, 6],
                free_action_trials=20,
                output=str(output),
            ),
        },
        "tracer": {"tracer_settings": TracerConf(resolution=128, use_registry=False)},
        "engine": {"engine_settings": EngineConf()},
        "sigma": {"sigma_settings": SigmaConf()},
    }
    summary = run_suites(cfg)
    assert summary["pass"]
    assert list(summary["suites"]) == ["presentation", "epsilon", "free_action"]
    with open(output) as f:
        assert json.load(f)["mode"] == "test"
