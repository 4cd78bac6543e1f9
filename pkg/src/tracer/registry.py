__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"
"""
Persistent store of traced (alpha, beta) pairs, keyed by k and the tracing parameters.

Entries are plain JSON. Nothing read from the file is trusted: every pair is checked again by
braid equality before it is returned, and a pair that fails is dropped with a warning."""

from typing import Dict, Optional, Sequence, Tuple
import json
import logging
import os

from src.braids.braid_word import BraidWord
from src.braids.cyclic_braid import CyclicBraid
from src.configurations.engine_confs import DEFAULT_REGISTRY, REGISTRY_ENV
from src.errors import BUCertError
from src.utils import SCHEMA_VERSION

logger = logging.getLogger(__name__)


def registry_key(k: int, resolution: int, angle: float, basepoint: Sequence) -> str:
    return f"k={k};res={resolution};angle={angle:.6f};base={basepoint[0]},{basepoint[1]}"


def default_registry_path() -> str:
    return os.path.expanduser(os.environ.get(REGISTRY_ENV) or DEFAULT_REGISTRY)


class WitnessRegistry:
    """
    Args:
        path (str): JSON file holding the entries. Defaults to $BUCERT_REGISTRY, then
            ~/.cache/bucert/witness_registry.json.
    """

    def __init__(self, path: Optional[str] = None):
        self.path = os.path.expanduser(path) if path else default_registry_path()
        self.entries: Dict[str, dict] = {}
        self.load()

    def load(self) -> None:
        if not os.path.exists(self.path):
            return
        try:
            with open(self.path, "r") as f:
                data = json.load(f)
        except (OSError, ValueError) as exc:
            logger.warning(f"Ignoring unreadable witness registry {self.path}: {exc}")
            return
        if data.get("schema") != SCHEMA_VERSION:
            logger.warning(f"Ignoring witness registry {self.path} with schema {data.get('schema')}")
            return
        self.entries = dict(data.get("entries", {}))

    def save(self) -> None:
        directory = os.path.dirname(self.path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        tmp = self.path + ".tmp"
        with open(tmp, "w") as f:
            json.dump({"schema": SCHEMA_VERSION, "entries": self.entries}, f, indent=2, sort_keys=True)
        os.replace(tmp, self.path)

    def get(self, key: str) -> Optional[Tuple[CyclicBraid, CyclicBraid, dict]]:
        """The stored pair for key, re-verified, with its provenance, or None."""

        from src.borsuk_ulam.witnesses import check_alpha_beta

        entry = self.entries.get(key)
        if entry is None:
            return None
        try:
            k = int(entry["k"])
            alpha = CyclicBraid(BraidWord.parse(entry["alpha"]))
            beta = CyclicBraid(BraidWord.parse(entry["beta"]))
            check_alpha_beta(alpha, beta, k)
        except (KeyError, BUCertError) as exc:
            logger.warning(f"Discarding registry entry {key}: {exc}")
            del self.entries[key]
            return None
        logger.info(f"Witness registry hit for {key}")
        provenance = {name: value for name, value in entry.items() if name not in ("alpha", "beta")}
        return alpha, beta, provenance

    def put(self, key: str, alpha: CyclicBraid, beta: CyclicBraid, provenance: dict) -> None:
        entry = dict(provenance)
        entry.update({"alpha": str(alpha.word), "beta": str(beta.word)})
        self.entries[key] = entry
        try:
            self.save()
        except OSError as exc:
            logger.warning(f"Could not write witness registry {self.path}: {exc}")

    def __contains__(self, key: str) -> bool:
        return key in self.entries

    def __len__(self) -> int:
        return len(self.entries)
