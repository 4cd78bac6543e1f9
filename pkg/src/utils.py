__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

from typing import Any, Dict, List, Optional, Tuple
import dataclasses
import threading
import logging
import time

logger = logging.getLogger(__name__)
logging.basicConfig(format="%(asctime)s %(message)s", datefmt="%m/%d/%Y %I:%M:%S %p")

SCHEMA_VERSION = 1


@dataclasses.dataclass
class ReportEntry:
    """
    One checked instance.

    Args:
        relation (str): name of the identity or property being checked.
        indices (tuple): the parameters of the instance (for instance (r, s, i, j)).
        lhs_word (str): left-hand side, in braid word text format when it is a braid.
        rhs_word (str): right-hand side.
        passed (bool): outcome of the check.
        detail (str): free form diagnostic.
    """

    relation: str
    indices: Tuple = ()
    lhs_word: Optional[str] = None
    rhs_word: Optional[str] = None
    passed: bool = True
    detail: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "relation": self.relation,
            "indices": list(self.indices),
            "lhs_word": self.lhs_word,
            "rhs_word": self.rhs_word,
            "pass": self.passed,
            "detail": self.detail,
        }


@dataclasses.dataclass
class Report:
    name: str
    entries: List[ReportEntry] = dataclasses.field(default_factory=list)
    metadata: Dict[str, Any] = dataclasses.field(default_factory=dict)

    def add(self, relation: str, passed: bool, indices: Tuple = (), lhs=None, rhs=None, detail: str = None) -> None:
        self.entries.append(
            ReportEntry(
                relation=relation,
                indices=tuple(indices),
                lhs_word=None if lhs is None else str(lhs),
                rhs_word=None if rhs is None else str(rhs),
                passed=bool(passed),
                detail=detail,
            )
        )

    def extend(self, other: "Report") -> None:
        self.entries.extend(other.entries)
        for key, value in other.metadata.items():
            self.metadata.setdefault(key, value)

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    @property
    def failures(self) -> List[ReportEntry]:
        return [entry for entry in self.entries if not entry.passed]

    def count(self, relation: str = None) -> int:
        if relation is None:
            return len(self.entries)
        return sum(1 for entry in self.entries if entry.relation == relation)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "report": self.name,
            "pass": self.passed,
            "instances": len(self.entries),
            "failures": len(self.failures),
            "metadata": self.metadata,
            "entries": [entry.to_dict() for entry in self.entries],
        }


class ScopedTimer:
    """
    Context manager that logs how long its body took. Nested timers are indented and flushed
    together once the outermost one exits. If a dict is given, the elapsed time is also
    accumulated in it under the timer's name."""

    _thread_local_data = threading.local()

    def __init__(self, name: str, active: bool = True, unit: str = "s", timings: Dict[str, float] = None):
        self.name = name
        self.active = active
        assert unit in ["s", "ms", "us"]
        self.unit_multiplier = {"s": 1, "ms": 1e3, "us": 1e6}[unit]
        self.unit = unit
        self.timings = timings
        self.indent = 2
        self.elapsed = 0.0

    def __enter__(self):
        if self.active:
            if not hasattr(self._thread_local_data, "nesting_level"):
                self._thread_local_data.nesting_level = 0
            if not hasattr(self._thread_local_data, "messages"):
                self._thread_local_data.messages = []
            self._thread_local_data.nesting_level += 1
        self.start_time = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.elapsed = time.perf_counter() - self.start_time
        if self.timings is not None:
            self.timings[self.name] = self.timings.get(self.name, 0.0) + self.elapsed
        if self.active:
            indentation = " " * (self._thread_local_data.nesting_level - 1) * self.indent
            message = f"{indentation}{self.name} took: {self.elapsed * self.unit_multiplier:.4f} {self.unit}"
            # Outermost message first.
            self._thread_local_data.messages.insert(0, message)
            self._thread_local_data.nesting_level -= 1
            if self._thread_local_data.nesting_level == 0:
                for msg in self._thread_local_data.messages:
                    logger.info(msg)
                self._thread_local_data.messages.clear()
