"""Verification suite interface and registry."""

import random
import sys
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional

from tqdm import tqdm

from ..errors import ArtinError
from ..utils.config import config
from ..utils.logging import get_logger

logger = get_logger(__name__)


@dataclass
class CheckResult:
    """Outcome of one named check; counterexample holds offending words on failure."""

    name: str
    passed: bool
    detail: str = ""
    counterexample: Optional[Any] = None

    def to_dict(self) -> Dict[str, Any]:
        result = {"name": self.name, "passed": self.passed, "detail": self.detail}
        if self.counterexample is not None:
            result["counterexample"] = self.counterexample
        return result


@dataclass
class SuiteReport:
    suite: str
    seed: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


class VerificationSuite(ABC):
    """Abstract base class for property suites."""

    show_progress: bool = False

    @property
    @abstractmethod
    def name(self) -> str:
        """Suite name used on the command line."""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        pass

    @abstractmethod
    def run(self, rng: random.Random) -> List[CheckResult]:
        """Run every check of the suite.

        Args:
            rng: Seeded generator; the only source of randomness

        Returns:
            One CheckResult per check, in a fixed order
        """
        pass

    def track(self, iterable: Iterable, desc: str, total: Optional[int] = None) -> Iterable:
        """Progress bar on stderr when enabled."""
        return tqdm(iterable, desc=desc, total=total, file=sys.stderr, leave=False,
                    disable=not self.show_progress)


class SuiteRegistry:
    """Registry of available verification suites."""

    def __init__(self):
        self.suites: Dict[str, VerificationSuite] = {}

    def register(self, suite: VerificationSuite) -> None:
        self.suites[suite.name] = suite
        logger.debug(f"Registered suite: {suite.name}")

    def get_suite(self, name: str) -> Optional[VerificationSuite]:
        return self.suites.get(name)

    def list_suites(self) -> List[str]:
        return list(self.suites.keys())

    def run(self, name: str, seed: Optional[int] = None, progress: bool = False) -> SuiteReport:
        """Run a suite by name.

        Args:
            name: Suite name
            seed: Random seed; defaults to verify.seed from the configuration
            progress: Show tqdm progress bars on stderr

        Returns:
            SuiteReport; a suite that raises is reported as one failed check

        Raises:
            ValueError: no suite of that name
        """
        suite = self.get_suite(name)
        if suite is None:
            raise ValueError(f"Suite '{name}' not found; available: {', '.join(self.list_suites())}")
        if seed is None:
            seed = config.verify_seed
        report = SuiteReport(suite=name, seed=seed)
        suite.show_progress = progress
        logger.info(f"Running suite {name} with seed {seed}")
        try:
            report.checks = suite.run(random.Random(seed))
        except ArtinError as e:
            logger.error(f"Suite '{name}' aborted: {e}")
            report.checks.append(CheckResult(name="suite", passed=False, detail=f"{type(e).__name__}: {e}"))
        logger.info(f"Suite {name}: {len(report.checks) - len(report.failures)}/{len(report.checks)} checks passed")
        return report
