"""
Suite configuration.

A SuiteConfig is validated by pydantic against the desk-scale limits.
Config files are YAML or JSON, chosen by suffix; command-line flags are
overlaid on the file by the CLI.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from .errors import ConfigError
from .logs import get_logger
from .scalars import MERSENNE_61, MODES, ParamContext

log = get_logger(__name__)

DEFAULT_MODE = "modp-random"
DEFAULT_SEEDS = (1, 2, 3)
DEFAULT_SLACK = 1
DEFAULT_REWRITE_BUDGET = 10**6

SUITES = (
    "daha-presentation",
    "symmetrizer",
    "dunkl-commutativity",
    "power-sums",
    "macdonald",
    "gamma-conjugation",
    "toroidal-relations",
    "correspondence",
    "r-constants",
    "pbw-audit",
    "straightening",
    "confluence",
    "golden",
    "morphisms",
    "identity-suite",
)

# Used when no degree is given.
SUITE_DEGREES: Dict[str, int] = {
    "macdonald": 3,
    "gamma-conjugation": 3,
    "correspondence": 2,
    "pbw-audit": 2,
    "power-sums": 2,
    "morphisms": 6,
    "identity-suite": 4,
}


class Limits(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_n: int = 4
    max_ell: int = 3
    max_degree: int = 6
    max_window_span: int = 5


LIMITS = Limits()


class SuiteConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    suite: str
    n: int = 2
    ell: int = 0
    degree: Optional[int] = None
    rmin: int = -2
    rmax: int = 2
    mode: str = DEFAULT_MODE
    seeds: List[int] = Field(default_factory=lambda: list(DEFAULT_SEEDS))
    z: Union[str, List[str]] = "generic"
    presentation: str = "D1"
    morphism: Optional[str] = None
    slack: int = DEFAULT_SLACK
    prime: int = MERSENNE_61
    rewrite_budget: int = DEFAULT_REWRITE_BUDGET
    jobs: int = 1
    output: Optional[Path] = None
    limits: Limits = LIMITS

    @field_validator("suite")
    @classmethod
    def _known_suite(cls, v: str) -> str:
        if v not in SUITES:
            raise ValueError(f"unknown suite {v!r}; known: {', '.join(SUITES)}")
        return v

    @field_validator("mode")
    @classmethod
    def _known_mode(cls, v: str) -> str:
        if v not in MODES:
            raise ValueError(f"unknown mode {v!r}; known: {', '.join(MODES)}")
        return v

    @field_validator("z", mode="before")
    @classmethod
    def _split_z(cls, v: Any) -> Any:
        if isinstance(v, str) and v != "generic":
            return [part.strip() for part in v.split(",") if part.strip()]
        if isinstance(v, (list, tuple)):
            return [str(part) for part in v]
        return v

    @field_validator("seeds", mode="before")
    @classmethod
    def _split_seeds(cls, v: Any) -> Any:
        if isinstance(v, str):
            return [int(part) for part in v.split(",") if part.strip()]
        if isinstance(v, int):
            return [v]
        return v

    @model_validator(mode="after")
    def _within_limits(self) -> "SuiteConfig":
        lim = self.limits
        if not 1 <= self.n <= lim.max_n:
            raise ValueError(f"n must be in 1..{lim.max_n}")
        if not 0 <= self.ell <= lim.max_ell:
            raise ValueError(f"ell must be in 0..{lim.max_ell}")
        if self.degree is not None and not 0 <= self.degree <= lim.max_degree:
            raise ValueError(f"degree must be in 0..{lim.max_degree}")
        if self.rmin > self.rmax:
            raise ValueError("empty mode window")
        if self.rmax - self.rmin + 1 > lim.max_window_span:
            raise ValueError(f"mode window span must be at most {lim.max_window_span}")
        if self.mode != "exact" and not self.seeds:
            raise ValueError("random modes need at least one seed")
        if self.z != "generic":
            if not isinstance(self.z, list):
                raise ValueError("z must be 'generic' or a list of rationals")
            if len(self.z) != self.ell:
                raise ValueError(f"z needs {self.ell} entries, got {len(self.z)}")
            for literal in self.z:
                try:
                    value = Fraction(literal)
                except (ValueError, ZeroDivisionError) as exc:
                    raise ValueError(f"bad rational literal {literal!r}") from exc
                if value == 0:
                    raise ValueError("z entries must be nonzero")
        if self.slack < 0:
            raise ValueError("slack must be nonnegative")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")
        return self

    @property
    def effective_degree(self) -> int:
        return self.degree if self.degree is not None else SUITE_DEGREES.get(self.suite, 2)

    @property
    def z_literals(self) -> Optional[List[Fraction]]:
        if self.z == "generic":
            return None
        return [Fraction(v) for v in self.z]

    def run_seeds(self) -> List[int]:
        """Exact mode runs once."""
        return [0] if self.mode == "exact" else list(self.seeds)

    def context(self, seed: int, ell: Optional[int] = None) -> ParamContext:
        return ParamContext(
            ell=self.ell if ell is None else ell,
            mode=self.mode,
            seed=seed,
            prime=self.prime if self.mode == "modp-random" else None,
            n=self.n,
            max_degree=max(self.effective_degree, 1),
        )

    def params(self) -> Dict[str, Any]:
        """Config echo for reports; omits the output path."""
        data = self.model_dump(mode="json", exclude={"output", "limits", "jobs"})
        data["degree"] = self.effective_degree
        return data


def build_config(**values: Any) -> SuiteConfig:
    """SuiteConfig(**values) with validation errors as ConfigError."""
    try:
        return SuiteConfig(**{k: v for k, v in values.items() if v is not None})
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(p) for p in first.get("loc", ())) or "config"
        raise ConfigError(f"{where}: {first.get('msg')}", {"errors": exc.error_count()}) from exc


def load_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """Raw mapping from a .yaml/.yml or .json file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}", {"error": str(exc)}) from exc
    try:
        if path.suffix in (".yaml", ".yml"):
            data = yaml.safe_load(text) or {}
        elif path.suffix == ".json":
            data = json.loads(text)
        else:
            raise ConfigError(f"unsupported config file type {path.suffix!r}", {"path": str(path)})
    except (yaml.YAMLError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot parse config file {path}", {"error": str(exc)}) from exc
    if not isinstance(data, dict):
        raise ConfigError("config file must hold a mapping", {"path": str(path)})
    log.debug("config.loaded", path=str(path), keys=sorted(data))
    return data


def merge_config(file_values: Dict[str, Any], flags: Dict[str, Any]) -> SuiteConfig:
    """Flags win over file values; None flags are ignored."""
    merged = dict(file_values)
    merged.update({k: v for k, v in flags.items() if v is not None})
    return build_config(**merged)
