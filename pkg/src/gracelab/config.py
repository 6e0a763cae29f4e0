"""Run configuration and the factorial-blowup guard."""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass
from typing import Optional

from .errors import SizeCapError

DEFAULT_MAX_N = 10
DEFAULT_SEED = 20200815
MAX_N_ENV = "GRACE_MAX_N"

OUTPUT_FORMATS = ("json", "csv", "text")


def env_max_n() -> Optional[int]:
    raw = os.environ.get(MAX_N_ENV)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise SizeCapError(f"{MAX_N_ENV}={raw!r} is not an integer") from None
    if value < 1:
        raise SizeCapError(f"{MAX_N_ENV} must be >= 1, got {value}")
    return value


def resolve_max_n(max_n: Optional[int] = None) -> int:
    """Explicit value wins, then ``GRACE_MAX_N``, then the default."""
    if max_n is not None:
        return max_n
    env = env_max_n()
    return DEFAULT_MAX_N if env is None else env


def check_size(n: int, max_n: Optional[int] = None, what: str = "n") -> None:
    cap = resolve_max_n(max_n)
    if n > cap:
        raise SizeCapError(f"{what}={n} exceeds configured maximum max_n={cap}")


@dataclass(frozen=True)
class RunConfig:
    max_n: int = DEFAULT_MAX_N
    workers: int = 1
    seed: int = DEFAULT_SEED
    output_format: str = "json"
    output_path: Optional[str] = None

    def __post_init__(self):
        if self.max_n < 1:
            raise SizeCapError(f"max_n must be >= 1, got {self.max_n}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"unknown output format {self.output_format!r}")

    @classmethod
    def from_env(cls, **overrides) -> "RunConfig":
        if overrides.get("max_n") is None:
            overrides["max_n"] = resolve_max_n()
        return cls(**{k: v for k, v in overrides.items() if v is not None})

    def snapshot(self) -> dict:
        """Fields that influence results (output destination excluded)."""
        d = asdict(self)
        d.pop("output_path")
        d.pop("output_format")
        return d
