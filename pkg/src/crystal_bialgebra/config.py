"""Run-time limits shared by the enumerating checks and the CLI."""

from __future__ import annotations

import os
from dataclasses import dataclass

CUTOFF_ENV = "CRYSTAL_CUTOFF"


@dataclass(frozen=True)
class EngineConfig:
    cutoff: int = 1  # largest alpha enumerated by the comonad engine
    guard: int = 10**6  # refuse enumerations of more index maps than this
    morphism_bound: int = 10_000  # cap on enumerated strict morphisms
    truncation: int = 4  # largest block of the set bialgebra enumerated by default

    def __post_init__(self):
        if self.cutoff < 0:
            raise ValueError("cutoff must be nonnegative")
        if self.guard <= 0 or self.morphism_bound <= 0:
            raise ValueError("bounds must be positive")

    @classmethod
    def from_env(cls, environ=None):
        env = os.environ if environ is None else environ
        raw = env.get(CUTOFF_ENV)
        if raw is None:
            return cls()
        try:
            return cls(cutoff=int(raw))
        except ValueError:
            raise ValueError(f"{CUTOFF_ENV} must be a nonnegative integer, got {raw!r}")


DEFAULTS = EngineConfig()
