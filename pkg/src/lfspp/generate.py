"""Seeded random instance generation.

Generation is a pure function of ``(config, seed)``: matrix entries are drawn
first (each ``a_ij`` is 1 with probability ``density``), then ``c``, then ``d``,
all from ``numpy.random.default_rng(seed)``. When a condition is requested the
whole draw is repeated until it is met, up to ``max_tries`` times.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .core import Instance, LfsppError
from .solvers import is_admissible

__all__ = ["GeneratorConfig", "GenerationFailed", "CONDITIONS", "random_instance",
           "generate"]

CONDITIONS = ("none", "2a", "uniform")


class GenerationFailed(LfsppError):
    pass


@dataclass(frozen=True)
class GeneratorConfig:
    n: int = 6
    m: int = 4
    density: float = 0.4
    cmin: int = 0
    cmax: int = 10
    dmin: int = 1
    dmax: int = 10
    alpha: int = 0
    beta: int = 1
    condition: str = "none"
    admissible: bool = False
    max_tries: int = 1000

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("n and m must be at least 1")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError(f"density must lie in [0, 1], got {self.density}")
        if self.cmin > self.cmax or self.dmin > self.dmax:
            raise ValueError("empty coefficient range")
        if self.beta < 1:
            raise ValueError("beta must be at least 1")
        if self.condition not in CONDITIONS:
            raise ValueError(f"unknown condition {self.condition!r}")

    def with_(self, **changes) -> "GeneratorConfig":
        return replace(self, **changes)


def random_instance(rng: np.random.Generator, config: GeneratorConfig) -> Instance:
    """One draw, ignoring ``condition`` except that ``"uniform"`` repeats a
    single drawn cost and weight across all columns."""
    n, m = config.n, config.m
    A = (rng.random((m, n)) < config.density).astype(np.int8)
    if config.condition == "uniform":
        c = [int(rng.integers(config.cmin, config.cmax + 1))] * n
        d = [int(rng.integers(config.dmin, config.dmax + 1))] * n
    else:
        c = rng.integers(config.cmin, config.cmax + 1, size=n).tolist()
        d = rng.integers(config.dmin, config.dmax + 1, size=n).tolist()
    return Instance(A=A, c=c, d=d, alpha=config.alpha, beta=config.beta)


def _accepted(inst: Instance, config: GeneratorConfig) -> bool:
    if config.condition == "2a":
        if not (all(v > 0 for v in inst.c) and all(v < 0 for v in inst.d)):
            return False
    return not config.admissible or is_admissible(inst)


def generate(config: GeneratorConfig, seed: int | np.random.Generator = 0) -> Instance:
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    for _ in range(config.max_tries):
        inst = random_instance(rng, config)
        if _accepted(inst, config):
            return inst
    raise GenerationFailed(
        f"condition {config.condition!r} (admissible={config.admissible}) "
        f"not met within {config.max_tries} draws")
