"""Greedy random-code experiments.

A trial draws random macrobonds one at a time and accepts each until the first
draw that would push the code's auto- or cross-correlation above ``lam``; the
trial's result is the number accepted before that draw.

Each trial seeds its own generator from ``(master_seed, trial_index)`` through
:class:`numpy.random.SeedSequence`, so results do not depend on how trials are
scheduled across workers.
"""

from __future__ import annotations

import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .grid import Macrobond

UNIFORM = "uniform"
ONE_PER_COLUMN = "one_per_column"
MODES = (UNIFORM, ONE_PER_COLUMN)


@dataclass(frozen=True)
class TrialConfig:
    n: int
    lam: int
    w: int | None = None
    mode: str = UNIFORM
    trials: int = 100
    master_seed: int = 0

    def __post_init__(self):
        if self.w is None:
            object.__setattr__(self, "w", self.n)
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.trials < 1:
            raise ValueError("need at least one trial")
        if self.mode == ONE_PER_COLUMN and self.w != self.n:
            raise ValueError("one_per_column mode requires w = n")
        if not 1 <= self.w <= self.n * self.n:
            raise ValueError(f"need 1 <= w <= n^2, got w={self.w}")
        if self.lam < 1:
            raise ValueError("lambda must be positive")


@dataclass(frozen=True)
class TrialStats:
    ave: float
    med: float
    stddev: float
    max: int
    per_trial_sizes: list[int] = field(default_factory=list)

    @classmethod
    def from_sizes(cls, sizes: list[int]) -> TrialStats:
        sizes = list(sizes)
        return cls(
            ave=statistics.fmean(sizes),
            med=float(statistics.median(sizes)),
            stddev=statistics.stdev(sizes) if len(sizes) > 1 else 0.0,
            max=max(sizes),
            per_trial_sizes=sizes,
        )


def trial_rng(master_seed: int, trial_index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([master_seed, trial_index]))


def random_rows(n: int, w: int, mode: str, rng: np.random.Generator) -> np.ndarray:
    """Draw one macrobond as an ``(w, 2)`` array of ``(x, y)`` patches."""
    if mode == UNIFORM:
        if not 1 <= w <= n * n:
            raise ValueError(f"need 1 <= w <= n^2, got w={w}")
        cells = rng.choice(n * n, size=w, replace=False)
        return np.stack([cells // n, cells % n], axis=1)
    if mode == ONE_PER_COLUMN:
        if w != n:
            raise ValueError("one_per_column mode requires w = n")
        return np.stack([np.arange(n), rng.integers(0, n, size=n)], axis=1)
    raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def random_macrobond(n: int, w: int, mode: str, rng: np.random.Generator) -> Macrobond:
    return Macrobond(n, random_rows(n, w, mode, rng).tolist())


def _has_repeat(d: np.ndarray, lam: int) -> np.ndarray:
    """Rows of ``d`` in which some value occurs more than ``lam`` times."""
    if d.shape[1] <= lam:
        return np.zeros(d.shape[0], dtype=bool)
    s = np.sort(d, axis=1)
    return (s[:, lam:] == s[:, :-lam]).any(axis=1)


def grow_code(config: TrialConfig, trial_index: int):
    """Run one trial. Returns ``(accepted, rejected)`` as lists/one of Macrobond."""
    n, w, lam = config.n, config.w, config.lam
    rng = trial_rng(config.master_seed, trial_index)
    stride = 2 * n - 1
    off_diag = ~np.eye(w, dtype=bool)
    accepted_keys = np.empty((0, w), dtype=np.int64)
    accepted: list[np.ndarray] = []
    while True:
        rows = random_rows(n, w, config.mode, rng)
        keys = rows[:, 0] * stride + rows[:, 1]
        auto = (keys[:, None] - keys[None, :])[off_diag]
        bad = _has_repeat(auto[None, :], lam)[0]
        if not bad and len(accepted_keys):
            cross = (keys[None, :, None] - accepted_keys[:, None, :]).reshape(len(accepted_keys), -1)
            bad = bool(_has_repeat(cross, lam).any())
        if bad:
            return [Macrobond(n, r.tolist()) for r in accepted], Macrobond(n, rows.tolist())
        accepted.append(rows)
        accepted_keys = np.vstack([accepted_keys, keys[None, :]])


def run_trial(config: TrialConfig, trial_index: int) -> int:
    """Code size reached by one trial."""
    accepted, _ = grow_code(config, trial_index)
    return len(accepted)


def _run_many(config: TrialConfig, indices: range) -> list[tuple[int, int]]:
    return [(i, run_trial(config, i)) for i in indices]


def run_experiment(config: TrialConfig, workers: int = 1) -> TrialStats:
    if workers > 1:
        chunks = [range(s, config.trials, workers) for s in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_run_many, [config] * workers, chunks)
            results = sorted(r for part in parts for r in part)
        sizes = [size for _, size in results]
    else:
        sizes = [run_trial(config, i) for i in range(config.trials)]
    return TrialStats.from_sizes(sizes)
