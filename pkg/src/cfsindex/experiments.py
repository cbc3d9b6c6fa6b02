"""Experiment configurations and runners used by the scripts in ``scripts/``."""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import asdict, dataclass, field

from .cli import bench_row
from .generate import corpus, random_nfa
from .index import construct, serialize


@dataclass(frozen=True)
class CheckConfig:
    trials: int = 500
    seed: int = 42
    max_n: int = 30
    sigma: int = 3


@dataclass
class CheckSummary:
    config: CheckConfig
    instances: int = 0
    states: int = 0
    pairs: int = 0
    mismatches: int = 0
    max_step_ratio: float = 0.0
    space_ok: bool = True
    cases: Counter = field(default_factory=Counter)
    seconds: float = 0.0

    def lines(self) -> list[str]:
        cases = " ".join(f"{k}={v}" for k, v in sorted(self.cases.items()))
        return [
            f"config {asdict(self.config)}",
            f"instances {self.instances} states {self.states} pairs {self.pairs}",
            f"mismatches {self.mismatches}",
            f"space 6n+2 {'ok' if self.space_ok else 'VIOLATED'}",
            f"max steps/(2n-1) {self.max_step_ratio:.3f}",
            f"cases {cases}",
            f"seconds {self.seconds:.1f}",
        ]


def run_check(config: CheckConfig) -> CheckSummary:
    """Index against brute force on every ordered pair of a seeded corpus."""
    summary = CheckSummary(config)
    start = time.perf_counter()
    for nfa in corpus(config.trials, config.seed, config.max_n, config.sigma):
        c = construct(nfa)
        summary.instances += 1
        summary.states += nfa.n
        summary.space_ok &= len(serialize(c.index)) // 8 == 6 * nfa.n + 2
        bound = max(1, 2 * nfa.n - 1)
        for u in range(nfa.n):
            for v in range(nfa.n):
                t = c.index.query(u, v)
                summary.pairs += 1
                summary.cases[t.case] += 1
                summary.mismatches += t.outcome != c.order.leq(u, v)
                summary.max_step_ratio = max(summary.max_step_ratio, t.steps / bound)
    summary.seconds = time.perf_counter() - start
    return summary


@dataclass(frozen=True)
class ScalingConfig:
    sizes: tuple[int, ...] = (50, 100, 200)
    seeds: tuple[int, ...] = (1, 2, 3)
    m_factor: int = 2
    sigma: int = 3
    queries: int = 50_000


def run_scaling(config: ScalingConfig) -> list[dict]:
    """One bench row per (size, seed); rows carry the seed as an extra column."""
    rows = []
    for n in config.sizes:
        for seed in config.seeds:
            rng = random.Random(seed)
            nfa = random_nfa(n, min(config.m_factor * n, 1 + n * (n - 1)), config.sigma, rng)
            rows.append({"target_n": n, "seed": seed, **bench_row(nfa, config.queries, rng, check=False)})
    return rows


def peak_steps(rows: list[dict]) -> dict[int, int]:
    peaks: dict[int, int] = {}
    for row in rows:
        peaks[row["target_n"]] = max(peaks.get(row["target_n"], 0), row["max_steps"])
    return peaks
