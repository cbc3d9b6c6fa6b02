"""Seeded random forward-stable NFAs."""

from __future__ import annotations

import random
import string

from .nfa import START, Nfa, forward_stable_quotient, validate


def symbol_names(k: int) -> list[str]:
    if k <= len(string.ascii_lowercase):
        return list(string.ascii_lowercase[:k])
    return [f"s{i}" for i in range(k)]


def random_nfa(n: int, m: int, sigma: int, rng: random.Random) -> Nfa:
    """Random normalized NFA with ``n`` states and ``m`` transitions before the
    forward-stable quotient, which may shrink both.

    ``sigma`` counts ``#``; symbols left unused by the draw are dropped.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if sigma < 2 and n > 1:
        raise ValueError("need sigma >= 2")
    if m < n:
        raise ValueError(f"need m >= n to connect every state (m={m}, n={n})")
    if m > 1 + n * (n - 1):
        raise ValueError(f"at most {1 + n * (n - 1)} transitions fit on {n} states")

    letters = max(0, min(sigma - 1, n - 1))
    raw = [0] + [rng.randrange(1, letters + 1) for _ in range(n - 1)]
    used = sorted(set(raw[1:]))
    recode = {0: 0, **{a: i + 1 for i, a in enumerate(used)}}
    label = [recode[a] for a in raw]
    symbols = [START] + symbol_names(len(used))

    edges = {(0, 0)}
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    candidates = [(u, v) for u in range(n) for v in range(1, n) if (u, v) not in edges]
    rng.shuffle(candidates)
    edges.update(candidates[: m - len(edges)])

    nfa = Nfa(
        tuple(symbols),
        tuple(label),
        0,
        tuple(sorted((u, v, label[v]) for u, v in edges)),
    )
    return forward_stable_quotient(validate(nfa))


def corpus(count: int, seed: int, max_n: int = 30, sigma: int = 3):
    """``count`` seeded forward-stable NFAs with at most ``max_n`` states."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        hi = min(1 + n * (n - 1), 3 * n)
        m = rng.randint(n, max(n, hi))
        yield random_nfa(n, m, rng.randint(2, sigma + 1) if n > 1 else 2, rng)
