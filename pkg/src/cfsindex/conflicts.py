"""Inf/sup conflicts along stored walks and the per-state depths phi, gamma."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .nfa import Nfa
from .oracle import PartialOrderMatrix
from .walks import walk


@dataclass(frozen=True)
class ConflictDepths:
    phi: tuple[int, ...]
    gamma: tuple[int, ...]

    def dump(self) -> str:
        return "".join(f"depths {u} {f} {g}\n" for u, (f, g) in enumerate(zip(self.phi, self.gamma)))


def divergent_layers(nfa: Nfa, path: Sequence[int]):
    """Yield, for i = 2..len(path), the states that can stand at position i of
    a walk to ``path[0]`` which avoids ``path`` at every position 2..i while
    matching its labels."""
    layer = {path[0]}
    for target in path[1:]:
        lab = nfa.label[target]
        layer = {
            x
            for y in layer
            for x in nfa.pred[y]
            if x != target and nfa.label[x] == lab
        }
        yield layer


def _witness(fs: PartialOrderMatrix, kind: str, deep: int, others: set[int]) -> bool:
    if kind == "inf":
        return any(not fs.less(deep, x) for x in others)
    return any(not fs.less(x, deep) for x in others)


def conflict_bits(nfa: Nfa, path: Sequence[int], fs: PartialOrderMatrix, kind: str) -> list[bool]:
    """Conflict flag of ``path[j-1]`` for every j = 2..len(path)."""
    return [
        _witness(fs, kind, deep, layer)
        for deep, layer in zip(path[1:], divergent_layers(nfa, path))
    ]


def _check_length(nfa: Nfa, path: Sequence[int]) -> None:
    if not 2 <= len(path) <= 2 * nfa.n - 1:
        raise ValueError(f"walk length {len(path)} outside [2, {2 * nfa.n - 1}]")


def is_inf_conflict(nfa: Nfa, path: Sequence[int], fs: PartialOrderMatrix) -> bool:
    """Is the last state of ``path`` in inf conflict with the walk?"""
    _check_length(nfa, path)
    return conflict_bits(nfa, path, fs, "inf")[-1]


def is_sup_conflict(nfa: Nfa, path: Sequence[int], fs: PartialOrderMatrix) -> bool:
    _check_length(nfa, path)
    return conflict_bits(nfa, path, fs, "sup")[-1]


def _deepest(path: list[int], in_conflict) -> int:
    # Conflicts along a walk are downward closed, so binary search the last one.
    lo, hi = 1, len(path)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if in_conflict(path[:mid]):
            lo = mid
        else:
            hi = mid - 1
    return lo


def conflict_depths(
    nfa: Nfa,
    p_inf: Sequence[int],
    p_sup: Sequence[int],
    fs: PartialOrderMatrix,
) -> ConflictDepths:
    top = 2 * nfa.n - 1
    phi, gamma = [], []
    for u in range(nfa.n):
        if top < 2:
            phi.append(1)
            gamma.append(1)
            continue
        inf_walk = walk(p_inf, u, top)
        sup_walk = walk(p_sup, u, top)
        phi.append(_deepest(inf_walk, lambda w: is_inf_conflict(nfa, w, fs)))
        gamma.append(_deepest(sup_walk, lambda w: is_sup_conflict(nfa, w, fs)))
    return ConflictDepths(tuple(phi), tuple(gamma))
