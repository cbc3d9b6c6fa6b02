"""Brute-force ground truth for the maximum co-lex order.

Everything here is quadratic or worse in the number of states and exists to
check the linear-space index, not to replace it.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .nfa import InvariantError, Nfa, require_forward_stable

Pair = tuple[int, int]


@dataclass(frozen=True)
class PairGraph:
    """Pairs of distinct states. An edge ``(u', v') -> (u, v)`` means
    ``u' -> u`` and ``v' -> v`` are transitions with ``label[u] == label[v]``."""

    nodes: tuple[Pair, ...]
    succ: dict[Pair, tuple[Pair, ...]] = field(repr=False)
    pred: dict[Pair, tuple[Pair, ...]] = field(repr=False)

    def preceding(self, pair: Pair) -> set[Pair]:
        """All pairs that precede ``pair`` (``pair`` itself included)."""
        seen = {pair}
        queue = deque([pair])
        while queue:
            x = queue.popleft()
            for y in self.pred[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen


def preceding_pair_graph(nfa: Nfa) -> PairGraph:
    require_forward_stable(nfa)
    n = nfa.n
    nodes = tuple((u, v) for u in range(n) for v in range(n) if u != v)
    succ: dict[Pair, list[Pair]] = {p: [] for p in nodes}
    pred: dict[Pair, list[Pair]] = {p: [] for p in nodes}
    for u, v in nodes:
        if nfa.label[u] != nfa.label[v]:
            continue
        for u2 in nfa.pred[u]:
            for v2 in nfa.pred[v]:
                if u2 != v2:
                    succ[(u2, v2)].append((u, v))
                    pred[(u, v)].append((u2, v2))
    return PairGraph(
        nodes,
        {k: tuple(sorted(v)) for k, v in succ.items()},
        {k: tuple(sorted(v)) for k, v in pred.items()},
    )


@dataclass(frozen=True)
class PartialOrderMatrix:
    rel: np.ndarray  # rel[u, v] iff u <=_FS v

    @property
    def n(self) -> int:
        return self.rel.shape[0]

    def leq(self, u: int, v: int) -> bool:
        return bool(self.rel[u, v])

    def less(self, u: int, v: int) -> bool:
        return u != v and bool(self.rel[u, v])

    def dump(self) -> str:
        return "".join("".join("1" if x else "0" for x in row) + "\n" for row in self.rel)


def check_partial_order(rel: np.ndarray) -> None:
    n = rel.shape[0]
    if not rel.diagonal().all():
        raise InvariantError("order is not reflexive")
    both = rel & rel.T
    np.fill_diagonal(both, False)
    if both.any():
        u, v = map(int, np.argwhere(both)[0])
        raise InvariantError(f"order is not antisymmetric on ({u}, {v})")
    r = rel.astype(np.int64)
    closure = (r @ r) > 0
    if (closure & ~rel).any():
        u, v = map(int, np.argwhere(closure & ~rel)[0])
        raise InvariantError(f"order is not transitive: missing ({u}, {v})")
    assert n == rel.shape[1]


def max_colex_order(nfa: Nfa, graph: PairGraph | None = None) -> PartialOrderMatrix:
    """``u <=_FS v`` iff no pair preceding ``(u, v)`` has a larger first label.

    One multi-source search forward from every label-violating pair marks
    exactly the pairs that are *not* in the order.
    """
    graph = preceding_pair_graph(nfa) if graph is None else graph
    lab = nfa.label
    bad = {(u, v) for u, v in graph.nodes if lab[u] > lab[v]}
    queue = deque(sorted(bad))
    while queue:
        x = queue.popleft()
        for y in graph.succ[x]:
            if y not in bad:
                bad.add(y)
                queue.append(y)
    rel = np.ones((nfa.n, nfa.n), dtype=bool)
    for u, v in bad:
        rel[u, v] = False
    check_partial_order(rel)
    return PartialOrderMatrix(rel)


@dataclass(frozen=True)
class TotalOrder:
    rank: tuple[int, ...]  # 1-based
    order: tuple[int, ...]  # states by increasing rank

    @classmethod
    def from_sequence(cls, order: list[int] | tuple[int, ...]) -> TotalOrder:
        rank = [0] * len(order)
        for i, u in enumerate(order):
            rank[u] = i + 1
        if sorted(order) != list(range(len(order))):
            raise InvariantError("order is not a permutation of the states")
        return cls(tuple(rank), tuple(order))

    def less(self, u: int, v: int) -> bool:
        return self.rank[u] < self.rank[v]

    def reversed(self) -> TotalOrder:
        return TotalOrder.from_sequence(self.order[::-1])

    def dump(self) -> str:
        return "".join(f"rank {u} {r}\n" for u, r in enumerate(self.rank))


def is_colex_extension(rank: tuple[int, ...] | list[int], order: PartialOrderMatrix) -> bool:
    n = order.n
    if sorted(rank) != list(range(1, n + 1)):
        return False
    return all(
        rank[u] <= rank[v] for u in range(n) for v in range(n) if order.rel[u, v]
    )


def colex_extension(order: PartialOrderMatrix, nfa: Nfa) -> TotalOrder:
    """Linear extension of ``order``; ties go to the smallest (label, id)."""
    n = order.n
    rel = order.rel
    indeg = [int(rel[:, v].sum()) - 1 for v in range(n)]
    heap = [(nfa.label[v], v) for v in range(n) if indeg[v] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        _, u = heapq.heappop(heap)
        out.append(u)
        for v in range(n):
            if v != u and rel[u, v]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    heapq.heappush(heap, (nfa.label[v], v))
    if len(out) != n:
        raise InvariantError("order relation contains a cycle")
    return TotalOrder.from_sequence(out)
