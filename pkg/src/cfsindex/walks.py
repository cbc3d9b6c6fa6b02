"""Leftmost and rightmost walks in unlabeled digraphs (the Forward Visit).

A predecessor map ``p`` encodes one infinite walk per node, ``u, p(u),
p(p(u)), ...``. The walk is leftmost when every other walk that meets it
at position ``j`` has a node at position ``j-1`` that is no smaller under the
node order.

Orders are given as ``rank`` sequences: ``rank[u] < rank[v]`` means ``u``
is the smaller node.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .infsup import Digraph

WHITE, GRAY, BLACK = 0, 1, 2


class VisitError(AssertionError):
    pass


@dataclass
class WalkRound:
    """What one ComputeWalks call saw; kept for tracing and tests."""

    cycle: list[int]
    left: set[int]
    right: set[int]
    left_nodes: set[int] = field(default_factory=set)
    right_nodes: set[int] = field(default_factory=set)
    left_edges: int = 0
    right_edges: int = 0


def _reach(succ, sources: set[int], allowed: set[int]) -> set[int]:
    seen = set(sources)
    queue = deque(sources)
    while queue:
        u = queue.popleft()
        for v in succ[u]:
            if v in allowed and v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


class _Visit:
    def __init__(self, g: Digraph, rank: Sequence[int]):
        missing = [v for v in range(g.n) if not g.pred[v]]
        if missing:
            raise ValueError(f"nodes without incoming edges: {missing}")
        self.rank = rank
        self.succ = [sorted(outs, key=rank.__getitem__) for outs in g.succ]
        self.p: list[int | None] = [None] * g.n
        self.color = [WHITE] * g.n
        self.next: list[int | None] = [None] * g.n
        self.rounds: list[WalkRound] = []

    def run(self, roots: Sequence[int]) -> None:
        for r in roots:
            if self.color[r] == WHITE:
                self.dfs(r)

    def dfs(self, root: int) -> None:
        color, nxt = self.color, self.next
        color[root] = GRAY
        stack = [[root, 0]]
        while stack:
            frame = stack[-1]
            u, i = frame
            if i == len(self.succ[u]):
                color[u] = BLACK
                stack.pop()
                continue
            frame[1] += 1
            v = self.succ[u][i]
            if color[v] == WHITE:
                nxt[u] = v
                color[v] = GRAY
                stack.append([v, 0])
            elif color[v] == GRAY:
                nxt[u] = v
                # Listed from the gray node, i.e. in DFS discovery order; this
                # fixes the BFS queue order and so the tie-breaks between
                # equally short paths.
                cycle = [v]
                x = nxt[v]
                while x != v:
                    cycle.append(x)
                    x = nxt[x]
                self.compute_walks(cycle)

    def compute_walks(self, cycle: list[int]) -> None:
        rank, succ, p, nxt = self.rank, self.succ, self.p, self.next
        open_ = {v for v in range(len(p)) if p[v] is None}
        on_cycle = set(cycle)
        left: set[int] = set()
        right: set[int] = set()
        cr_edges: dict[int, list[int]] = {u: [] for u in cycle}
        cl_edges: dict[int, list[int]] = {u: [] for u in cycle}
        for u in cycle:
            after = rank[nxt[u]]
            for v in succ[u]:
                if v not in open_:
                    continue
                if rank[v] > after:
                    right.add(v)
                    cr_edges[u].append(v)
                elif rank[v] < after:
                    left.add(v)
                    cl_edges[u].append(v)
        rnd = WalkRound(cycle, left, right)

        reach_r = _reach(succ, right, open_)
        reach_l = _reach(succ, left, open_)
        if reach_l & on_cycle:
            raise VisitError(f"left subgraph re-enters cycle {cycle}")

        def adjacency(reach: set[int], from_cycle: dict[int, list[int]]) -> dict[int, list[int]]:
            adj = {}
            for u in on_cycle | reach:
                outs = set(from_cycle.get(u, ()))
                if u in reach:
                    outs.update(v for v in succ[u] if v in reach)
                adj[u] = sorted(outs, key=rank.__getitem__)
            return adj

        g_right = adjacency(reach_r, cr_edges)
        g_left = adjacency(reach_l, cl_edges)
        rnd.right_nodes = on_cycle | reach_r
        rnd.left_nodes = on_cycle | reach_l
        rnd.right_edges = sum(map(len, g_right.values()))
        rnd.left_edges = sum(map(len, g_left.values()))

        # Shortest paths first; the longest-path pass then overrides shared nodes.
        found = set(cycle)
        queue = deque(cycle)
        while queue:
            u = queue.popleft()
            for v in g_right[u]:
                if v not in found:
                    found.add(v)
                    p[v] = u
                    queue.append(v)

        dist = self._longest(cycle, g_left)
        found = set(cycle)
        queue = deque(cycle)
        while queue:
            u = queue.popleft()
            for v in g_left[u]:
                if v not in found and dist[v] == dist[u] + 1:
                    found.add(v)
                    p[v] = u
                    queue.append(v)
        if found != rnd.left_nodes:
            raise VisitError("longest-path search missed nodes of the left subgraph")

        for u in cycle:
            p[nxt[u]] = u
        for u in rnd.left_nodes | rnd.right_nodes:
            self.color[u] = BLACK
        self.rounds.append(rnd)

    @staticmethod
    def _longest(cycle: list[int], adj: dict[int, list[int]]) -> dict[int, int]:
        indeg = {u: 0 for u in adj}
        for outs in adj.values():
            for v in outs:
                indeg[v] += 1
        if any(indeg[u] for u in cycle):
            raise VisitError("left subgraph has an edge into the cycle")
        dist = {u: 0 if u in cycle else -1 for u in adj}
        ready = deque(u for u in adj if indeg[u] == 0)
        done = 0
        while ready:
            u = ready.popleft()
            done += 1
            for v in adj[u]:
                dist[v] = max(dist[v], dist[u] + 1)
                indeg[v] -= 1
                if indeg[v] == 0:
                    ready.append(v)
        if done != len(adj):
            raise VisitError("left subgraph is not acyclic")
        return dist


def forward_visit(
    g: Digraph,
    rank: Sequence[int],
    roots: Sequence[int] | None = None,
    trace: list[WalkRound] | None = None,
) -> tuple[int, ...]:
    """Predecessor map whose iterates are leftmost walks under ``rank``.

    DFS roots are taken from ``roots`` first, then every node by increasing id.
    """
    visit = _Visit(g, rank)
    order = list(roots or ()) + list(range(g.n))
    visit.run(order)
    if trace is not None:
        trace.extend(visit.rounds)
    p = visit.p
    unset = [v for v in range(g.n) if p[v] is None]
    if unset:
        raise VisitError(f"no predecessor assigned to {unset}")
    return tuple(p)  # type: ignore[arg-type]


def rightmost_map(
    g: Digraph,
    rank: Sequence[int],
    roots: Sequence[int] | None = None,
    trace: list[WalkRound] | None = None,
) -> tuple[int, ...]:
    return forward_visit(g, [-r for r in rank], roots, trace)


def walk(p: Sequence[int], u: int, length: int) -> list[int]:
    out = [u]
    for _ in range(length - 1):
        u = p[u]
        out.append(u)
    return out


def certify_leftmost(g: Digraph, rank: Sequence[int], p: Sequence[int]) -> bool:
    """Check every p-walk against all walks that meet it.

    For a walk ``u_1, u_2, ...`` to ``u`` and each position ``j``, the nodes
    that can sit at position ``j-1`` of a walk through ``u_j`` are the
    successors of ``u_j`` reaching ``u`` in exactly ``j-2`` steps. The pair
    (that reach-set, ``u_{j-1}``) evolves deterministically, so the scan stops
    at the first repeated pair instead of at a fixed depth.
    """
    n = g.n
    if len(p) != n:
        return False
    for u in range(n):
        if p[u] not in g.pred[u]:
            return False
    for u in range(n):
        reach = frozenset([u])
        prev = u
        seen = set()
        while (reach, prev) not in seen:
            seen.add((reach, prev))
            x = p[prev]
            best = min((y for y in g.succ[x] if y in reach), key=rank.__getitem__)
            if rank[best] < rank[prev]:
                return False
            reach = frozenset(w for y in reach for w in g.pred[y])
            prev = x
    return True


def certify_rightmost(g: Digraph, rank: Sequence[int], p: Sequence[int]) -> bool:
    return certify_leftmost(g, [-r for r in rank], p)


def dump(p: Sequence[int]) -> str:
    return "".join(f"p {u} {v}\n" for u, v in enumerate(p))
