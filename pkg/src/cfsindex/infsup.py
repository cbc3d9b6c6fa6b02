"""Infimum and supremum string prefixes and the infimum/supremum graphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .nfa import Nfa

Prefix = tuple[int, ...]


@dataclass(frozen=True)
class Digraph:
    succ: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.succ)

    @cached_property
    def pred(self) -> tuple[tuple[int, ...], ...]:
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for u, outs in enumerate(self.succ):
            for v in outs:
                inn[v].append(u)
        return tuple(tuple(sorted(x)) for x in inn)

    @cached_property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u, outs in enumerate(self.succ) for v in outs)

    @property
    def m(self) -> int:
        return len(self.edges)

    @classmethod
    def from_edges(cls, n: int, edges) -> Digraph:
        out: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            out[u].add(v)
        return cls(tuple(tuple(sorted(s)) for s in out))


def _relax(nfa: Nfa, length: int, largest: bool) -> list[Prefix]:
    # Round k ranks the length-k prefixes; round k+1 keys each state by
    # (label, best round-k rank over its in-neighbours).
    n = nfa.n
    lab = nfa.label
    pick = max if largest else min
    rank = list(lab)
    choices: list[list[int]] = []
    for _ in range(length - 1):
        best = [pick(nfa.pred[u], key=rank.__getitem__) for u in range(n)]
        keys = [(lab[u], rank[best[u]]) for u in range(n)]
        dense = {k: i for i, k in enumerate(sorted(set(keys)))}
        rank = [dense[k] for k in keys]
        choices.append(best)
    prefixes = []
    for u in range(n):
        out = [lab[u]]
        x = u
        for best in reversed(choices):
            x = best[x]
            out.append(lab[x])
        prefixes.append(tuple(out))
    return prefixes


def prefix_length(nfa: Nfa) -> int:
    return 2 * nfa.n - 1


def inf_prefixes(nfa: Nfa, length: int | None = None) -> list[Prefix]:
    """First ``length`` (default ``2n-1``) symbols of every infimum string."""
    return _relax(nfa, prefix_length(nfa) if length is None else length, largest=False)


def sup_prefixes(nfa: Nfa, length: int | None = None) -> list[Prefix]:
    return _relax(nfa, prefix_length(nfa) if length is None else length, largest=True)


def _walk_graph(nfa: Nfa, prefixes: list[Prefix], largest: bool) -> Digraph:
    # Length-(2n-1) prefixes of distinct inf/sup strings already differ, so
    # prefix equality with the best in-neighbour is string equality.
    pick = max if largest else min
    edges = []
    for v in range(nfa.n):
        best = pick(prefixes[u] for u in nfa.pred[v])
        edges += [(u, v) for u in nfa.pred[v] if prefixes[u] == best]
    g = Digraph.from_edges(nfa.n, edges)
    missing = [v for v in range(g.n) if not g.pred[v]]
    assert not missing, f"states without an in-edge in walk graph: {missing}"
    return g


def inf_graph(nfa: Nfa, prefixes: list[Prefix] | None = None) -> Digraph:
    return _walk_graph(nfa, inf_prefixes(nfa) if prefixes is None else prefixes, largest=False)


def sup_graph(nfa: Nfa, prefixes: list[Prefix] | None = None) -> Digraph:
    return _walk_graph(nfa, sup_prefixes(nfa) if prefixes is None else prefixes, largest=True)


def compare_prefixes(a: Prefix, b: Prefix) -> int:
    """-1, 0 or 1 as ``a`` is lexicographically below, equal to or above ``b``."""
    if len(a) != len(b):
        raise ValueError(f"prefix lengths differ: {len(a)} != {len(b)}")
    return (a > b) - (a < b)


def dump(nfa: Nfa, inf: list[Prefix], sup: list[Prefix]) -> str:
    name = nfa.symbols
    return "".join(
        f"infsup {u} {' '.join(name[c] for c in inf[u])} {' '.join(name[c] for c in sup[u])}\n"
        for u in range(nfa.n)
    )
