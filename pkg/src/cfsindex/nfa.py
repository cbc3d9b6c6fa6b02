"""NFA representation, the line-oriented text format, normalization and
forward-stable partitions.

States are dense integers ``0..n-1``. Symbols are dense codes into
``Nfa.symbols``; code 0 is the start symbol ``#`` and is the smallest.
Transitions are stored as ``(src, dst, sym)`` triples. Once an automaton is
input-consistent, ``sym`` always equals ``label[dst]``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

START = "#"


class NfaError(ValueError):
    pass


class ParseError(NfaError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class InvariantError(NfaError):
    pass


class NotForwardStableError(InvariantError):
    def __init__(self, block: tuple[int, ...]):
        super().__init__(
            f"automaton is not forward-stable: states {list(block)} fall in one block "
            "of the coarsest forward-stable partition (run `normalize --quotient`)"
        )
        self.block = block


@dataclass(frozen=True)
class Nfa:
    symbols: tuple[str, ...]
    label: tuple[int, ...]
    initial: int
    edges: tuple[tuple[int, int, int], ...]

    @property
    def n(self) -> int:
        return len(self.label)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def succ(self) -> tuple[tuple[int, ...], ...]:
        out: list[set[int]] = [set() for _ in range(self.n)]
        for u, v, _ in self.edges:
            out[u].add(v)
        return tuple(tuple(sorted(s)) for s in out)

    @cached_property
    def pred(self) -> tuple[tuple[int, ...], ...]:
        inn: list[set[int]] = [set() for _ in range(self.n)]
        for u, v, _ in self.edges:
            inn[v].add(u)
        return tuple(tuple(sorted(s)) for s in inn)

    def is_input_consistent(self) -> bool:
        return all(a == self.label[v] for _, v, a in self.edges)

    def symbol_name(self, code: int) -> str:
        return self.symbols[code]


def make_nfa(
    symbols: Iterable[str],
    label: Iterable[int],
    initial: int,
    edges: Iterable[tuple[int, ...]],
) -> Nfa:
    """Build an Nfa; two-element edges take their label from the target."""
    label = tuple(label)
    triples = set()
    for e in edges:
        if len(e) == 2:
            u, v = e
            triples.add((u, v, label[v]))
        else:
            triples.add(tuple(e))
    return Nfa(tuple(symbols), label, initial, tuple(sorted(triples)))


# -- text format -------------------------------------------------------------


def parse_nfa(text: str) -> Nfa:
    lines = [
        (no, raw.split())
        for no, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.lstrip().startswith("#")
    ]
    it = iter(lines)

    def expect(keyword: str) -> tuple[int, list[str]]:
        try:
            no, toks = next(it)
        except StopIteration:
            raise ParseError(len(text.splitlines()) + 1, f"expected `{keyword}`, got end of input")
        if toks[0] != keyword:
            raise ParseError(no, f"expected `{keyword}`, got `{toks[0]}`")
        return no, toks

    def ints(no: int, toks: list[str]) -> list[int]:
        try:
            vals = [int(t) for t in toks]
        except ValueError:
            raise ParseError(no, f"expected integers, got {' '.join(toks)!r}")
        if any(v < 0 for v in vals):
            raise ParseError(no, "negative value")
        return vals

    no, toks = expect("nfa")
    if len(toks) != 4:
        raise ParseError(no, "header must be `nfa <n> <m> <sigma>`")
    n, m, sigma = ints(no, toks[1:])
    if n < 1 or sigma < 1:
        raise ParseError(no, "need n >= 1 and sigma >= 1")

    no, toks = expect("initial")
    if len(toks) != 2:
        raise ParseError(no, "expected `initial <id>`")
    (initial,) = ints(no, toks[1:])
    if initial >= n:
        raise ParseError(no, f"initial state {initial} >= n={n}")

    no, toks = expect("symbols")
    names = toks[1:]
    if len(names) != sigma:
        raise ParseError(no, f"declared sigma={sigma} but listed {len(names)} symbols")
    if names[0] != START:
        raise ParseError(no, f"first symbol must be `{START}`")
    if len(set(names)) != len(names):
        raise ParseError(no, "duplicate symbol")
    code = {s: i for i, s in enumerate(names)}

    label: list[int | None] = [None] * n
    for _ in range(n):
        no, toks = expect("state")
        if len(toks) != 3:
            raise ParseError(no, "expected `state <id> <symbol>`")
        (sid,) = ints(no, toks[1:2])
        if sid >= n:
            raise ParseError(no, f"state id {sid} >= n={n}")
        if label[sid] is not None:
            raise ParseError(no, f"state {sid} declared twice")
        if toks[2] not in code:
            raise ParseError(no, f"unknown symbol `{toks[2]}`")
        label[sid] = code[toks[2]]

    edges: set[tuple[int, int, int]] = set()
    for _ in range(m):
        no, toks = expect("edge")
        if len(toks) not in (3, 4):
            raise ParseError(no, "expected `edge <src> <dst> [<symbol>]`")
        src, dst = ints(no, toks[1:3])
        if src >= n or dst >= n:
            raise ParseError(no, f"state id >= n={n}")
        if len(toks) == 4:
            if toks[3] not in code:
                raise ParseError(no, f"unknown symbol `{toks[3]}`")
            sym = code[toks[3]]
        else:
            sym = label[dst]
        if (src, dst, sym) in edges:
            raise ParseError(no, f"duplicate transition {src} -> {dst}")
        edges.add((src, dst, sym))

    extra = next(it, None)
    if extra is not None:
        raise ParseError(extra[0], f"unexpected line `{' '.join(extra[1])}`")
    return Nfa(tuple(names), tuple(label), initial, tuple(sorted(edges)))  # type: ignore[arg-type]


def format_nfa(nfa: Nfa) -> str:
    out = [
        f"nfa {nfa.n} {nfa.m} {len(nfa.symbols)}",
        f"initial {nfa.initial}",
        "symbols " + " ".join(nfa.symbols),
    ]
    out += [f"state {u} {nfa.symbols[a]}" for u, a in enumerate(nfa.label)]
    for u, v, a in nfa.edges:
        if a == nfa.label[v]:
            out.append(f"edge {u} {v}")
        else:
            out.append(f"edge {u} {v} {nfa.symbols[a]}")
    return "\n".join(out) + "\n"


# -- invariants and normalization --------------------------------------------


def reachable(nfa: Nfa, start: int | None = None) -> set[int]:
    start = nfa.initial if start is None else start
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in nfa.succ[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def violations(nfa: Nfa) -> list[str]:
    """Every broken normalization invariant, as readable messages."""
    found = []
    s = nfa.initial
    if nfa.label[s] != 0:
        found.append(f"initial state {s} is not labeled `{START}`")
    for u, v, a in nfa.edges:
        if a != nfa.label[v]:
            found.append(f"transition {u}->{v} labeled `{nfa.symbols[a]}` but target is `{nfa.symbols[nfa.label[v]]}`")
        if a == 0 and (u, v) != (s, s):
            found.append(f"`{START}` used on non-initial transition {u}->{v}")
        if v == s and u != s:
            found.append(f"initial state has extra incoming transition from {u}")
    if (s, s, 0) not in set(nfa.edges):
        found.append("missing start loop on the initial state")
    for v, a in enumerate(nfa.label):
        if v != s and a == 0:
            found.append(f"non-initial state {v} labeled `{START}`")
    unreached = set(range(nfa.n)) - reachable(nfa)
    if unreached:
        found.append(f"unreachable states {sorted(unreached)}")
    used = {a for _, _, a in nfa.edges}
    for a, name in enumerate(nfa.symbols):
        if a not in used:
            found.append(f"symbol `{name}` labels no transition")
    return found


def validate(nfa: Nfa) -> Nfa:
    problems = violations(nfa)
    if problems:
        raise InvariantError("; ".join(problems))
    return nfa


def normalize(nfa: Nfa) -> Nfa:
    """Bring an NFA into input-consistent form with a lone ``#`` loop on the
    initial state. States entered under k labels become k copies; each copy
    keeps every outgoing transition. Copies beyond the first get fresh ids
    appended after ``n``.
    """
    s = nfa.initial
    for u, v, a in nfa.edges:
        if a == 0 and (u, v) != (s, s):
            raise InvariantError(f"`{START}` used on non-initial transition {u}->{v}")
    edges = set(nfa.edges)
    edges.add((s, s, 0))

    probe = Nfa(nfa.symbols, nfa.label, s, tuple(sorted(edges)))
    unreached = set(range(nfa.n)) - reachable(probe)
    if unreached:
        raise InvariantError(f"unreachable states {sorted(unreached)}")
    used = {a for _, _, a in edges}
    unused = [name for a, name in enumerate(nfa.symbols) if a not in used]
    if unused:
        raise InvariantError(f"symbols labeling no transition: {unused}")

    in_labels: list[set[int]] = [set() for _ in range(nfa.n)]
    for _, v, a in edges:
        in_labels[v].add(a)

    copy_of: dict[tuple[int, int], int] = {}
    label: list[int] = []
    for v in range(nfa.n):
        labs = in_labels[v]
        primary = nfa.label[v] if nfa.label[v] in labs else min(labs)
        if v == s:
            primary = 0
        copy_of[(v, primary)] = v
        label.append(primary)
    for v in range(nfa.n):
        for a in sorted(in_labels[v]):
            if (v, a) not in copy_of:
                copy_of[(v, a)] = len(label)
                label.append(a)

    copies: list[list[int]] = [[] for _ in range(nfa.n)]
    for (v, _), c in copy_of.items():
        copies[v].append(c)

    new_edges = set()
    for u, v, a in edges:
        target = copy_of[(v, a)]
        for cu in copies[u]:
            new_edges.add((cu, target, a))
    return Nfa(nfa.symbols, tuple(label), s, tuple(sorted(new_edges)))


# -- forward-stable partitions -----------------------------------------------


@dataclass(frozen=True)
class Partition:
    block_of: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_keys(cls, keys: list) -> Partition:
        """Group states with equal keys; blocks are numbered by smallest member."""
        groups: dict = {}
        for u, k in enumerate(keys):
            groups.setdefault(k, []).append(u)
        blocks = tuple(sorted(tuple(g) for g in groups.values()))
        block_of = [0] * len(keys)
        for b, members in enumerate(blocks):
            for u in members:
                block_of[u] = b
        return cls(tuple(block_of), blocks)

    def __len__(self) -> int:
        return len(self.blocks)


def _split_once(nfa: Nfa, part: Partition) -> Partition:
    keys = [
        (part.block_of[v], frozenset(part.block_of[u] for u in nfa.pred[v]))
        for v in range(nfa.n)
    ]
    return Partition.from_keys(keys)


def is_stable(nfa: Nfa, part: Partition) -> bool:
    """For all blocks B1, B2: every state of B2 has a transition from B1, or none does."""
    for members in part.blocks:
        sigs = {frozenset(part.block_of[u] for u in nfa.pred[v]) for v in members}
        if len(sigs) > 1:
            return False
    return True


def coarsest_forward_stable_partition(nfa: Nfa) -> Partition:
    part = Partition.from_keys(list(nfa.label))
    while True:
        finer = _split_once(nfa, part)
        if len(finer) == len(part):
            return part
        part = finer


def forward_stable_quotient(nfa: Nfa) -> Nfa:
    part = coarsest_forward_stable_partition(nfa)
    b = part.block_of
    label = tuple(nfa.label[members[0]] for members in part.blocks)
    edges = {(b[u], b[v], a) for u, v, a in nfa.edges}
    quotient = Nfa(nfa.symbols, label, b[nfa.initial], tuple(sorted(edges)))
    assert is_forward_stable(quotient)
    return quotient


def is_forward_stable(nfa: Nfa) -> bool:
    return len(coarsest_forward_stable_partition(nfa)) == nfa.n


def require_forward_stable(nfa: Nfa) -> None:
    part = coarsest_forward_stable_partition(nfa)
    for members in part.blocks:
        if len(members) > 1:
            raise NotForwardStableError(members)
