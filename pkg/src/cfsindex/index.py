"""The O(n)-word order index and its query procedure."""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from . import infsup, walks
from .conflicts import ConflictDepths, conflict_depths
from .nfa import Nfa, require_forward_stable, validate
from .oracle import (
    PartialOrderMatrix,
    TotalOrder,
    colex_extension,
    is_colex_extension,
    max_colex_order,
)

MAGIC = b"CFSX"
VERSION = 1
HEADER = struct.Struct("<4sIQ")
HEADER_WORDS = HEADER.size // 8
COLUMNS = ("rank", "label", "p_inf", "p_sup", "phi", "gamma")


class IndexFormatError(ValueError):
    pass


@dataclass(frozen=True)
class QueryTrace:
    outcome: bool
    case: str
    steps: int
    j: int | None = None
    j_meet: int | None = None
    h: int | None = None


@dataclass(frozen=True)
class CfsIndex:
    rank: tuple[int, ...]
    label: tuple[int, ...]
    p_inf: tuple[int, ...]
    p_sup: tuple[int, ...]
    phi: tuple[int, ...]
    gamma: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.rank)

    @property
    def words(self) -> int:
        return HEADER_WORDS + len(COLUMNS) * self.n

    def leq(self, u: int, v: int) -> bool:
        return self.query(u, v).outcome

    def query(self, u: int, v: int) -> QueryTrace:
        n = self.n
        if not (0 <= u < n and 0 <= v < n):
            raise IndexError(f"state ids must lie in [0, {n})")
        if u == v:
            return QueryTrace(True, "a", 1)
        rank, label = self.rank, self.label
        if rank[v] < rank[u]:
            return QueryTrace(False, "b", 1)

        # One pass over (u_i, v_i) = (p_sup^{i-1}(u), p_inf^{i-1}(v)) finds the
        # first label divergence, the first rank inversion j and the first
        # meeting index before j.
        us: list[int] = []
        vs: list[int] = []
        j = j_meet = None
        cmp = 0
        x, y = u, v
        for i in range(1, 2 * n):
            us.append(x)
            vs.append(y)
            if j is None:
                if x == y and j_meet is None:
                    j_meet = i
                if rank[y] < rank[x]:
                    j = i
            if label[x] != label[y]:
                cmp = -1 if label[x] < label[y] else 1
                break
            x, y = self.p_sup[x], self.p_inf[y]
        steps = len(us)
        if cmp <= 0:
            return QueryTrace(True, "c", steps)
        if j is None:
            raise AssertionError(f"query({u}, {v}): sup > inf but no rank inversion within {steps} steps")
        if j_meet is None:
            return QueryTrace(False, "d", steps, j=j)
        h = max(
            max(self.phi[vs[i]] + i for i in range(j_meet - 1)),
            max(self.gamma[us[i]] + i for i in range(j_meet - 1)),
        )
        if h >= j_meet:
            return QueryTrace(False, "e", steps, j=j, j_meet=j_meet, h=h)
        return QueryTrace(True, "f", steps, j=j, j_meet=j_meet, h=h)

    def dump(self) -> str:
        head = "state " + " ".join(COLUMNS) + "\n"
        return head + "".join(
            f"{u} " + " ".join(str(getattr(self, c)[u]) for c in COLUMNS) + "\n"
            for u in range(self.n)
        )


def serialize(idx: CfsIndex) -> bytes:
    body = np.array([getattr(idx, c) for c in COLUMNS], dtype="<u8")
    return HEADER.pack(MAGIC, VERSION, idx.n) + body.tobytes()


def deserialize(data: bytes) -> CfsIndex:
    if len(data) < HEADER.size:
        raise IndexFormatError("truncated header")
    magic, version, n = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise IndexFormatError(f"bad magic {magic!r}")
    if version != VERSION:
        raise IndexFormatError(f"unsupported version {version}")
    expected = HEADER.size + 8 * len(COLUMNS) * n
    if len(data) != expected:
        raise IndexFormatError(f"expected {expected} bytes for n={n}, got {len(data)}")
    body = np.frombuffer(data, dtype="<u8", offset=HEADER.size).reshape(len(COLUMNS), n)
    cols = {c: tuple(int(x) for x in row) for c, row in zip(COLUMNS, body)}
    if sorted(cols["rank"]) != list(range(1, n + 1)):
        raise IndexFormatError("rank column is not a permutation of 1..n")
    for c in ("p_inf", "p_sup"):
        if any(x >= n for x in cols[c]):
            raise IndexFormatError(f"{c} refers to a state >= n")
    for c in ("phi", "gamma"):
        if any(not 1 <= x <= max(1, 2 * n - 1) for x in cols[c]):
            raise IndexFormatError(f"{c} outside [1, 2n-1]")
    return CfsIndex(**cols)


@dataclass(frozen=True)
class Construction:
    """Every intermediate of a build; only ``index`` is meant to be kept."""

    nfa: Nfa
    order: PartialOrderMatrix
    extension: TotalOrder
    inf: list[infsup.Prefix]
    sup: list[infsup.Prefix]
    inf_graph: infsup.Digraph
    sup_graph: infsup.Digraph
    p_inf: tuple[int, ...]
    p_sup: tuple[int, ...]
    depths: ConflictDepths
    index: CfsIndex


def construct(nfa: Nfa, extension: TotalOrder | None = None, check: bool = True) -> Construction:
    validate(nfa)
    require_forward_stable(nfa)
    order = max_colex_order(nfa)
    if extension is None:
        extension = colex_extension(order, nfa)
    elif not is_colex_extension(extension.rank, order):
        raise ValueError("given total order does not contain the maximum co-lex order")
    inf = infsup.inf_prefixes(nfa)
    sup = infsup.sup_prefixes(nfa)
    g_inf = infsup.inf_graph(nfa, inf)
    g_sup = infsup.sup_graph(nfa, sup)
    p_inf = walks.forward_visit(g_inf, extension.rank)
    p_sup = walks.rightmost_map(g_sup, extension.rank)
    if check:
        assert walks.certify_leftmost(g_inf, extension.rank, p_inf), "infimum walks not left-minimal"
        assert walks.certify_rightmost(g_sup, extension.rank, p_sup), "supremum walks not right-maximal"
    depths = conflict_depths(nfa, p_inf, p_sup, order)
    index = CfsIndex(extension.rank, nfa.label, p_inf, p_sup, depths.phi, depths.gamma)
    return Construction(nfa, order, extension, inf, sup, g_inf, g_sup, p_inf, p_sup, depths, index)


def build(nfa: Nfa, extension: TotalOrder | None = None, check: bool = True) -> CfsIndex:
    return construct(nfa, extension, check).index
