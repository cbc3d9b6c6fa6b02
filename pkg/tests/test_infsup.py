import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from cfsindex.generate import random_nfa
from cfsindex.infsup import (
    compare_prefixes,
    dump,
    inf_graph,
    inf_prefixes,
    sup_graph,
    sup_prefixes,
)

# Rows of the worked-example table: (finite head, repeated tail) per state 1..13.
TABLE_INF = ["", "a", "aa", "aab", "ab", "ab", "aab", "b", "b", "baa", "baab", "bb", "bb"]
TABLE_SUP = ["", "ab*", "aab*", "aab*", "ab", "ab*", "abb", "b", "b*", "baab*", "babb", "bb", "b*"]


def expand(row: str, length: int = 25) -> str:
    """`ab*` is a·b^ω; anything else ends in #^ω."""
    if row.endswith("*"):
        head, tail = row[:-2], row[-2]
    else:
        head, tail = row, "#"
    return (head + tail * length)[:length]


def spell(nfa, prefix):
    return "".join(nfa.symbols[c] for c in prefix)


def test_example13_table(ex13):
    inf, sup = inf_prefixes(ex13), sup_prefixes(ex13)
    assert len(inf[0]) == 25
    assert [spell(ex13, p) for p in inf] == [expand(r) for r in TABLE_INF]
    assert [spell(ex13, p) for p in sup] == [expand(r) for r in TABLE_SUP]


def test_start_state_is_all_hash(ex13):
    assert set(inf_prefixes(ex13)[0]) == {0} == set(sup_prefixes(ex13)[0])


def test_example13_graph_edges(ex13):
    g = inf_graph(ex13)
    assert 5 in g.succ[8]  # example edge 9 -> 6
    assert 8 in g.succ[0]  # example edge 1 -> 9
    assert 0 in g.succ[0] and 0 in sup_graph(ex13).succ[0]


def test_compare():
    assert compare_prefixes((1, 2), (1, 2)) == 0
    assert compare_prefixes((1, 2), (1, 3)) == -1
    assert compare_prefixes((2, 0), (1, 3)) == 1
    with pytest.raises(ValueError):
        compare_prefixes((1,), (1, 2))


def test_sup_of_3_below_inf_of_5(ex13):
    assert compare_prefixes(sup_prefixes(ex13)[2], inf_prefixes(ex13)[4]) <= 0


def naive_prefixes(nfa, length, largest):
    """All walk labels of each length by explicit tuple DP."""
    pick = max if largest else min
    cur = [(nfa.label[u],) for u in range(nfa.n)]
    for _ in range(length - 1):
        cur = [(nfa.label[u],) + pick(cur[x] for x in nfa.pred[u]) for u in range(nfa.n)]
    return cur


def small(seed, max_n=8):
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    return random_nfa(n, min(1 + n * (n - 1), rng.randint(n, 3 * n)), 3, rng)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_prefixes_match_naive_dp(seed):
    nfa = small(seed, 10)
    L = 2 * nfa.n - 1
    assert inf_prefixes(nfa) == naive_prefixes(nfa, L, False)
    assert sup_prefixes(nfa) == naive_prefixes(nfa, L, True)
    assert all(i <= s for i, s in zip(inf_prefixes(nfa), sup_prefixes(nfa)))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_graph_walks_spell_the_prefix(seed):
    nfa = small(seed, 6)
    L = 2 * nfa.n - 1
    for prefixes, graph in ((inf_prefixes(nfa), inf_graph(nfa)), (sup_prefixes(nfa), sup_graph(nfa))):
        for u in range(nfa.n):
            walks = [[u]]
            for _ in range(L - 1):
                walks = [w + [x] for w in walks for x in graph.pred[w[-1]]]
            assert all(tuple(nfa.label[x] for x in w) == prefixes[u] for w in walks)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_graph_edges_are_exactly_the_optimal_steps(seed):
    # (x, u) is a graph edge iff some walk through it spells the optimum of u
    # at depth 4n, far beyond where the prefixes could still disagree.
    nfa = small(seed, 5)
    L = 4 * nfa.n
    for largest, prefixes, graph in (
        (False, naive_prefixes(nfa, L, False), inf_graph(nfa)),
        (True, naive_prefixes(nfa, L, True), sup_graph(nfa)),
    ):
        for u in range(nfa.n):
            for x in nfa.pred[u]:
                usable = (nfa.label[u],) + prefixes[x][: L - 1] == prefixes[u]
                assert usable == (x in graph.pred[u])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_comparisons_stable_under_4n_expansion(seed):
    nfa = small(seed, 8)
    L = 2 * nfa.n - 1
    short = inf_prefixes(nfa) + sup_prefixes(nfa)
    long = inf_prefixes(nfa, 4 * nfa.n) + sup_prefixes(nfa, 4 * nfa.n)
    for (a, b), (la, lb) in zip(product(short, repeat=2), product(long, repeat=2)):
        assert compare_prefixes(a, b) == compare_prefixes(la[:L], lb[:L])
        assert compare_prefixes(a, b) == compare_prefixes(la, lb)


def test_dump(ex13):
    line = dump(ex13, inf_prefixes(ex13), sup_prefixes(ex13)).splitlines()[9]
    assert line.startswith("infsup 9 b a a # #")
