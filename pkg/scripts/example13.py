#!/usr/bin/env python3
"""Dump every intermediate of the 13-state example (ids shown 1-based)."""

import sys
from pathlib import Path

from cfsindex.index import construct
from cfsindex.nfa import parse_nfa

FIXTURE = Path(__file__).resolve().parent.parent / "tests" / "data" / "example13.nfa"


def main() -> int:
    c = construct(parse_nfa(FIXTURE.read_text()))
    name = c.nfa.symbols
    print("u  inf(25)                    sup(25)                    p_inf p_sup phi gamma")
    for u in range(c.nfa.n):
        inf = "".join(name[x] for x in c.inf[u])
        sup = "".join(name[x] for x in c.sup[u])
        print(f"{u + 1:<2} {inf:<26} {sup:<26} {c.p_inf[u] + 1:>5} {c.p_sup[u] + 1:>5} {c.depths.phi[u]:>3} {c.depths.gamma[u]:>5}")
    for u, v in ((3, 5), (2, 6), (4, 7), (10, 11)):
        print(f"query {u} {v}: {c.index.query(u - 1, v - 1)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
