"""Command line: normalize, build, query, check, gen, bench."""

from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path

from . import generate
from .index import IndexFormatError, build, deserialize, serialize
from .nfa import (
    InvariantError,
    Nfa,
    NotForwardStableError,
    ParseError,
    forward_stable_quotient,
    format_nfa,
    normalize,
    parse_nfa,
    reachable,
    validate,
)
from .oracle import PairGraph, max_colex_order, preceding_pair_graph

DEFAULT_SEED = 42

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_INVARIANT = 0, 1, 2, 3


def _read_nfa(path: str) -> Nfa:
    return parse_nfa(Path(path).read_text())


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.replace(" ", "").split(";"):
        if not chunk:
            continue
        u, sep, v = chunk.partition(",")
        if not sep:
            raise ValueError(f"bad pair `{chunk}`, expected `u,v`")
        pairs.append((int(u), int(v)))
    return pairs


# -- oracle comparison ---------------------------------------------------------


def oracle_note(graph: PairGraph, nfa: Nfa, u: int, v: int) -> str:
    if u == v:
        return "oracle: reflexive"
    for a, b in sorted(graph.preceding((u, v))):
        if nfa.label[a] > nfa.label[b]:
            return f"oracle: false, witness preceding pair ({a},{b}) with labels {nfa.symbols[nfa.label[a]]} > {nfa.symbols[nfa.label[b]]}"
    return "oracle: true, no preceding pair violates the labels"


def find_mismatches(nfa: Nfa, index=None) -> list[tuple[int, int]]:
    index = build(nfa) if index is None else index
    if index.n != nfa.n:
        raise ValueError(f"index has {index.n} states, automaton has {nfa.n}")
    rel = max_colex_order(nfa).rel
    return [
        (u, v)
        for u in range(nfa.n)
        for v in range(nfa.n)
        if index.query(u, v).outcome != bool(rel[u, v])
    ]


def _restrict(nfa: Nfa, drop: int) -> Nfa | None:
    keep = [u for u in range(nfa.n) if u != drop]
    remap = {u: i for i, u in enumerate(keep)}
    edges = [(remap[u], remap[v], a) for u, v, a in nfa.edges if u != drop and v != drop]
    sub = Nfa(nfa.symbols, tuple(nfa.label[u] for u in keep), remap[nfa.initial], tuple(sorted(edges)))
    alive = reachable(sub)
    if len(alive) != sub.n:
        keep2 = sorted(alive)
        remap2 = {u: i for i, u in enumerate(keep2)}
        sub = Nfa(
            sub.symbols,
            tuple(sub.label[u] for u in keep2),
            remap2[sub.initial],
            tuple(sorted((remap2[u], remap2[v], a) for u, v, a in sub.edges if u in alive and v in alive)),
        )
    used = sorted({a for _, _, a in sub.edges})
    recode = {a: i for i, a in enumerate(used)}
    sub = Nfa(
        tuple(sub.symbols[a] for a in used),
        tuple(recode[a] for a in sub.label),
        sub.initial,
        tuple((u, v, recode[a]) for u, v, a in sub.edges),
    )
    try:
        return forward_stable_quotient(validate(sub))
    except InvariantError:
        return None


def minimize(nfa: Nfa, failing) -> Nfa:
    """Greedily delete states while ``failing(nfa)`` stays true."""
    changed = True
    while changed:
        changed = False
        for u in range(nfa.n):
            if u == nfa.initial:
                continue
            smaller = _restrict(nfa, u)
            if smaller is not None and failing(smaller):
                nfa = smaller
                changed = True
                break
    return nfa


def report_counterexample(nfa: Nfa, index, out) -> None:
    bad = find_mismatches(nfa, index)
    graph = preceding_pair_graph(nfa)
    u, v = bad[0]
    print("counterexample automaton:", file=out)
    out.write(format_nfa(nfa))
    print(f"pair {u} {v}", file=out)
    print(f"index: {index.query(u, v)}", file=out)
    print(oracle_note(graph, nfa, u, v), file=out)


# -- subcommands -------------------------------------------------------------------


def cmd_normalize(args) -> int:
    nfa = normalize(_read_nfa(args.input))
    if args.quotient:
        nfa = forward_stable_quotient(nfa)
    validate(nfa)
    _write(args.output, format_nfa(nfa))
    return EXIT_OK


def cmd_build(args) -> int:
    nfa = validate(_read_nfa(args.input))
    start = time.perf_counter()
    index = build(nfa)
    elapsed = (time.perf_counter() - start) * 1000
    data = serialize(index)
    Path(args.output).write_bytes(data)
    print(f"states {index.n}")
    print(f"words {len(data) // 8}")
    print(f"build_ms {elapsed:.1f}")
    return EXIT_OK


def cmd_query(args) -> int:
    index = deserialize(Path(args.input).read_bytes())
    try:
        pairs = parse_pairs(args.pairs)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    for u, v in pairs:
        if not (0 <= u < index.n and 0 <= v < index.n):
            print(f"error: state ids must lie in [0, {index.n})", file=sys.stderr)
            return EXIT_PARSE
    for u, v in pairs:
        t = index.query(u, v)
        print(f"{u} {v} {'true' if t.outcome else 'false'} case={t.case}")
    return EXIT_OK


def cmd_check(args) -> int:
    if args.input:
        nfa = validate(_read_nfa(args.input))
        index = deserialize(Path(args.index).read_bytes()) if args.index else build(nfa)
        bad = find_mismatches(nfa, index)
        print(f"n={nfa.n} m={nfa.m} mismatches={len(bad)}")
        if bad:
            report_counterexample(nfa, index, sys.stdout)
            return EXIT_MISMATCH
        return EXIT_OK

    failures = 0
    for k, nfa in enumerate(generate.corpus(args.trials, args.seed, args.max_n)):
        bad = find_mismatches(nfa)
        print(f"trial {k} n={nfa.n} m={nfa.m} mismatches={len(bad)}")
        if bad:
            failures += 1
            small = minimize(nfa, lambda a: bool(find_mismatches(a)))
            report_counterexample(small, build(small), sys.stdout)
    return EXIT_MISMATCH if failures else EXIT_OK


def cmd_gen(args) -> int:
    m = args.m if args.m is not None else min(2 * args.n, 1 + args.n * (args.n - 1))
    nfa = generate.random_nfa(args.n, m, args.sigma, random.Random(args.seed))
    _write(args.output, format_nfa(nfa))
    return EXIT_OK


BENCH_COLUMNS = ("n", "m", "words", "build_ms", "mean_steps", "max_steps", "mean_query_ns")


def bench_row(nfa: Nfa, queries: int, rng: random.Random, check: bool = True) -> dict:
    start = time.perf_counter()
    index = build(nfa, check=check)
    build_ms = (time.perf_counter() - start) * 1000
    n = nfa.n
    if n * n <= queries:
        pairs = [(u, v) for u in range(n) for v in range(n)]
    else:
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(queries)]
    start = time.perf_counter_ns()
    traces = [index.query(u, v) for u, v in pairs]
    query_ns = (time.perf_counter_ns() - start) / len(pairs)
    steps = [t.steps for t in traces]
    return {
        "n": n,
        "m": nfa.m,
        "words": len(serialize(index)) // 8,
        "build_ms": round(build_ms, 2),
        "mean_steps": round(sum(steps) / len(steps), 3),
        "max_steps": max(steps),
        "mean_query_ns": round(query_ns, 1),
    }


def cmd_bench(args) -> int:
    rng = random.Random(args.seed)
    if args.input:
        nfas = [validate(_read_nfa(args.input))]
    else:
        nfas = [
            generate.random_nfa(n, min(args.m_factor * n, 1 + n * (n - 1)), args.sigma, rng)
            for n in args.n
        ]
    print(",".join(BENCH_COLUMNS))
    for nfa in nfas:
        row = bench_row(nfa, args.queries, rng, check=not args.no_check)
        print(",".join(str(row[c]) for c in BENCH_COLUMNS))
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cfsindex", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="make an NFA input-consistent with a lone # loop")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--quotient", action="store_true", help="also take the forward-stable quotient")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("build", help="build the order index of a forward-stable NFA")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("query", help="answer u <=_FS v queries from an index file")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--pairs", required=True, help='"u,v;u,v;..."')
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("check", help="compare the index with the brute-force order")
    p.add_argument("-i", "--input", help="check this NFA instead of random ones")
    p.add_argument("--index", help="index file to check against --input (default: build it)")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--max-n", type=int, default=20)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="write a random forward-stable NFA")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int)
    p.add_argument("--sigma", type=int, default=3)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="space and query-step measurements as CSV")
    p.add_argument("-i", "--input")
    p.add_argument("-n", type=int, nargs="+", default=[50, 100, 200])
    p.add_argument("--m-factor", type=int, default=2)
    p.add_argument("--sigma", type=int, default=3)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--queries", type=int, default=50000, help="all n*n pairs when that is no more")
    p.add_argument("--no-check", action="store_true", help="skip walk certification during build")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except IndexFormatError as exc:
        print(f"bad index file: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotForwardStableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"block {' '.join(map(str, exc.block))}", file=sys.stderr)
        return EXIT_INVARIANT
    except InvariantError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
