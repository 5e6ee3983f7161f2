"""Command-line front end.

Subcommands cover invariant computation (``compute``), the word-producing
operations (``cover``, ``compose``, ``cable``, ``rdot``, ``preimage``,
``gen``), bounded homotopy search (``reduce``, ``equiv``), the property
suites (``verify``), exhaustive tabulation (``tabulate``) and covering-graph
export (``graph``).

Exit codes: 0 for success (including an "unknown" equivalence verdict), 1 for
usage or input errors, 2 when a verification suite fails.  The environment
variable ``VSTRING_BUDGET`` ("rank_increase,max_states,max_depth") overrides
the default search budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .core import MoveTrace, Nanoword, NanowordError, canonical_relabel, parse
from .enumeration import canonical_population
from .invariants import (
    invariant_bundle,
    n_values,
    reduce_to_primitive,
    based_matrix,
    u_polynomial,
)
from .ops import cable, compose, covering, gen_alpha_n, gen_gamma_pq, r_dot, uncover_preimage
from .search import SearchBudget, covering_graph, equivalent_bounded, reduce_bounded
from .suites import SUITES, run_suite
from .tabulate import tabulation_records, record_to_json

__all__ = ["main", "build_parser"]


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        raise SystemExit(f"error: {message}")


def _budget(text: str | None) -> SearchBudget:
    if text:
        return SearchBudget.parse(text)
    return SearchBudget.from_env()


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="vstring", description=__doc__.split("\n\n")[0])
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="invariant bundle of a word")
    p.add_argument("word")
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("cover", help="r-covering of a word")
    p.add_argument("word")
    p.add_argument("-r", type=int, required=True)

    p = sub.add_parser("compose", help="composition of two words")
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("cable", help="n-cable of a word")
    p.add_argument("word")
    p.add_argument("-n", type=int, required=True)

    p = sub.add_parser("rdot", help="nested r-fold duplication of a word")
    p.add_argument("word")
    p.add_argument("-r", type=int, required=True)

    p = sub.add_parser("preimage", help="word whose r-covering is the input")
    p.add_argument("word")
    p.add_argument("-r", type=int, required=True)

    p = sub.add_parser("gen", help="generate a standard family member")
    gsub = p.add_subparsers(dest="family", required=True)
    g = gsub.add_parser("gamma", help="the p,q two-block family")
    g.add_argument("p", type=int)
    g.add_argument("q", type=int)
    g = gsub.add_parser("alphan", help="the weight-zero cyclic family")
    g.add_argument("n", type=int)

    p = sub.add_parser("reduce", help="search for a lower-rank representative")
    p.add_argument("word")
    p.add_argument("--budget", help="rank_increase,max_states,max_depth")

    p = sub.add_parser("equiv", help="bounded homotopy test for two words")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--budget", help="rank_increase,max_states,max_depth")

    p = sub.add_parser("verify", help="run a named property suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--max-rank", type=int, default=3)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--sample", type=int, default=200)

    p = sub.add_parser("tabulate", help="enumerate words and their invariants")
    p.add_argument("--max-rank", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument(
        "--oracle",
        action="store_true",
        help="also merge words a bounded search proves homotopic",
    )

    p = sub.add_parser("graph", help="covering-map graph over small words, as DOT")
    p.add_argument("--max-rank", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--dot", required=True)
    return top


def _print_word(word: Nanoword, canonical: bool) -> None:
    print(canonical_relabel(word).text() if canonical else word.text())


def _print_trace(trace: MoveTrace) -> None:
    words = trace.replay()
    for site, word in zip(trace.steps, words[1:]):
        print(f"  {site}  ->  {word.text()}")


def _cmd_compute(args) -> int:
    word = parse(args.word)
    bundle = invariant_bundle(word)
    if args.as_json:
        print(json.dumps(bundle, sort_keys=True))
        return 0
    print(f"word: {bundle['word']}")
    print(f"rank: {bundle['rank']}")
    nv = n_values(word)
    print("n:", " ".join(f"{x}={nv[x]}" for x in word.letters) or "-")
    print(f"u: {u_polynomial(word)}")
    print(f"rho: {bundle['rho']}")
    return 0


def _cmd_equiv(args) -> int:
    budget = _budget(args.budget)
    result = equivalent_bounded(parse(args.first), parse(args.second), budget)
    print(result.verdict)
    if result.trace is not None:
        _print_trace(result.trace)
    if result.report is not None:
        for name, va, vb in result.report.evidence:
            print(f"  {name}: {va} vs {vb}")
    return 0


def _cmd_verify(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        report = run_suite(
            name, max_rank=args.max_rank, seed=args.seed, sample=args.sample
        )
        print(report.summary())
        for line in report.failures:
            print(f"  FAIL {line}")
        failed += report.failed
    return 2 if failed else 0


def _cmd_tabulate(args) -> int:
    records = tabulation_records(
        args.max_rank, oracle=SearchBudget.from_env() if args.oracle else None
    )
    with open(args.out, "w") as fh:
        for record in records:
            fh.write(record_to_json(record) + "\n")
    print(f"wrote {len(records)} records to {args.out}")
    return 0


def _cmd_graph(args) -> int:
    graph = covering_graph(canonical_population(args.max_rank), args.r)
    with open(args.dot, "w") as fh:
        fh.write(graph.to_dot())
    ok = all(graph.component_is_tree_with_root_loop(c) for c in graph.components())
    print(
        f"wrote {len(graph.nodes)} nodes to {args.dot}; "
        f"components are trees with a root loop: {ok}"
    )
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "compute":
            return _cmd_compute(args)
        if args.command == "cover":
            _print_word(covering(parse(args.word), args.r), canonical=False)
            return 0
        if args.command == "compose":
            _print_word(compose(parse(args.first), parse(args.second)), canonical=False)
            return 0
        if args.command == "cable":
            _print_word(cable(parse(args.word), args.n), canonical=True)
            return 0
        if args.command == "rdot":
            _print_word(r_dot(parse(args.word), args.r), canonical=True)
            return 0
        if args.command == "preimage":
            _print_word(uncover_preimage(parse(args.word), args.r), canonical=True)
            return 0
        if args.command == "gen":
            word = (
                gen_gamma_pq(args.p, args.q)
                if args.family == "gamma"
                else gen_alpha_n(args.n)
            )
            _print_word(word, canonical=True)
            return 0
        if args.command == "reduce":
            reduced, trace = reduce_bounded(parse(args.word), _budget(args.budget))
            print(reduced.text())
            _print_trace(trace)
            return 0
        if args.command == "equiv":
            return _cmd_equiv(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "tabulate":
            return _cmd_tabulate(args)
        if args.command == "graph":
            return _cmd_graph(args)
        raise AssertionError(f"unhandled command {args.command}")
    except (NanowordError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
