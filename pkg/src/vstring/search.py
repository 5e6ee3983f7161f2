"""Bounded homotopy search over nanowords.

States are shift-orbit canonical forms, which quotients out the base-point
symmetry; transitions apply one H-move to any shift of the state.  Rank-
preserving and rank-decreasing moves are always available; letter-adding
directions are allowed while the rank stays within ``max_rank_increase`` of
the start.  Every result carries a replayable move trace, so a "homotopic"
answer is a checkable certificate, and "distinct" answers delegate to the
invariant comparison, so the two can never both hold.

Homotopy of virtual strings is only semi-decidable with these tools: search
yields upper-bound witnesses (a low-rank representative, an equivalence
trace) or "unknown", never a proof of inequivalence by itself.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass, replace
from typing import Iterable, Iterator, Mapping, Sequence

from .core import (
    MoveKind,
    MoveSite,
    MoveTrace,
    Nanoword,
    RANK_DECREASING,
    RANK_INCREASING,
    RANK_PRESERVING,
    apply_move,
    canonical_relabel,
    invert_steps,
    shift_canonical_text,
    shift_orbit,
    shifts_to_canonical,
)
from .invariants import DistinguishReport, distinguish
from .ops import covering

__all__ = [
    "SearchBudget",
    "DEFAULT_BUDGET",
    "EquivalenceResult",
    "reduce_bounded",
    "equivalent_bounded",
    "CoveringGraph",
    "covering_graph",
]

#: Search step kinds, letter-removing first so reductions are found early.
ALL_MOVES: tuple[MoveKind, ...] = RANK_DECREASING + RANK_PRESERVING + RANK_INCREASING
#: The underived move set (shift moves are implicit in state expansion).
PRIMITIVE_MOVES: tuple[MoveKind, ...] = (
    MoveKind.H1_DOWN,
    MoveKind.H2_DOWN,
    MoveKind.H3,
    MoveKind.H1_UP,
    MoveKind.H2_UP,
)


@dataclass(frozen=True)
class SearchBudget:
    """Caps for the bounded searches; exhausting them is not an error."""

    max_rank_increase: int = 2
    max_states: int = 200_000
    max_depth: int = 64

    def __post_init__(self) -> None:
        if min(self.max_rank_increase, self.max_states, self.max_depth) < 0:
            raise ValueError("budget components must be nonnegative")

    @classmethod
    def parse(cls, text: str) -> "SearchBudget":
        """Parse "increase,states,depth" (used by the VSTRING_BUDGET variable)."""
        parts = [int(p) for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected 3 comma-separated integers, got {text!r}")
        return cls(*parts)

    @classmethod
    def from_env(cls) -> "SearchBudget":
        value = os.environ.get("VSTRING_BUDGET")
        return cls.parse(value) if value else cls()


DEFAULT_BUDGET = SearchBudget()


@dataclass
class _Node:
    word: Nanoword          # concrete word reached (trace target)
    parent: str | None      # key of the parent state
    steps: tuple[MoveSite, ...]  # sites leading from the parent's word here
    depth: int


class _Frontier:
    """Best-first expansion over shift-orbit canonical states."""

    def __init__(
        self,
        start: Nanoword,
        budget: SearchBudget,
        moves: Sequence[MoveKind],
    ):
        self.budget = budget
        self.moves = tuple(moves)
        self.rank_cap = start.rank + budget.max_rank_increase
        self.nodes: dict[str, _Node] = {}
        self.heap: list[tuple[int, int, int, str]] = []
        self.counter = 0
        key = shift_canonical_text(start)
        self.nodes[key] = _Node(start, None, (), 0)
        self._push(key, start.rank, 0)
        self.best_key = key

    def _push(self, key: str, rank: int, depth: int) -> None:
        heapq.heappush(self.heap, (rank, depth, self.counter, key))
        self.counter += 1

    def exhausted(self) -> bool:
        return not self.heap

    def best(self) -> _Node:
        return self.nodes[self.best_key]

    def expand_one(self, shared_states: int) -> list[str]:
        """Pop one state and insert its successors; returns the new keys."""
        _, _, _, key = heapq.heappop(self.heap)
        node = self.nodes[key]
        if node.depth >= self.budget.max_depth:
            return []
        new_keys: list[str] = []
        for steps, word in self._successors(node.word):
            if len(self.nodes) + shared_states >= self.budget.max_states:
                break
            nkey = shift_canonical_text(word)
            if nkey in self.nodes:
                continue
            self.nodes[nkey] = _Node(word, key, steps, node.depth + 1)
            self._push(nkey, word.rank, node.depth + 1)
            new_keys.append(nkey)
            if word.rank < self.nodes[self.best_key].word.rank or (
                word.rank == self.nodes[self.best_key].word.rank
                and nkey < self.best_key
            ):
                self.best_key = nkey
        return new_keys

    def _successors(
        self, word: Nanoword
    ) -> Iterator[tuple[tuple[MoveSite, ...], Nanoword]]:
        from .core import find_sites

        shift_site = MoveSite(MoveKind.SHIFT)
        for j, rotated in enumerate(shift_orbit(word)):
            prefix = (shift_site,) * j
            for kind in self.moves:
                if kind in RANK_INCREASING and word.rank + 1 > self.rank_cap:
                    continue
                for site in find_sites(rotated, kind):
                    yield prefix + (site,), apply_move(rotated, site)

    def trace_steps(self, key: str) -> list[MoveSite]:
        chain: list[tuple[MoveSite, ...]] = []
        k: str | None = key
        while k is not None:
            node = self.nodes[k]
            chain.append(node.steps)
            k = node.parent
        steps: list[MoveSite] = []
        for part in reversed(chain):
            steps.extend(part)
        return steps


def reduce_bounded(
    alpha: Nanoword,
    budget: SearchBudget = DEFAULT_BUDGET,
    *,
    moves: Sequence[MoveKind] = ALL_MOVES,
) -> tuple[Nanoword, MoveTrace]:
    """Lowest-rank word reachable within the budget, with a replayable trace.

    The returned rank is an upper bound for the homotopy rank of ``alpha``;
    exhausting the budget returns the best word found so far.
    """
    frontier = _Frontier(alpha, budget, moves)
    while not frontier.exhausted():
        frontier.expand_one(0)
        if frontier.best().word.rank == 0:
            break
    best_key = frontier.best_key
    trace = MoveTrace(alpha, tuple(frontier.trace_steps(best_key)))
    return frontier.nodes[best_key].word, trace


@dataclass(frozen=True)
class EquivalenceResult:
    """Outcome of a bounded equivalence test.

    ``verdict`` is "homotopic" (with a verified ``trace`` from the first word
    to the second, up to renaming), "distinct" (with the invariant
    ``report``), or "unknown" when the budget ran out.
    """

    verdict: str
    trace: MoveTrace | None = None
    report: DistinguishReport | None = None


def _join_traces(
    alpha: Nanoword,
    steps_a: list[MoveSite],
    beta: Nanoword,
    steps_b: list[MoveSite],
    word_a: Nanoword,
    word_b: Nanoword,
) -> MoveTrace:
    """Trace alpha -> beta through a common state reached by both sides.

    ``word_a``/``word_b`` are the concrete words both sides reached; they
    share a shift-orbit canonical form.  Aligning each by forward shifts to
    the canonical position makes them positionally identical up to renaming,
    so the inverted second path replays verbatim on the first side's word.
    """
    shift_site = MoveSite(MoveKind.SHIFT)
    full_a = steps_a + [shift_site] * shifts_to_canonical(word_a)
    full_b = steps_b + [shift_site] * shifts_to_canonical(word_b)
    # The inverted second-side steps replay on the first side's word, which
    # is only isomorphic to the second side's; drop recorded letter names so
    # letter-adding steps pick fresh ones instead of clashing.
    back = [_anonymize(site) for site in invert_steps(beta, full_b)]
    trace = MoveTrace(alpha, tuple(_cancel_shift_pairs(full_a + back)))
    end = trace.end()
    if canonical_relabel(end) != canonical_relabel(beta):
        raise AssertionError("search produced an invalid equivalence trace")
    return trace


def _anonymize(site: MoveSite) -> MoveSite:
    if site.letters:
        return replace(site, letters=())
    return site


def _cancel_shift_pairs(steps: list[MoveSite]) -> list[MoveSite]:
    """Drop adjacent shift/shift-inv pairs (a replay no-op) from a step list."""
    out: list[MoveSite] = []
    inverse = {MoveKind.SHIFT: MoveKind.SHIFT_INV, MoveKind.SHIFT_INV: MoveKind.SHIFT}
    for site in steps:
        if out and site.kind in inverse and out[-1].kind is inverse[site.kind]:
            out.pop()
        else:
            out.append(site)
    return out


def equivalent_bounded(
    alpha: Nanoword,
    beta: Nanoword,
    budget: SearchBudget = DEFAULT_BUDGET,
    *,
    moves: Sequence[MoveKind] = ALL_MOVES,
    distinguish_depth: int = 2,
) -> EquivalenceResult:
    """Bidirectional bounded search for a homotopy between two words.

    Returns "homotopic" only with a trace that has been replayed and checked,
    "distinct" only when an invariant separates the words, else "unknown".
    """
    report = distinguish(alpha, beta, distinguish_depth)
    if report.verdict == "distinct":
        return EquivalenceResult("distinct", report=report)

    fa = _Frontier(alpha, budget, moves)
    fb = _Frontier(beta, budget, moves)

    def meet() -> str | None:
        common = fa.nodes.keys() & fb.nodes.keys()
        return min(common) if common else None

    key = meet()
    while key is None:
        progressed = False
        for mine, other in ((fa, fb), (fb, fa)):
            if mine.exhausted():
                continue
            new_keys = mine.expand_one(len(other.nodes))
            progressed = True
            if any(k in other.nodes for k in new_keys):
                break
        key = meet()
        if key is None and not progressed:
            return EquivalenceResult("unknown", report=report)

    trace = _join_traces(
        alpha,
        fa.trace_steps(key),
        beta,
        fb.trace_steps(key),
        fa.nodes[key].word,
        fb.nodes[key].word,
    )
    return EquivalenceResult("homotopic", trace=trace)


# ---------------------------------------------------------------------------
# Covering graphs


@dataclass(frozen=True)
class CoveringGraph:
    """The action of one covering map on a set of words, as a functional graph.

    Nodes are shift-orbit canonical forms (keyed by their printed text) and
    each node has exactly one outgoing edge, to its r-covering.  Because a
    covering never increases rank and fixes a word exactly when it removes
    nothing, every cycle is a self-loop: each weakly connected component is a
    tree with a loop at its root.
    """

    r: int
    nodes: Mapping[str, Nanoword]
    edges: Mapping[str, str]

    def components(self) -> list[set[str]]:
        neighbours: dict[str, set[str]] = {k: set() for k in self.nodes}
        for src, dst in self.edges.items():
            neighbours[src].add(dst)
            neighbours[dst].add(src)
        remaining = set(self.nodes)
        out: list[set[str]] = []
        while remaining:
            seed = min(remaining)
            comp = {seed}
            stack = [seed]
            while stack:
                for nxt in neighbours[stack.pop()]:
                    if nxt not in comp:
                        comp.add(nxt)
                        stack.append(nxt)
            remaining -= comp
            out.append(comp)
        return out

    def component_is_tree_with_root_loop(self, component: set[str]) -> bool:
        loops = [k for k in component if self.edges[k] == k]
        return len(loops) == 1

    def to_dot(self) -> str:
        def quote(text: str) -> str:
            return '"' + text.replace('"', '\\"') + '"'

        lines = ["digraph covering {"]
        for key in sorted(self.nodes):
            lines.append(f"  {quote(key)} [label={quote(key)}];")
        for src in sorted(self.edges):
            lines.append(
                f"  {quote(src)} -> {quote(self.edges[src])} [label=\"r={self.r}\"];"
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def covering_graph(
    words: Iterable[Nanoword], r: int, *, oracle: SearchBudget | None = None
) -> CoveringGraph:
    """Close the word set under the r-covering and record the induced map.

    With ``oracle``, words a bounded search proves homotopic are merged into
    one node (keyed by the least canonical form found); the covering map is
    well-defined on homotopy classes, so edges factor through the merge.
    """
    from .core import shift_canonical

    classes: dict[str, Nanoword] = {}

    def node_of(word: Nanoword) -> Nanoword:
        canon = shift_canonical(word)
        if oracle is None:
            return canon
        key = canon.text()
        if key not in classes:
            reduced, _ = reduce_bounded(canon, oracle)
            classes[key] = shift_canonical(reduced)
        return classes[key]

    nodes: dict[str, Nanoword] = {}
    edges: dict[str, str] = {}
    for w in words:
        node = node_of(w)
        nodes.setdefault(node.text(), node)
    queue = sorted(nodes)
    while queue:
        key = queue.pop()
        cover = node_of(covering(nodes[key], r))
        ckey = cover.text()
        if ckey not in nodes:
            nodes[ckey] = cover
            queue.append(ckey)
        edges[key] = ckey
    return CoveringGraph(r, nodes, edges)
