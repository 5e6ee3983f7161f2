"""Exhaustive and sampled populations of nanowords.

Gauss words of rank n in standard form (letters named A, B, C, ... in order
of first occurrence) are enumerated by the usual open/close recursion; there
are (2n-1)!! of them.  Crossing them with all 2^n type assignments and
deduplicating by the shift-orbit canonical form gives the desk-scale
populations used by the property suites and the tabulator.
"""

from __future__ import annotations

import random
from typing import Iterator

from .core import (
    TYPE_A,
    TYPE_B,
    EMPTY,
    Nanoword,
    canonical_relabel,
    fresh_names,
    shift_canonical,
)

__all__ = [
    "standard_gauss_words",
    "all_nanowords",
    "canonical_population",
    "sample_nanowords",
]


def standard_gauss_words(rank: int) -> Iterator[tuple[str, ...]]:
    """All Gauss words of the given rank, letters in first-occurrence order."""
    if rank == 0:
        yield ()
        return
    names = fresh_names((), rank)

    def build(prefix: list[str], opened: list[str], next_new: int) -> Iterator[tuple[str, ...]]:
        if len(prefix) == 2 * rank:
            yield tuple(prefix)
            return
        if next_new < rank:
            prefix.append(names[next_new])
            opened.append(names[next_new])
            yield from build(prefix, opened, next_new + 1)
            opened.pop()
            prefix.pop()
        for i, name in enumerate(opened):
            prefix.append(name)
            rest = opened[:i] + opened[i + 1 :]
            yield from build(prefix, rest, next_new)
            prefix.pop()

    yield from build([], [], 0)


def all_nanowords(rank: int) -> Iterator[Nanoword]:
    """Every nanoword of the given rank in standard letter names."""
    for word in standard_gauss_words(rank):
        letters = sorted(set(word))
        for mask in range(2 ** rank):
            types = {
                x: (TYPE_B if (mask >> i) & 1 else TYPE_A)
                for i, x in enumerate(letters)
            }
            yield Nanoword(word, types)


def canonical_population(max_rank: int) -> list[Nanoword]:
    """All shift-orbit canonical nanowords of rank <= max_rank, sorted by text.

    Includes the empty word.  Deduplication is by the shift-orbit canonical
    form only (words homotopic through H-moves stay distinct).
    """
    seen: dict[str, Nanoword] = {"0": EMPTY}
    for rank in range(1, max_rank + 1):
        for w in all_nanowords(rank):
            c = shift_canonical(w)
            seen.setdefault(c.text(), c)
    return [seen[k] for k in sorted(seen)]


def sample_nanowords(
    ranks: tuple[int, ...], count: int, seed: int
) -> list[Nanoword]:
    """Deterministic sample of distinct shift-canonical words at the given ranks."""
    rng = random.Random(seed)
    seen: dict[str, Nanoword] = {}
    attempts = 0
    while len(seen) < count and attempts < 100 * count:
        attempts += 1
        rank = ranks[rng.randrange(len(ranks))]
        names = fresh_names((), rank)
        seq = [names[i // 2] for i in range(2 * rank)]
        rng.shuffle(seq)
        word = canonical_relabel(
            Nanoword(seq, {x: TYPE_A for x in names})
        )
        types = {x: rng.choice((TYPE_A, TYPE_B)) for x in word.letters}
        c = shift_canonical(Nanoword(word.word, types))
        seen.setdefault(c.text(), c)
    return [seen[k] for k in sorted(seen)]
