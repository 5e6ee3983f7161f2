"""Exhaustive tabulation of small nanowords with their invariants.

One record per shift-orbit canonical word, reproducible from the canonical
text alone, serialized as JSON Lines sorted by canonical form.  The covering
column maps every informative r (0 and 2..rank) to the canonical form of the
r-covering, which is what the fixed-point set experiments consume.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import Nanoword, parse, shift_canonical
from .invariants import based_matrix, reduce_to_primitive, u_polynomial
from .enumeration import canonical_population
from .ops import covering

__all__ = ["TabulationRecord", "record_for", "tabulation_records", "record_to_json"]


@dataclass(frozen=True)
class TabulationRecord:
    canonical: str
    rank: int
    u: tuple[tuple[int, int], ...]
    rho: int
    pbm_signature: tuple
    covers: tuple[tuple[int, str], ...]  # (r, canonical cover text)


def record_for(word: Nanoword) -> TabulationRecord:
    canonical = shift_canonical(word)
    primitive, _ = reduce_to_primitive(based_matrix(canonical))
    covers = []
    for r in [0, *range(2, canonical.rank + 1)]:
        covers.append((r, shift_canonical(covering(canonical, r)).text()))
    return TabulationRecord(
        canonical=canonical.text(),
        rank=canonical.rank,
        u=u_polynomial(canonical).coeffs,
        rho=primitive.size - 1,
        pbm_signature=primitive.signature(),
        covers=tuple(covers),
    )


def tabulation_records(max_rank: int, *, oracle=None) -> list[TabulationRecord]:
    """Records for every canonical word of rank <= max_rank.

    With ``oracle`` (a SearchBudget), words that a bounded search proves
    homotopic are merged: each homotopy class keeps its least canonical form.
    """
    words = canonical_population(max_rank)
    if oracle is not None:
        from .search import reduce_bounded

        by_reduced: dict[str, Nanoword] = {}
        for w in words:
            reduced, _ = reduce_bounded(w, oracle)
            key = shift_canonical(reduced).text()
            if key not in by_reduced or w.text() < by_reduced[key].text():
                by_reduced[key] = w
        words = sorted(by_reduced.values(), key=lambda w: w.text())
    return [record_for(w) for w in words]


def record_to_json(record: TabulationRecord) -> str:
    payload = {
        "canonical": record.canonical,
        "rank": record.rank,
        "u": [[k, c] for k, c in record.u],
        "rho": record.rho,
        "pbm_signature": _sig_to_json(record.pbm_signature),
        "covers": {str(r): text for r, text in record.covers},
    }
    return json.dumps(payload, sort_keys=True)


def record_from_json(line: str) -> TabulationRecord:
    data = json.loads(line)
    return record_for(parse(data["canonical"]))


def _sig_to_json(sig) -> list:
    def conv(x):
        if isinstance(x, tuple):
            return [conv(v) for v in x]
        return x

    return conv(sig)
