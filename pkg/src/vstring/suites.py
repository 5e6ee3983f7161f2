"""Named property suites verifying the structural theorems at desk scale.

Each suite runs a theorem or invariance statement over a reproducible word
population: every shift-canonical word of rank <= 3 (all type assignments)
plus a fixed-seed random sample at ranks 4-5.  Suites report instance counts
and the first few failures; they are used both by the command-line ``verify``
subcommand and by the acceptance tests.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

import numpy as np

from .core import (
    MoveKind,
    Nanoword,
    RANK_DECREASING,
    RANK_INCREASING,
    RANK_PRESERVING,
    apply_move,
    canonical_relabel,
    find_sites,
    isomorphic,
    parse,
    shift,
)
from .enumeration import canonical_population, sample_nanowords
from .invariants import (
    based_matrix,
    bm_isomorphic,
    composite_based_matrix,
    n_values,
    primitive_based_matrix,
    reduce_to_primitive,
    rho,
    u_polynomial,
    u_realizable,
)
from .ops import cable, compose, covering

__all__ = ["SuiteReport", "SUITES", "run_suite", "population"]

#: Cap on letter-adding sites per kind for the rank 4-5 sample in the
#: move-invariance suite (the rank <= 3 population is enumerated in full).
_ADD_SITE_CAP = 6
_SAMPLE_COUNT = 200
_DEFAULT_SEED = 7


@dataclass
class SuiteReport:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, label: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 20:
                self.failures.append(label)

    @property
    def total(self) -> int:
        return self.passed + self.failed

    def summary(self) -> str:
        status = "ok" if not self.failed else "FAILED"
        return f"{self.name}: {self.passed}/{self.total} instances pass [{status}]"


def population(max_rank: int = 3, seed: int = _DEFAULT_SEED, sample: int = _SAMPLE_COUNT) -> list[Nanoword]:
    """Exhaustive words up to ``max_rank`` plus a fixed-seed rank 4-5 sample."""
    words = canonical_population(max_rank)
    if sample:
        words += sample_nanowords((4, 5), sample, seed)
    return words


def _applicable_sites(word: Nanoword, cap_adds: int | None):
    for kind in (MoveKind.SHIFT,) + RANK_DECREASING + RANK_PRESERVING:
        for site in find_sites(word, kind):
            yield site
    for kind in RANK_INCREASING:
        for site in find_sites(word, kind, max_sites=cap_adds):
            yield site


def suite_move_invariance(max_rank: int = 3, seed: int = _DEFAULT_SEED, sample: int = _SAMPLE_COUNT) -> SuiteReport:
    """u, rho and the primitive based matrix are stable under every move."""
    report = SuiteReport("move-invariance")
    for word in population(max_rank, seed, sample):
        cap = None if word.rank <= max_rank else _ADD_SITE_CAP
        u0, r0, p0 = u_polynomial(word), rho(word), primitive_based_matrix(word)
        for site in _applicable_sites(word, cap):
            moved = apply_move(word, site)
            ok = (
                u_polynomial(moved) == u0
                and rho(moved) == r0
                and bm_isomorphic(primitive_based_matrix(moved), p0)
            )
            report.check(ok, f"{word.text()} under {site}")
    return report


def suite_structural(max_rank: int = 3, seed: int = _DEFAULT_SEED, sample: int = _SAMPLE_COUNT) -> SuiteReport:
    """Weight sums, skew-symmetry, borders, realizability, u-additivity, deletions."""
    report = SuiteReport("structural")
    words = population(max_rank, seed, sample)
    for word in words:
        nv = n_values(word)
        report.check(sum(nv.values()) == 0, f"sum n != 0 for {word.text()}")
        report.check(
            all(abs(v) < max(word.rank, 1) for v in nv.values()),
            f"|n| >= rank for {word.text()}",
        )
        m = based_matrix(word)
        diff = m.pairing[1:, 1:]
        report.check(
            bool(np.array_equal(diff, -diff.T)) or word.rank == 0,
            f"inner block not skew for {word.text()}",
        )
        report.check(
            all(m.b(x, "s") == nv[x] for x in word.letters),
            f"border != n for {word.text()}",
        )
        report.check(
            u_realizable(u_polynomial(word)), f"u not realizable for {word.text()}"
        )
        for r in range(word.rank + 2):
            deleted = word.rank - covering(word, r).rank
            report.check(deleted != 1, f"cover[{r}] deleted one letter of {word.text()}")
    rng = random.Random(seed)
    pairs = [(rng.choice(words), rng.choice(words)) for _ in range(60)]
    for a, b in pairs:
        report.check(
            u_polynomial(compose(a, b)) == u_polynomial(a) + u_polynomial(b),
            f"u not additive for {a.text()} * {b.text()}",
        )
    return report


def suite_u_cable(max_rank: int = 3, seed: int = _DEFAULT_SEED, sample: int = _SAMPLE_COUNT) -> SuiteReport:
    """u(cable(w, n)) = n^2 u_w(t^n) for n in {2, 3}."""
    report = SuiteReport("u-cable")
    for word in population(max_rank, seed, sample):
        expected = u_polynomial(word)
        for n in (2, 3):
            report.check(
                u_polynomial(cable(word, n)) == expected.cable_transform(n),
                f"{word.text()} n={n}",
            )
    return report


def suite_cover_cable_commute(max_rank: int = 3, seed: int = _DEFAULT_SEED, sample: int = _SAMPLE_COUNT) -> SuiteReport:
    """cover_r(cable_n(w)) is isomorphic to cable_n(cover_k(w)), k = r/gcd(n, r)."""
    report = SuiteReport("cover-cable-commute")
    for word in population(max_rank, seed, sample):
        for n, r in ((2, 2), (2, 4), (3, 2), (2, 0), (3, 0)):
            k = 0 if r == 0 else r // math.gcd(n, r)
            ok = isomorphic(covering(cable(word, n), r), cable(covering(word, k), n))
            report.check(ok, f"{word.text()} n={n} r={r}")
        for n in (2, 3):
            cab = cable(word, n)
            for r in (0, 2, 3):
                fixed_word = covering(word, r) == word
                fixed_cable = covering(cab, r * n) == cab
                report.check(
                    fixed_word == fixed_cable,
                    f"fixedness transfer {word.text()} n={n} r={r}",
                )
    return report


def suite_composite_bm(max_rank: int = 3, seed: int = _DEFAULT_SEED, sample: int = _SAMPLE_COUNT) -> SuiteReport:
    """The block formula agrees entrywise with the composite's based matrix."""
    report = SuiteReport("composite-bm")
    words = [w for w in population(max_rank, seed, 0) if w.rank <= 4]
    rng = random.Random(seed + 1)
    pairs = [(rng.choice(words), rng.choice(words)) for _ in range(80)]
    for a, b in pairs:
        predicted = composite_based_matrix(
            based_matrix(a), a.types(), based_matrix(b), b.types()
        )
        composed = compose(a, b)
        actual = based_matrix(composed)
        # Align: predicted rows follow (s, letters of a, letters of b); the
        # composite's matrix is ordered alphabetically over all its letters.
        fresh_of = dict(zip(sorted(b.letters), sorted(set(composed.letters) - set(a.letters))))
        order = ["s", *a.letters, *(fresh_of[x] for x in b.letters)]
        idx = [actual.elements.index(x) for x in order]
        ok = np.array_equal(predicted.pairing, actual.pairing[np.ix_(idx, idx)])
        report.check(ok, f"{a.text()} * {b.text()}")
    return report


def suite_rho_bounds(max_rank: int = 3, seed: int = _DEFAULT_SEED, sample: int = _SAMPLE_COUNT) -> SuiteReport:
    """Cable and composition bounds on rho."""
    report = SuiteReport("rho-bounds")
    words = population(max_rank, seed, sample)
    for word in words:
        r0 = rho(word)
        for n in (2, 3):
            delta = 1 if n % 2 == 0 else 0
            report.check(
                rho(cable(word, n)) <= n * n * r0 + delta,
                f"cable bound {word.text()} n={n}",
            )
    same_type = [
        w
        for w in canonical_population(max_rank)
        if w.rank and len({w.type_of(x) for x in w.letters}) == 1
    ]
    primitive = [
        w for w in same_type if reduce_to_primitive(based_matrix(w))[1] == ()
    ]
    for a, b in itertools.product(same_type, repeat=2):
        if {a.type_of(a.letters[0])} != {b.type_of(b.letters[0])}:
            continue
        report.check(
            rho(compose(a, b)) >= rho(a) + rho(b),
            f"superadditivity {a.text()} * {b.text()}",
        )
    for a, b in itertools.product(primitive, repeat=2):
        if {a.type_of(a.letters[0])} != {b.type_of(b.letters[0])}:
            continue
        report.check(
            rho(compose(a, b)) == rho(a) + rho(b),
            f"additivity on primitives {a.text()} * {b.text()}",
        )
    return report


def suite_reduction_confluence(max_rank: int = 3, seed: int = _DEFAULT_SEED, sample: int = 40) -> SuiteReport:
    """Random removal orders all reach isomorphic primitive based matrices."""
    report = SuiteReport("reduction-confluence")
    rng = random.Random(seed + 2)
    words = canonical_population(max_rank)
    if sample:
        words += sample_nanowords((4, 5), sample, seed + 3)
    for word in words:
        m = based_matrix(word)
        reference, _ = reduce_to_primitive(m)
        orders = 50 if word.rank <= 3 else 10
        for _ in range(orders):
            alt, _ = reduce_to_primitive(m, rng=rng)
            report.check(
                bm_isomorphic(reference, alt),
                f"confluence failed for {word.text()}",
            )
    return report


SUITES = {
    "move-invariance": suite_move_invariance,
    "structural": suite_structural,
    "u-cable": suite_u_cable,
    "cover-cable-commute": suite_cover_cable_commute,
    "composite-bm": suite_composite_bm,
    "rho-bounds": suite_rho_bounds,
    "reduction-confluence": suite_reduction_confluence,
}


def run_suite(name: str, *, max_rank: int = 3, seed: int = _DEFAULT_SEED, sample: int = _SAMPLE_COUNT) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    return SUITES[name](max_rank=max_rank, seed=seed, sample=sample)
