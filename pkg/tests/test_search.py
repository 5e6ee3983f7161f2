import pytest

from vstring.core import (
    EMPTY,
    MoveKind,
    apply_move,
    canonical_relabel,
    find_sites,
    parse,
    shift,
)
from vstring.enumeration import (
    all_nanowords,
    canonical_population,
    sample_nanowords,
    standard_gauss_words,
)
from vstring.invariants import primitive_based_matrix, rho, u_polynomial, bm_isomorphic
from vstring.ops import gen_alpha_n, gen_gamma_pq
from vstring.search import (
    PRIMITIVE_MOVES,
    SearchBudget,
    covering_graph,
    equivalent_bounded,
    reduce_bounded,
)


class TestEnumeration:
    def test_standard_word_counts(self):
        # (2n-1)!! double-occurrence sequences
        assert sum(1 for _ in standard_gauss_words(0)) == 1
        assert sum(1 for _ in standard_gauss_words(1)) == 1
        assert sum(1 for _ in standard_gauss_words(2)) == 3
        assert sum(1 for _ in standard_gauss_words(3)) == 15
        assert sum(1 for _ in standard_gauss_words(4)) == 105

    def test_all_nanowords_counts(self):
        assert sum(1 for _ in all_nanowords(2)) == 12

    def test_population_is_canonical_and_sorted(self):
        pop = canonical_population(2)
        texts = [w.text() for w in pop]
        assert texts == sorted(texts)
        from vstring.core import shift_canonical

        assert all(shift_canonical(w).text() == w.text() for w in pop)

    def test_sample_deterministic(self):
        a = [w.text() for w in sample_nanowords((4, 5), 30, seed=5)]
        b = [w.text() for w in sample_nanowords((4, 5), 30, seed=5)]
        assert a == b
        assert len(a) == 30


class TestSearchBudget:
    def test_parse(self):
        assert SearchBudget.parse("1,100,8") == SearchBudget(1, 100, 8)
        with pytest.raises(ValueError):
            SearchBudget.parse("1,2")
        with pytest.raises(ValueError):
            SearchBudget(-1, 0, 0)

    def test_from_env(self, monkeypatch):
        monkeypatch.setenv("VSTRING_BUDGET", "3,99,7")
        assert SearchBudget.from_env() == SearchBudget(3, 99, 7)
        monkeypatch.delenv("VSTRING_BUDGET")
        assert SearchBudget.from_env() == SearchBudget()


class TestReduceBounded:
    @pytest.mark.parametrize(
        "word",
        [gen_gamma_pq(1, 1), gen_alpha_n(3), gen_alpha_n(4)],
        ids=["gamma11", "alpha3", "alpha4"],
    )
    def test_trivial_words_reach_zero(self, word):
        reduced, trace = reduce_bounded(word)
        assert reduced.rank == 0
        assert trace.start == word
        assert trace.end() == reduced

    def test_trefoil_regression(self):
        # The doubled-occurrence trefoil word is homotopically trivial.
        reduced, trace = reduce_bounded(parse("ABCABC|aba"))
        assert reduced.rank == 0
        assert len(trace.steps) == 2

    def test_irreducible_word_stays(self):
        reduced, _ = reduce_bounded(parse("ABCACB|aaa"), SearchBudget(1, 3000, 16))
        assert reduced.rank == 3  # rho = 3 forbids any reduction

    def test_budget_growth_monotone(self):
        word = gen_alpha_n(4)
        ranks = []
        for states in (10, 200, 20000):
            reduced, _ = reduce_bounded(word, SearchBudget(2, states, 64))
            ranks.append(reduced.rank)
        assert ranks == sorted(ranks, reverse=True)

    def test_zero_budget_returns_start(self):
        word = parse("ABAB|ab")
        reduced, trace = reduce_bounded(word, SearchBudget(0, 1, 0))
        assert reduced == word
        assert trace.steps == ()

    def test_reduced_to_zero_has_trivial_invariants(self):
        for word in [gen_gamma_pq(1, 1), gen_alpha_n(3), parse("ABCABC|aba")]:
            reduced, _ = reduce_bounded(word)
            if reduced.rank == 0:
                assert not u_polynomial(word)
                assert rho(word) == 0
                assert bm_isomorphic(
                    primitive_based_matrix(word), primitive_based_matrix(EMPTY)
                )


class TestEquivalentBounded:
    def test_h3b_pair_homotopic(self):
        res = equivalent_bounded(parse("ABCBDCAD|aabb"), parse("BACDBCDA|aabb"))
        assert res.verdict == "homotopic"
        end = res.trace.end()
        assert canonical_relabel(end) == canonical_relabel(parse("BACDBCDA|aabb"))

    def test_kishino_distinct(self):
        res = equivalent_bounded(EMPTY, parse("ABABCDCD|aaaa"))
        assert res.verdict == "distinct"
        assert res.report is not None and res.report.verdict == "distinct"
        assert res.trace is None

    def test_reflexive(self):
        w = parse("ABCACB|aaa")
        res = equivalent_bounded(w, w)
        assert res.verdict == "homotopic"
        assert res.trace.steps == ()

    def test_shift_related(self):
        w = parse("ABCACB|aaa")
        res = equivalent_bounded(w, shift(w))
        assert res.verdict == "homotopic"
        assert canonical_relabel(res.trace.end()) == canonical_relabel(shift(w))

    def test_unknown_under_tiny_budget(self):
        # Distinct-by-search-only pair under a budget too small to connect.
        res = equivalent_bounded(
            gen_alpha_n(6), EMPTY, SearchBudget(0, 4, 2)
        )
        assert res.verdict == "unknown"

    def test_never_both_verdicts(self):
        # A verified trace and an invariant separation cannot coexist: replay
        # the trace and re-check invariants agree at both ends.
        res = equivalent_bounded(parse("ABCBDCAD|aabb"), parse("BACDBCDA|aabb"))
        assert res.verdict == "homotopic"
        start, end = res.trace.start, res.trace.end()
        assert u_polynomial(start) == u_polynomial(end)
        assert rho(start) == rho(end)


class TestDerivedMoveSoundness:
    """The derived moves are consequences of shift/H1/H2/H3.

    For sampled sites of each derived kind, the two sides must be connected
    by the underived move set within a bounded search.
    """

    BUDGET = SearchBudget(2, 60_000, 48)

    def _check_kind(self, kind, words, limit):
        checked = 0
        for word in words:
            for site in find_sites(word, kind, max_sites=2):
                other = apply_move(word, site)
                res = equivalent_bounded(
                    word, other, self.BUDGET, moves=PRIMITIVE_MOVES
                )
                assert res.verdict == "homotopic", (word.text(), str(site))
                checked += 1
                if checked >= limit:
                    return checked
        return checked

    def test_h2a_sound(self):
        words = [w for w in canonical_population(3) if w.rank >= 2]
        assert self._check_kind(MoveKind.H2A_DOWN, words, limit=4) > 0

    @pytest.mark.parametrize("kind", [MoveKind.H3A, MoveKind.H3B, MoveKind.H3C])
    def test_h3_variants_sound(self, kind):
        words = list(canonical_population(3)) + sample_nanowords((4, 5), 60, seed=13)
        assert self._check_kind(kind, words, limit=3) > 0


class TestCoveringGraph:
    def test_single_trivial_node(self):
        g = covering_graph([EMPTY], 2)
        assert g.edges == {"0": "0"}

    def test_fixed_point_self_loop(self):
        g22 = gen_gamma_pq(2, 2)
        g = covering_graph([g22], 2)
        key = canonical_relabel(g22).text()
        from vstring.core import shift_canonical

        key = shift_canonical(g22).text()
        assert g.edges[key] == key

    def test_rank3_population_shape(self):
        g = covering_graph(canonical_population(3), 2)
        comps = g.components()
        assert comps
        for comp in comps:
            assert g.component_is_tree_with_root_loop(comp)

    def test_dot_output(self):
        g = covering_graph(canonical_population(1), 2)
        dot = g.to_dot()
        assert dot.startswith("digraph covering {")
        assert '[label="r=2"]' in dot
        assert dot.rstrip().endswith("}")

    def test_oracle_merges_homotopic_nodes(self):
        words = [parse("ABAB|aa"), EMPTY]
        plain = covering_graph(words, 2)
        merged = covering_graph(words, 2, oracle=SearchBudget(2, 5000, 16))
        assert len(plain.nodes) == 2
        assert set(merged.nodes) == {"0"}
        assert merged.edges == {"0": "0"}
        for comp in merged.components():
            assert merged.component_is_tree_with_root_loop(comp)
