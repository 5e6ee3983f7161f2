import math

import pytest
from hypothesis import given, settings, strategies as st

from vstring.core import EMPTY, canonical_relabel, isomorphic, parse
from vstring.invariants import n_values, rho, u_polynomial
from vstring.ops import (
    cable,
    compose,
    cover_stats,
    covering,
    gen_alpha_n,
    gen_gamma_pq,
    r_dot,
    uncover_preimage,
)
from vstring.search import SearchBudget

from test_core import nanowords


class TestCovering:
    def test_worked_example(self):
        w = parse("ABCACB|aaa")
        assert covering(w, 2).text() == "AA|a"
        assert covering(w, 0) == EMPTY
        assert covering(w, 3) == EMPTY

    def test_five_crossing_example(self):
        c = covering(parse("ABCDBEDEAC|baaaa"), 2)
        assert c.text() == "BCDBDC|aaa"
        assert isomorphic(c, parse("BCDBDC|aaa"))

    def test_identity_cover(self):
        w = parse("ABCDBEDEAC|baaaa")
        assert covering(w, 1) == w

    def test_zero_cover_keeps_weightless(self):
        a5 = gen_alpha_n(5)
        assert covering(a5, 0) == a5

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            covering(parse("AA|a"), -1)

    @given(nanowords(max_rank=4))
    @settings(max_examples=60, deadline=None)
    def test_never_deletes_exactly_one(self, w):
        for r in range(w.rank + 2):
            assert w.rank - covering(w, r).rank != 1

    @given(nanowords(max_rank=3), nanowords(max_rank=3))
    @settings(max_examples=40, deadline=None)
    def test_commutes_with_composition(self, a, b):
        for r in (0, 2, 3):
            left = covering(compose(a, b), r)
            right = compose(covering(a, r), covering(b, r))
            assert canonical_relabel(left) == canonical_relabel(right)


class TestCompose:
    def test_worked_example(self):
        c = compose(parse("ABACDBDC|abbb"), parse("ABACBC|abb"))
        assert c.text() == "ABACDBDCEFEGFG|abbbabb"

    def test_identity(self):
        w = parse("ABAB|ab")
        assert compose(EMPTY, w) == w
        assert compose(w, EMPTY) == w

    def test_kishino(self):
        assert compose(parse("ABAB|aa"), parse("ABAB|aa")).text() == "ABABCDCD|aaaa"

    @given(nanowords(max_rank=3), nanowords(max_rank=3))
    @settings(max_examples=40, deadline=None)
    def test_rank_and_u_additive(self, a, b):
        c = compose(a, b)
        assert c.rank == a.rank + b.rank
        assert u_polynomial(c) == u_polynomial(a) + u_polynomial(b)


class TestCable:
    def test_two_cable_example_letter_for_letter(self):
        c = cable(parse("X Y X Z Y Z | X=a Y=b Z=b"), 2)
        w0 = "X.0.0 X.0.1 Y.0.0 Y.1.0 X.1.0 X.0.0 Z.0.0 Z.1.0 Y.1.0 Y.1.1 Z.1.0 Z.1.1"
        w1 = "X.1.0 X.1.1 Y.0.1 Y.1.1 X.1.1 X.0.1 Z.0.1 Z.1.1 Y.0.0 Y.0.1 Z.0.0 Z.0.1"
        assert c.word == tuple((w0 + " C.0 " + w1 + " C.0").split())
        type_a = {"X.0.0", "X.0.1", "X.1.1", "Y.1.1", "Z.1.1", "C.0"}
        assert {x for x in c.letters if c.type_of(x) == "a"} == type_a

    def test_width_one_identity(self):
        w = parse("ABCACB|aaa")
        assert cable(w, 1) == w

    def test_empty_word_cable(self):
        assert canonical_relabel(cable(EMPTY, 3)).text() == "ABBA|aa"

    def test_rejects_bad_width(self):
        with pytest.raises(ValueError):
            cable(parse("AA|a"), 0)

    @given(nanowords(max_rank=3), st.sampled_from([2, 3]))
    @settings(max_examples=40, deadline=None)
    def test_rank_formula(self, w, n):
        assert cable(w, n).rank == w.rank * n * n + n - 1

    @given(nanowords(max_rank=3), st.sampled_from([2, 3]))
    @settings(max_examples=40, deadline=None)
    def test_u_polynomial_formula(self, w, n):
        assert u_polynomial(cable(w, n)) == u_polynomial(w).cable_transform(n)

    @given(nanowords(max_rank=2), st.sampled_from([(2, 2), (2, 4), (3, 2), (2, 0), (3, 0)]))
    @settings(max_examples=40, deadline=None)
    def test_cover_cable_commutation(self, w, nr):
        n, r = nr
        k = 0 if r == 0 else r // math.gcd(n, r)
        assert isomorphic(covering(cable(w, n), r), cable(covering(w, k), n))

    @given(nanowords(max_rank=2, min_rank=1), st.sampled_from([2, 3]))
    @settings(max_examples=30, deadline=None)
    def test_rho_bound(self, w, n):
        delta = 1 if n % 2 == 0 else 0
        assert rho(cable(w, n)) <= n * n * rho(w) + delta


class TestRDot:
    def test_worked_example(self):
        rd = r_dot(parse("ABACBC|aab"), 2)
        expected = parse(
            "A.1 A.2 B.1 B.2 A.2 A.1 C.1 C.2 B.2 B.1 C.2 C.1 | "
            "A.1=a A.2=a B.1=a B.2=a C.1=b C.2=b"
        )
        assert rd == expected

    def test_identity(self):
        w = parse("ABAB|ab")
        assert r_dot(w, 1) == w

    def test_rejects_bad_factor(self):
        with pytest.raises(ValueError):
            r_dot(parse("AA|a"), 0)

    @given(nanowords(max_rank=3), st.sampled_from([2, 3]))
    @settings(max_examples=40, deadline=None)
    def test_fixed_under_matching_cover(self, w, r):
        rd = r_dot(w, r)
        nv = n_values(w)
        nvd = n_values(rd)
        for x in w.letters:
            for i in range(1, r + 1):
                assert nvd[f"{x}.{i}"] == r * nv[x]
        assert covering(rd, r) == rd


class TestFamilies:
    def test_gamma_11_is_doubled_pair(self):
        assert canonical_relabel(gen_gamma_pq(1, 1)).text() == "ABAB|aa"

    def test_gamma_12_matches_example_word(self):
        assert isomorphic(gen_gamma_pq(1, 2), parse("ABCACB|aaa"))

    def test_gamma_rank_and_u(self):
        for p in range(1, 5):
            for q in range(1, 5):
                w = gen_gamma_pq(p, q)
                assert w.rank == p + q
                expected = {q: p} if p != q else {}
                if p != q:
                    expected[p] = expected.get(p, 0) - q
                assert u_polynomial(w).as_dict() == expected

    def test_gamma_rejects_bad_params(self):
        with pytest.raises(ValueError):
            gen_gamma_pq(0, 1)

    def test_alpha_n_shape(self):
        a3 = gen_alpha_n(3)
        assert canonical_relabel(a3).text() == "ABCABC|aba"
        for n in (3, 5, 8):
            w = gen_alpha_n(n)
            assert w.rank == n
            assert all(v == 0 for v in n_values(w).values())
            assert covering(w, 0) == w

    def test_alpha_n_rejects_small(self):
        with pytest.raises(ValueError):
            gen_alpha_n(2)


class TestUncoverPreimage:
    def test_empty(self):
        assert uncover_preimage(EMPTY, 2) == EMPTY

    def test_rejects_r_one(self):
        with pytest.raises(ValueError):
            uncover_preimage(parse("AA|a"), 1)

    def test_doubled_pair(self):
        pre = uncover_preimage(parse("ABAB|aa"), 2)
        assert pre.rank == 4
        assert canonical_relabel(covering(pre, 2)) == parse("ABAB|aa")
        assert not u_polynomial(pre)

    @given(nanowords(max_rank=3), st.sampled_from([0, 2, 3]))
    @settings(max_examples=40, deadline=None)
    def test_postconditions(self, w, r):
        pre = uncover_preimage(w, r)
        assert canonical_relabel(covering(pre, r)) == canonical_relabel(w)
        assert not u_polynomial(pre)


class TestFixedPointSets:
    """Word-level relations between the sets fixed by different coverings."""

    @given(nanowords(max_rank=4))
    @settings(max_examples=60, deadline=None)
    def test_fixed_under_zero_implies_all(self, w):
        if covering(w, 0) == w:
            for r in range(7):
                assert covering(w, r) == w

    @given(nanowords(max_rank=4), st.sampled_from([(2, 2), (3, 2), (2, 3)]))
    @settings(max_examples=60, deadline=None)
    def test_fixed_under_multiple_implies_divisor(self, w, kr):
        k, r = kr
        if covering(w, k * r) == w:
            assert covering(w, r) == w

    @given(nanowords(max_rank=4), st.sampled_from([(2, 3), (2, 4), (4, 6)]))
    @settings(max_examples=60, deadline=None)
    def test_fixed_under_pair_iff_lcm(self, w, pq):
        p, q = pq
        both = covering(w, p) == w and covering(w, q) == w
        l = p * q // math.gcd(p, q)
        assert both == (covering(w, l) == w)


class TestCoverStats:
    def test_trivial_word(self):
        stats = cover_stats(EMPTY, 2)
        assert stats.m_upper == 0
        assert stats.height_upper == 0
        assert stats.fixed

    def test_worked_example(self):
        stats = cover_stats(parse("ABCACB|aaa"), 2)
        assert stats.m_upper == 3
        assert stats.height_upper == 1
        assert stats.base_word.text() == "AA|a"
        assert not stats.fixed

    def test_oracle_refinement(self):
        budget = SearchBudget(2, 20_000, 32)
        stats = cover_stats(parse("ABCACB|aaa"), 2, budget)
        assert stats.base_word == EMPTY

    def test_fixed_point(self):
        rd = r_dot(parse("ABACBC|aab"), 2)
        stats = cover_stats(rd, 2)
        assert stats.fixed
        assert stats.height_upper == 0

    def test_weightless_word(self):
        assert cover_stats(gen_alpha_n(5), 0).m_upper == 0
