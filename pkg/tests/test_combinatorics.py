import itertools
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from deltacalc.arith import QTPoly, rev_q
from deltacalc.combinatorics import (
    OSP,
    LabeledPath,
    code,
    code_perm,
    coinv,
    dyck_paths,
    fubini_words,
    inv,
    inversion_pairs,
    iota,
    iota_perm,
    iota_steps,
    is_nonskip,
    is_substaircase,
    mahonian_osp,
    ordered_set_partitions,
    osp_to_word,
    path_stats,
    q_binomial,
    q_factorial,
    q_stirling,
    rise_rhs,
    rise_table,
    shuffle_rhs,
    shuffle_table,
    skip_sequence,
    specialize_table,
    staircases,
    stirling2,
    substaircase_sequences,
    syt_enumerate,
    syt_stats,
    val_rhs,
    val_table,
    word_to_osp,
)
from deltacalc.errors import NotSubstaircase
from deltacalc.symfunc import partitions, s

q, t = QTPoly.q(), QTPoly.t()
SIGMA = OSP.parse("6|14|237|5")


@st.composite
def osps(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, n))
    letters = list(range(1, k + 1)) + draw(st.lists(st.integers(1, k), min_size=n - k, max_size=n - k))
    return word_to_osp(draw(st.permutations(letters)))


class TestWords:
    def test_word_to_osp(self):
        assert word_to_osp([3, 2, 2, 4, 1, 3, 2]) == OSP.parse("5|237|16|4")
        assert osp_to_word(OSP.parse("5|237|16|4")) == (3, 2, 2, 4, 1, 3, 2)

    def test_w32(self):
        expected = {(1, 1, 2), (1, 2, 1), (2, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)}
        assert set(fubini_words(3, 2)) == expected

    def test_permutation_inverse(self):
        assert word_to_osp([2, 3, 1]) == OSP.parse("3|1|2")

    @pytest.mark.parametrize("n", range(1, 8))
    def test_counts(self, n):
        for k in range(1, n + 1):
            assert len(list(fubini_words(n, k))) == factorial(k) * stirling2(n, k)

    @given(osps())
    def test_round_trip(self, sigma):
        assert word_to_osp(osp_to_word(sigma)) == sigma


class TestInv:
    def test_worked(self):
        assert inv(SIGMA) == 5
        assert coinv(SIGMA) == 10

    def test_pairs_match_counts(self):
        invs, coinvs = inversion_pairs(SIGMA)
        assert len(invs) == 5 and len(coinvs) == 10

    def test_single_block(self):
        sigma = OSP(((1, 2, 3, 4),))
        assert inv(sigma) == coinv(sigma) == 0

    def test_op32(self):
        total = sum((q ** inv(x) for x in ordered_set_partitions(3, 2)), QTPoly(0))
        assert total == q * q + 3 * q + 2
        assert q_factorial(2) * q_stirling(3, 2) == total

    @given(osps())
    def test_complement(self, sigma):
        n, k = sigma.n, sigma.k
        assert inv(sigma) + coinv(sigma) == comb(k, 2) + (n - k) * (k - 1)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_generating_functions(self, n):
        for k in range(1, n + 1):
            gi = gc = QTPoly(0)
            for sigma in ordered_set_partitions(n, k):
                gi = gi + q ** inv(sigma)
                gc = gc + q ** coinv(sigma)
            assert gi == mahonian_osp(n, k)
            assert gc == rev_q(gi, comb(k, 2) + (n - k) * (k - 1))


class TestQAnalogs:
    def test_stirling(self):
        assert q_stirling(3, 2) == 2 + q
        for n in range(6):
            assert q_stirling(n, n) == 1

    def test_binomial_symmetry(self):
        for n in range(7):
            for k in range(n + 1):
                assert q_binomial(n, k) == q_binomial(n, n - k)
                assert q_binomial(n, k).subs(at_q=1) == comb(n, k)

    def test_stirling_at_one(self):
        for n in range(1, 8):
            for k in range(1, n + 1):
                assert q_stirling(n, k).subs(at_q=1) == stirling2(n, k)


class TestCodes:
    def test_osp_code(self):
        assert code(SIGMA) == (2, 1, 3, 2, 0, 0, 2)

    def test_perm_code(self):
        assert code_perm([3, 1, 5, 2, 4]) == (3, 1, 2, 0, 0)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_identity_code(self, n):
        assert code_perm(range(1, n + 1)) == tuple(range(n - 1, -1, -1))

    def test_iota_osp(self):
        assert iota((2, 1, 3, 2, 0, 0, 2), 7, 4) == SIGMA

    def test_iota_perm(self):
        assert iota_perm((3, 1, 2, 0, 0)) == (3, 1, 5, 2, 4)

    def test_iota_single_block(self):
        assert iota((0,) * 5, 5, 1) == OSP(((1, 2, 3, 4, 5),))

    def test_iota_rejects(self):
        with pytest.raises(NotSubstaircase):
            iota((3, 0, 0), 3, 2)

    @given(osps(8))
    def test_code_sum_is_coinv(self, sigma):
        assert sum(code(sigma)) == coinv(sigma)
        assert iota(code(sigma), sigma.n, sigma.k) == sigma

    @given(st.permutations(list(range(1, 8))))
    def test_perm_round_trip(self, w):
        assert iota_perm(code_perm(w)) == tuple(w)


class TestInsertionTables:
    def test_osp_table(self):
        rows = iota_steps((2, 1, 3, 2, 0, 0, 2), 7, 4)
        E = ()
        assert [r[2] for r in rows] == [
            ((E, 3), (E, 2), (E, 1), (E, 0)),
            ((E, 2), ((1,), 3), (E, 1), (E, 0)),
            ((E, 1), ((1,), 2), ((2,), 3), (E, 0)),
            ((E, 1), ((1,), 2), ((2, 3), 3), (E, 0)),
            ((E, 1), ((1, 4), 2), ((2, 3), 3), (E, 0)),
            ((E, 0), ((1, 4), 1), ((2, 3), 2), ((5,), 3)),
            (((6,), 0), ((1, 4), 1), ((2, 3), 2), ((5,), 3)),
            (((6,), 0), ((1, 4), 1), ((2, 3, 7), 2), ((5,), 3)),
        ]

    def test_permutation_table(self):
        rows = iota_steps((3, 1, 2, 0, 0), 5, 5)

        def show(state):
            # filled slots print their letter, empty ones their label
            return [b[0] if b else ("e", lab) for b, lab in state]

        assert [show(r[2]) for r in rows] == [
            [("e", 4), ("e", 3), ("e", 2), ("e", 1), ("e", 0)],
            [("e", 3), 1, ("e", 2), ("e", 1), ("e", 0)],
            [("e", 2), 1, ("e", 1), 2, ("e", 0)],
            [3, 1, ("e", 1), 2, ("e", 0)],
            [3, 1, ("e", 0), 2, 4],
            [3, 1, 5, 2, 4],
        ]


class TestStaircases:
    def test_skip_sequence(self):
        assert skip_sequence({2, 4, 5, 8}, 8) == (0, 2, 0, 3, 3, 0, 0, 5)

    def test_substaircase_example(self):
        assert (2, 1, 0, 2, 2) in staircases(5, 3)
        assert is_substaircase((1, 1, 0, 2, 0), 5, 3)

    def test_staircase_count(self):
        assert len(staircases(5, 3)) == 6

    @pytest.mark.parametrize("n", range(1, 8))
    def test_three_characterizations(self, n):
        for k in range(1, n + 1):
            E = set(substaircase_sequences(n, k))
            image = {code(x) for x in ordered_set_partitions(n, k)}
            assert image == E
            assert len(E) == factorial(k) * stirling2(n, k)
            for c in itertools.product(range(k), repeat=n):
                assert (c in E) == is_substaircase(c, n, k) == is_nonskip(c, n, k)


class TestTableaux:
    def test_worked_tableau(self):
        assert syt_stats(((1, 3, 4, 7), (2, 5, 8), (6,))) == (4, 17)

    def test_row(self):
        assert syt_stats(((1, 2, 3, 4),)) == (0, 0)

    def test_count(self):
        assert len(syt_enumerate((2, 1))) == 2
        assert len(syt_enumerate((3, 2, 1))) == 16

    @pytest.mark.parametrize("n", range(1, 7))
    def test_sum_of_squares(self, n):
        assert sum(len(syt_enumerate(lam)) ** 2 for lam in partitions(n)) == factorial(n)


class TestPaths:
    P = LabeledPath("NNENEENENE", (3, 6, 2, 1, 2))

    def test_worked_path(self):
        st_ = path_stats(self.P)
        assert (st_.area, st_.dinv, st_.a, st_.d, set(st_.val)) == (
            2,
            4,
            (0, 1, 1, 0, 0),
            (0, 2, 1, 1, 0),
            {4, 5},
        )

    def test_bad_labels(self):
        with pytest.raises(ValueError):
            LabeledPath("NNEE", (2, 1))

    def test_catalan(self):
        assert [len(dyck_paths(n)) for n in range(1, 7)] == [1, 2, 5, 14, 42, 132]

    def test_shuffle_small(self):
        assert shuffle_rhs(1) == s(1)
        assert shuffle_rhs(2) == s(2) + (q + t) * s(1, 1)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_rise_at_k_equals_n(self, n):
        assert rise_rhs(n, n) == shuffle_rhs(n)

    def test_rise_32_at_zero(self):
        assert rise_rhs(3, 2).subs(at_t=0) == (1 + q) * s(2, 1) + (q + q * q) * s(1, 1, 1)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_label_bound(self, n):
        small = shuffle_table(n)
        big = shuffle_table(n, alphabet=n + 1)
        restricted = {m[:n]: c for m, c in big.items() if len(m) == n or all(x == 0 for x in m[n:])}
        assert restricted == small
        for k in range(1, n + 1):
            small = rise_table(n, k)
            big = rise_table(n, k, alphabet=n + 1)
            restricted = {m[:n]: c for m, c in big.items() if all(x == 0 for x in m[n:])}
            assert restricted == small

    @pytest.mark.parametrize("n", range(1, 5))
    def test_four_way_at_zero(self, n):
        for k in range(1, n + 1):
            rise, val = rise_table(n, k), val_table(n, k)
            a = specialize_table(rise, at_t=0)
            b = specialize_table(rise, at_q=0, swap=True)
            c = specialize_table(val, at_t=0)
            d = specialize_table(val, at_q=0, swap=True)
            assert a == b == c == d

    def test_val_symfunc_small(self):
        table, f = val_rhs(3, 2, as_symfunc=True)
        assert f == rise_rhs(3, 2)
