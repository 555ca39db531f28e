import pytest
from hypothesis import given
from hypothesis import strategies as st

from deltacalc.arith import QTPoly, QTRat
from deltacalc.errors import NotPartitionContent
from deltacalc.qtops import (
    b_mu,
    cocharge,
    delta,
    delta_eigenvalue,
    delta_prime,
    hall_littlewood,
    hall_littlewood_literal,
    kappa,
    macdonald_basis,
    nabla,
    nabla_eigenvalue,
    permutation_cocharge,
    pi_eigenvalue,
    pi_inverse,
    pi_op,
    reading_word,
    specialize_hl,
    standard_subwords,
    theta_op,
    verify_macdonald,
)
from deltacalc.symfunc import Partition, SymFunc, e, h, m, partitions, s

q, t = QTPoly.q(), QTPoly.t()
WORD = [4, 2, 2, 4, 5, 1, 1, 1, 3, 3]


class TestCocharge:
    def test_subwords(self):
        assert standard_subwords(WORD) == [[2, 4, 5, 1, 3], [4, 2, 1, 3], [1]]

    def test_worked_word(self):
        assert cocharge(WORD) == 10

    def test_reading_word_of_tableau(self):
        assert reading_word(((1, 1, 1, 3, 3), (2, 2, 4, 5), (4,))) == WORD

    def test_displayed_tableau_exponent(self):
        # shape (5,4,1), content (3,2,2,2,1)
        assert cocharge(reading_word(((1, 1, 1, 3, 3), (2, 2, 4, 5), (4,)))) == 10

    @pytest.mark.parametrize("n", range(1, 7))
    def test_identity(self, n):
        assert cocharge(list(range(1, n + 1))) == 0

    def test_small(self):
        assert cocharge([2, 1]) == 1
        assert standard_subwords([1, 1]) == [[1], [1]]

    def test_bad_content(self):
        with pytest.raises(NotPartitionContent):
            cocharge([2, 2, 1])

    @given(st.permutations(list(range(1, 7))))
    def test_permutation_range(self, w):
        assert 0 <= permutation_cocharge(w) <= 15


class TestHallLittlewood:
    def test_two_cells(self):
        assert hall_littlewood((1, 1)) == s(2) + q * s(1, 1)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_row(self, n):
        assert hall_littlewood((n,)) == s(n)

    def test_literal_reading_differs(self):
        assert hall_littlewood_literal((1, 1)) != hall_littlewood((1, 1))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_q_equals_one_is_h_mu(self, n):
        for mu in partitions(n):
            assert hall_littlewood(mu).subs(at_q=1) == h(*mu).convert("s")


class TestMacdonald:
    def test_degree_two(self):
        B = macdonald_basis(2)
        assert B[(2,)] == s(2) + q * s(1, 1)
        assert B[(1, 1)] == s(2) + t * s(1, 1)

    def test_degree_one(self):
        assert macdonald_basis(1)[(1,)] == s(1)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_normalization(self, n):
        B = macdonald_basis(n)
        for mu in partitions(n):
            assert B[mu].coefficient((n,)) == 1

    @pytest.mark.parametrize("n", range(1, 5))
    def test_axioms(self, n):
        B = macdonald_basis(n)
        verify_macdonald(n, B.table)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_specializes_to_hall_littlewood(self, n):
        B = macdonald_basis(n)
        for mu in partitions(n):
            assert specialize_hl(B[mu]) == hall_littlewood(mu)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_qt_symmetry(self, n):
        # H_mu(q,t) = H_mu'(t,q)
        B = macdonald_basis(n)
        for mu in partitions(n):
            swapped = B[mu.conjugate()].map_coeffs(lambda c: QTRat(c.num.swap_qt(), c.den.swap_qt()))
            assert B[mu] == swapped


class TestEigenvalues:
    def test_kappa(self):
        assert kappa((3, 2)) == 2
        assert kappa((2, 2, 1)) == 4
        assert kappa((5,)) == 0

    def test_b_mu(self):
        assert b_mu((3, 2)) == 1 + q + q * q + t + q * t
        assert b_mu((1,)) == 1
        assert b_mu((1, 1)) == 1 + t

    def test_delta_prime_eigenvalue_32(self):
        # F evaluated at the alphabet q, q^2, t, qt; checked on e_2 and h_3
        alphabet = [q, q * q, t, q * t]
        e2 = sum((alphabet[i] * alphabet[j] for i in range(4) for j in range(i + 1, 4)), QTPoly(0))
        assert delta_eigenvalue(("e", 2), (3, 2), prime=True) == e2
        h3 = sum(
            (alphabet[i] * alphabet[j] * alphabet[k] for i in range(4) for j in range(i, 4) for k in range(j, 4)),
            QTPoly(0),
        )
        assert delta_eigenvalue(("h", 3), (3, 2), prime=True) == h3
        assert delta_eigenvalue(s(2, 1), (3, 2), prime=True) == delta_eigenvalue(
            h(2, 1) - h(3), (3, 2), prime=True
        )

    def test_pi_eigenvalue_32(self):
        assert pi_eigenvalue((3, 2)) == (1 - q) * (1 - q * q) * (1 - t) * (1 - q * t)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_nabla_eigenvalue_is_top_e(self, n):
        for mu in partitions(n):
            assert delta_eigenvalue(("e", n), mu) == nabla_eigenvalue(mu)


class TestOperators:
    def test_nabla_e2(self):
        assert nabla(e(2)).convert("s") == s(2) + (q + t) * s(1, 1)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_delta_prime_e0(self, n):
        assert delta_prime(("e", 0), e(n)) == e(n).convert("s")

    @pytest.mark.parametrize("n", range(1, 5))
    def test_operator_identity(self, n):
        for mu in partitions(n):
            f = s(*mu)
            assert delta(("e", n), f) == delta_prime(("e", n - 1), f) == nabla(f)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_rise_side_polynomial(self, n):
        for k in range(1, n + 1):
            g = delta_prime(("e", k - 1), e(n))
            for lam, c in g.items():
                assert c.is_polynomial()
                assert all(x > 0 for _, x in c.num.terms())

    def test_pi_invertible(self):
        f = s(2, 1) + q * s(1, 1, 1)
        assert pi_op(pi_inverse(f)) == f

    def test_theta_trivial(self):
        f = s(2, 1) - t * s(3)
        assert theta_op(e(), f) == f

    def test_operators_are_linear(self):
        f, g = s(2, 1), s(1, 1, 1)
        assert nabla(f + q * g) == nabla(f) + q * nabla(g)
