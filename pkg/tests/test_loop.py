"""Loop-algebra elements, the corner chain, and quotient evaluation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gimlab import (LoopElement, bracket, check_loop_relations, elementary,
                    eval_quotient_map, fixed_point_generators, gim_matrix_mn,
                    loop_bracket, make_quotient, psi_a, rat, sigma, xi_chain)

from conftest import loop_elements


def _E(N, i, j):
    return elementary(N, i, j)


def _corner_h(n):
    # E_nn - E_{n+1,n+1} and E_11 - E_{2n,2n} inside sl_2n
    N = 2 * n
    return (_E(N, n, n) - _E(N, n + 1, n + 1), _E(N, 1, 1) - _E(N, N, N))


class TestLoopElement:
    def test_rejects_traceful_coefficient(self):
        with pytest.raises(ValueError):
            LoopElement([(0, _E(2, 1, 1))])

    def test_merges_and_drops(self):
        a = _E(2, 1, 2)
        x = LoopElement([(0, a), (0, a)])
        assert x.coefficient(0) == 2 * a
        assert LoopElement([(0, a), (0, -1 * a)]).is_zero()

    def test_mixed_sizes_rejected(self):
        with pytest.raises(ValueError):
            LoopElement([(0, _E(2, 1, 2)), (1, _E(4, 1, 2))])
        with pytest.raises(ValueError):
            LoopElement([(0, _E(2, 1, 2))]) + LoopElement([(0, _E(4, 1, 2))])

    def test_coefficient_type_checked(self):
        with pytest.raises(TypeError):
            LoopElement([(0, 5)])

    def test_sizeless_coefficient_lookup(self):
        with pytest.raises(ValueError):
            LoopElement(central=1).coefficient(0)

    def test_scalars(self):
        x = LoopElement([(2, _E(2, 1, 2))], central=3)
        y = Fraction(1, 2) * x
        assert y.coefficient(2) == rat("1/2") * _E(2, 1, 2)
        assert y.central == Fraction(3, 2)
        assert (x * 0).is_zero()
        with pytest.raises(TypeError):
            x * x

    def test_eq_and_hash(self):
        a = LoopElement([(1, _E(2, 1, 2))], central=1)
        b = LoopElement([(1, _E(2, 1, 2))], central=1)
        assert a == b and hash(a) == hash(b)
        assert a != LoopElement([(1, _E(2, 1, 2))])
        assert a != 7

    def test_json_round_trip(self):
        x = LoopElement([(-2, _E(2, 1, 2)), (1, rat("1/3") * _E(2, 2, 1))],
                        central="-4/5")
        assert LoopElement.from_json_dict(x.to_json_dict()) == x

    def test_exponents_sorted(self):
        x = LoopElement([(3, _E(2, 1, 2)), (-1, _E(2, 2, 1))])
        assert x.exponents() == (-1, 3)


class TestCocycleBracket:
    def test_central_term(self):
        # [x (x) t, y (x) t^-1] picks up tr(xy) c
        x = LoopElement([(1, _E(2, 1, 2))])
        y = LoopElement([(-1, _E(2, 2, 1))])
        z = loop_bracket(x, y)
        assert z.central == 1
        assert z.coefficient(0) == _E(2, 1, 1) - _E(2, 2, 2)

    def test_central_inputs_are_inert(self):
        x = LoopElement([(1, _E(2, 1, 2))], central=5)
        y = LoopElement([(0, _E(2, 2, 1))], central=-2)
        assert loop_bracket(x, y) == loop_bracket(
            x - LoopElement(central=5, size=2),
            y + LoopElement(central=2, size=2))

    @settings(max_examples=80, deadline=None)
    @given(loop_elements(), loop_elements())
    def test_antisymmetry(self, x, y):
        assert (loop_bracket(x, y) + loop_bracket(y, x)).is_zero()

    @settings(max_examples=60, deadline=None)
    @given(loop_elements(), loop_elements(), loop_elements())
    def test_jacobi(self, x, y, z):
        total = (loop_bracket(x, loop_bracket(y, z))
                 + loop_bracket(y, loop_bracket(z, x))
                 + loop_bracket(z, loop_bracket(x, y)))
        assert total.is_zero()


class TestFixedPointGenerators:
    @pytest.mark.parametrize("n,variant", [(3, "plus"), (3, "minus"),
                                           (4, "plus"), (4, "minus")])
    def test_relations(self, n, variant):
        rep = check_loop_relations(gim_matrix_mn(n),
                                   fixed_point_generators(n, variant))
        assert rep.passed

    def test_checked_count(self):
        rep = check_loop_relations(gim_matrix_mn(3), fixed_point_generators(3))
        assert rep.checked == 45

    def test_distant_pair_commutes(self):
        pairs = fixed_point_generators(4)
        assert loop_bracket(pairs[0][0], pairs[2][1]).is_zero()

    def test_corner_pair_positive_relations(self):
        pairs = fixed_point_generators(3)
        e1, f1 = pairs[0]
        e3, f3 = pairs[2]
        assert loop_bracket(e1, e3).is_zero()
        assert loop_bracket(e1, loop_bracket(e1, f3)).is_zero()

    def test_corner_coroot_central_part(self):
        for variant in ("plus", "minus"):
            for n in (3, 4):
                e_n, f_n = fixed_point_generators(n, variant)[n - 1]
                h_n = loop_bracket(e_n, f_n)
                assert h_n.central == -1
                hn_mat, sigma_h = _corner_h(n)
                assert h_n.coefficient(0) == hn_mat + sigma_h

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            fixed_point_generators(2)
        with pytest.raises(ValueError):
            fixed_point_generators(3, "neg")
        with pytest.raises(ValueError):
            check_loop_relations(gim_matrix_mn(4), fixed_point_generators(3))


class TestXiChain:
    @pytest.mark.parametrize("n", [3, 4])
    def test_intermediates_frozen(self, n):
        N = 2 * n
        xi, steps = xi_chain(n)
        s1, s2, s3, s4 = steps
        top = _E(N, 1, n + 1)
        assert s1 == LoopElement([(0, top), (-1, top)])
        assert s2 == LoopElement([(0, _E(N, n, 1) - _E(N, n + 1, N))])
        cor = _E(N, n, n + 1) + _E(N, 1, N)
        assert s3 == LoopElement([(0, cor), (-1, cor)])
        hn_mat, sigma_h = _corner_h(n)
        assert s4 == LoopElement([(-1, hn_mat), (0, hn_mat + sigma_h),
                                  (1, sigma_h)], central=-1)
        assert xi == LoopElement([(-1, hn_mat), (1, sigma_h)])
        assert xi.central == 0

    @pytest.mark.parametrize("variant", ["plus", "minus"])
    def test_half_ad_recovers_xi(self, variant):
        n = 3
        xi, _ = xi_chain(n, variant)
        e_n, f_n = fixed_point_generators(n, variant)[n - 1]
        u = rat("1/2") * loop_bracket(xi, e_n)
        assert loop_bracket(u, f_n) == xi

    @pytest.mark.parametrize("n", [3, 4])
    def test_ad_powers_walk_the_exponent(self, n):
        xi, _ = xi_chain(n)
        pairs = fixed_point_generators(n)
        e_n, f_n = pairs[n - 1]
        e_1, f_1 = pairs[0]
        hn_mat, sigma_h = _corner_h(n)
        N = 2 * n
        u, v = e_n, e_1
        for m in range(1, 4):
            u = rat("1/2") * loop_bracket(xi, u)
            assert loop_bracket(u, f_n) == LoopElement([(-m, hn_mat),
                                                        (m, sigma_h)])
            v = loop_bracket(xi, v)
            h1 = _E(N, 1, 1) - _E(N, 2, 2)
            hn1 = _E(N, n + 1, n + 1) - _E(N, n + 2, n + 2)
            assert loop_bracket(v, f_1) == LoopElement([(m, h1), (-m, -1 * hn1)])


class TestQuotient:
    def test_frozen_pair(self):
        q = make_quotient(("2", "1/2"))
        assert q.theta == (1, Fraction(-5, 2), 1)
        assert q.c == (Fraction(2, 3), Fraction(-2, 3))
        assert q.d == (Fraction(3, 2), Fraction(-3, 2))

    def test_four_roots(self):
        q = make_quotient(("2", "3", "1/3", "1/2"))
        assert len(q.theta) == 5 and q.theta[-1] == 1
        for ci, di in zip(q.c, q.d):
            assert ci * di == 1

    def test_rejects_bad_roots(self):
        with pytest.raises(ValueError):
            make_quotient(())
        with pytest.raises(ValueError):
            make_quotient(("0", "2"))
        with pytest.raises(ValueError):
            make_quotient(("2", "2"))

    def test_eval_matches_corner_embedding(self):
        q = make_quotient(("2", "1/2"))
        e_n, f_n = fixed_point_generators(3)[2]
        outs_e = eval_quotient_map(e_n, q)
        outs_f = eval_quotient_map(f_n, q)
        for k, a in enumerate(q.roots):
            im = psi_a(3, a)
            assert outs_e[k] == im.X[2]
            assert outs_f[k] == im.Y[2]

    def test_eval_kills_center(self):
        q = make_quotient(("2", "1/2"))
        z = LoopElement(central=1, size=6)
        assert all(m.is_zero() for m in eval_quotient_map(z, q))

    def test_eval_is_bracket_compatible(self):
        q = make_quotient(("2", "3"))
        x = LoopElement([(1, _E(4, 1, 2)), (-1, _E(4, 2, 3))])
        y = LoopElement([(0, _E(4, 2, 1)), (2, _E(4, 3, 1))])
        z = loop_bracket(x, y)
        for k in range(2):
            lhs = eval_quotient_map(z, q)[k]
            rhs = bracket(eval_quotient_map(x, q)[k], eval_quotient_map(y, q)[k])
            assert lhs == rhs


class TestSigma:
    def test_flips_exponents(self):
        x = LoopElement([(2, _E(2, 1, 2)), (-1, _E(2, 2, 1))])
        assert sigma(x).exponents() == (-2, 1)
        assert sigma(x).coefficient(-2) == _E(2, 1, 2)

    def test_rejects_central(self):
        with pytest.raises(ValueError):
            sigma(LoopElement([(1, _E(2, 1, 2))], central=1))

    @settings(max_examples=50, deadline=None)
    @given(loop_elements())
    def test_involution(self, x):
        y = LoopElement(x.terms, 0, x.size)
        assert sigma(sigma(y)) == y

    def test_eval_after_sigma_swaps_inverse_roots(self):
        q = make_quotient(("2", "1/2"))
        x = LoopElement([(1, _E(6, 1, 2)), (-2, rat("1/3") * _E(6, 2, 3))])
        direct = eval_quotient_map(x, q)
        flipped = eval_quotient_map(sigma(x), q)
        assert flipped[0] == direct[1]
        assert flipped[1] == direct[0]


@settings(max_examples=40, deadline=None)
@given(loop_elements(), loop_elements(),
       st.integers(min_value=-3, max_value=3))
def test_bracket_bilinear(x, y, k):
    assert loop_bracket(k * x, y) == k * loop_bracket(x, y)
    assert loop_bracket(x + y, y) == loop_bracket(x, y) + loop_bracket(y, y)
