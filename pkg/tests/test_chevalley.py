"""Chevalley systems for the three classical families and their composites."""

from fractions import Fraction

import pytest

from gimlab import (RatMatrix, bracket, ad_power, chevalley_A, chevalley_C,
                    chevalley_D, composite_EF_C, composite_EF_D,
                    defining_form, elementary, lie_closure,
                    lowest_root_vectors_A, rat)


def _check_cartan_relations(sys):
    r = sys.rank
    for i in range(r):
        assert bracket(sys.e[i], sys.f[i]) == sys.h[i]
        for j in range(r):
            assert bracket(sys.h[i], sys.e[j]) == sys.cartan[i][j] * sys.e[j]
            assert bracket(sys.h[i], sys.f[j]) == -sys.cartan[i][j] * sys.f[j]
            if i != j:
                assert bracket(sys.e[i], sys.f[j]).is_zero()
                # Serre relations
                k = 1 - sys.cartan[i][j]
                assert ad_power(sys.e[i], k, sys.e[j]).is_zero()
                assert ad_power(sys.f[i], k, sys.f[j]).is_zero()


def test_elementary():
    m = elementary(3, 1, 3)
    assert m.entry(0, 2) == 1
    assert sum(x for row in m.to_fraction_rows() for x in row) == 1


class TestFamilyA:
    def test_shape(self):
        sys = chevalley_A(3)
        assert sys.family == "A" and sys.rank == 5 and sys.ambient_size == 6
        assert sys.cartan[0][1] == -1 and sys.cartan[0][2] == 0

    def test_relations(self):
        _check_cartan_relations(chevalley_A(3))

    def test_generates_special_linear(self):
        sys = chevalley_A(3)
        s = lie_closure(list(sys.e) + list(sys.f), 6)
        assert s.dimension == 35

    def test_too_small(self):
        with pytest.raises(ValueError):
            chevalley_A(1)


class TestFamilyC:
    def test_cartan_corner(self):
        sys = chevalley_C(3)
        # node n is the long root, attached to node 1
        assert sys.cartan[2][0] == -1
        assert sys.cartan[0][2] == -2
        assert sys.cartan[1][2] == 0 and sys.cartan[2][1] == 0

    def test_relations(self):
        _check_cartan_relations(chevalley_C(3))
        _check_cartan_relations(chevalley_C(4))

    def test_generates_symplectic(self):
        sys = chevalley_C(3)
        s = lie_closure(list(sys.e) + list(sys.f), 6)
        assert s.dimension == 21

    def test_form_invariance(self):
        for n in (3, 4):
            sys = chevalley_C(n)
            B = defining_form("C", n)
            assert B == -B.transpose()
            for x in list(sys.e) + list(sys.f) + list(sys.h):
                assert (x.transpose() @ B + B @ x).is_zero()


class TestFamilyD:
    def test_cartan_corner(self):
        sys = chevalley_D(4)
        # node n attaches to node 2
        assert sys.cartan[3][1] == -1 and sys.cartan[1][3] == -1
        assert sys.cartan[3][0] == 0 and sys.cartan[0][3] == 0

    def test_relations(self):
        _check_cartan_relations(chevalley_D(4))

    def test_generates_orthogonal(self):
        sys = chevalley_D(4)
        s = lie_closure(list(sys.e) + list(sys.f), 8)
        assert s.dimension == 28

    def test_form_invariance(self):
        sys = chevalley_D(4)
        B = defining_form("D", 4)
        assert B == B.transpose()
        for x in list(sys.e) + list(sys.f) + list(sys.h):
            assert (x.transpose() @ B + B @ x).is_zero()

    def test_too_small(self):
        with pytest.raises(ValueError):
            chevalley_D(3)

    def test_defining_form_family_a_rejected(self):
        with pytest.raises(ValueError):
            defining_form("A", 3)


class TestLowestRootVectors:
    def test_frozen_values(self):
        sys = chevalley_A(3)
        a = Fraction(5, 2)
        ec, fc = lowest_root_vectors_A(sys, a)
        assert ec == a * elementary(6, 6, 1)
        assert fc == (1 / a) * elementary(6, 1, 6)

    def test_corner_bracket_identity(self):
        for n in (3, 4):
            sys = chevalley_A(n)
            ec, fc = lowest_root_vectors_A(sys, rat(2))
            total = sys.h[0]
            for x in sys.h[1:]:
                total = total + x
            assert bracket(fc, ec) == total

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            lowest_root_vectors_A(chevalley_A(3), 0)

    def test_wrong_family_rejected(self):
        with pytest.raises(AssertionError):
            lowest_root_vectors_A(chevalley_C(3), rat(2))


class TestComposites:
    def test_symplectic_pair(self):
        for n in (3, 4):
            sys = chevalley_C(n)
            E, F = composite_EF_C(sys)
            want = -(2 * sys.h[n - 1])
            for x in sys.h[:n - 1]:
                want = want - x
            assert bracket(E, F) == want
            # (E, F, [E, F]) is an sl_2 triple
            assert bracket(want, E) == 2 * E
            assert bracket(want, F) == -2 * F

    def test_orthogonal_pair(self):
        sys = chevalley_D(4)
        E, F = composite_EF_D(sys)
        want = RatMatrix.zeros(8)
        for x in sys.h[1:]:
            want = want - x
        assert bracket(E, F) == want

    def test_wrong_family(self):
        with pytest.raises(ValueError):
            composite_EF_C(chevalley_A(3))
        with pytest.raises(ValueError):
            composite_EF_D(chevalley_C(4))
