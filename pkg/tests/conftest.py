"""Shared hypothesis strategies for the exact-arithmetic suites."""

from fractions import Fraction

from hypothesis import strategies as st

from gimlab import LoopElement, RatMatrix


def fractions(max_num=9, max_den=5):
    return st.builds(Fraction, st.integers(-max_num, max_num),
                     st.integers(1, max_den))


def nonzero_fractions(max_num=9, max_den=5):
    return fractions(max_num, max_den).filter(lambda x: x != 0)


def rat_matrices(size, max_num=6, max_den=3):
    grid = st.lists(st.lists(fractions(max_num, max_den),
                             min_size=size, max_size=size),
                    min_size=size, max_size=size)
    return grid.map(RatMatrix)


def _traceless(rows):
    m = RatMatrix(rows)
    k = m.rows
    # knock the trace out on the last diagonal entry
    rows = [list(r) for r in m.to_fraction_rows()]
    rows[k - 1][k - 1] -= m.trace()
    return RatMatrix(rows)


def traceless_matrices(size, max_num=4):
    grid = st.lists(st.lists(fractions(max_num, 2),
                             min_size=size, max_size=size),
                    min_size=size, max_size=size)
    return grid.map(_traceless)


def loop_elements(size=2, max_exp=2, max_terms=3):
    term = st.tuples(st.integers(-max_exp, max_exp),
                     traceless_matrices(size))
    return st.builds(
        lambda terms, c: LoopElement(terms, central=c, size=size),
        st.lists(term, min_size=0, max_size=max_terms),
        fractions(3, 2))
