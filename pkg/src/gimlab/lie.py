"""Matrix Lie algebra engine: brackets, closures, Killing form, center.

The closure routine runs a worklist: every element accepted into the span is
bracketed against all previously accepted elements, and each commutator is
reduced against the growing reduced-echelon basis.  That costs O(D^2)
bracket evaluations for a final dimension D, and because the reduced echelon
basis of a subspace is unique, the returned basis is canonical: it does not
depend on generator order.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from . import _kernels_numpy as _npk
from .exact import (
    INT64_SAFE,
    EchelonBasis,
    RatMatrix,
    _commutator_nums,
    _EchelonBuilder,
    _maxabs,
    _to_object,
    kernel_basis,
    rref,
)


def bracket(x: RatMatrix, y: RatMatrix) -> RatMatrix:
    """Commutator [x, y] = xy - yx."""
    assert x.is_square() and y.is_square(), "bracket needs square matrices"
    assert x.rows == y.rows, "ambient size mismatch"
    return RatMatrix.from_num_den(_commutator_nums(x.num, y.num), x.den * y.den)


def ad_power(x: RatMatrix, k: int, y: RatMatrix) -> RatMatrix:
    """(ad x)^k applied to y: k nested brackets [x, [x, ... [x, y]]]."""
    assert k >= 0
    out = y
    for _ in range(k):
        out = bracket(x, out)
    return out


class SubalgebraBasis:
    """A Lie subalgebra of gl_N presented by its canonical echelon basis.

    ``basis`` spans the subalgebra inside Q^(N*N) (matrices flattened row by
    row); ``generators`` records the defining set.  Built by lie_closure.
    """

    __slots__ = ("ambient_size", "basis", "generators", "_mats", "_ad")

    def __init__(self, ambient_size, basis: EchelonBasis, generators):
        assert basis.ambient_dim == ambient_size * ambient_size
        self.ambient_size = int(ambient_size)
        self.basis = basis
        self.generators = tuple(generators)
        self._mats = None
        self._ad = None

    @property
    def dimension(self):
        return self.basis.nrows

    def basis_matrices(self):
        """The echelon rows reshaped to N x N rational matrices."""
        if self._mats is None:
            N = self.ambient_size
            mats = []
            for i in range(self.dimension):
                num, den = self.basis.row_num_den(i)
                mats.append(RatMatrix.from_num_den(num.reshape(N, N), den))
            self._mats = tuple(mats)
        return self._mats

    def contains(self, x: RatMatrix) -> bool:
        assert x.rows == x.cols == self.ambient_size
        num, _den = x.flat_num_den()
        return _EchelonBuilder.from_basis(self.basis).reduce_residual(num) is None

    def coords(self, x: RatMatrix):
        """Coordinates of x in the basis rows, or None if x is outside."""
        assert x.rows == x.cols == self.ambient_size
        num, den = x.flat_num_den()
        coeffs, residual = _EchelonBuilder.from_basis(self.basis).reduce_with_coords(num, den)
        return None if residual is not None else tuple(coeffs)

    def ad_tensor(self):
        """Structure data: for each basis element b_i, the matrix of ad b_i.

        Returns a list of (T_i, den_i) where column j of T_i/den_i holds the
        coordinates of [b_i, b_j] in the basis.  Integer arrays, exact.
        """
        if self._ad is not None:
            return self._ad
        D = self.dimension
        N = self.ambient_size
        builder = _EchelonBuilder.from_basis(self.basis)
        rows = [self.basis.row_num_den(i) for i in range(D)]
        ads = []
        for i in range(D):
            cols = []
            for j in range(D):
                num = _commutator_nums(rows[i][0].reshape(N, N), rows[j][0].reshape(N, N))
                coeffs, residual = builder.reduce_with_coords(
                    num.reshape(-1), rows[i][1] * rows[j][1])
                assert residual is None, "basis is not bracket-closed"
                cols.append(coeffs)
            den = 1
            for col in cols:
                for q in col:
                    den = den // math.gcd(den, q.denominator) * q.denominator
            T = np.empty((D, D), dtype=object)
            for j, col in enumerate(cols):
                for k, q in enumerate(col):
                    T[k, j] = q.numerator * (den // q.denominator)
            if _maxabs(T.reshape(-1)) < INT64_SAFE:
                T = T.astype(np.int64)
            ads.append((T, den))
        self._ad = ads
        return ads

    def __repr__(self):
        return f"SubalgebraBasis<dim {self.dimension} in gl_{self.ambient_size}>"


def lie_closure(generators, ambient_size=None) -> SubalgebraBasis:
    """Smallest Lie subalgebra containing the generators.

    Accepts RatMatrix generators of a common square size; an empty list
    yields the zero subalgebra (in gl_0 unless ambient_size says otherwise).
    The echelon basis returned is canonical for the subspace, so permuting
    the generators gives an identical result.
    """
    gens = list(generators)
    if not gens:
        amb = 0 if ambient_size is None else int(ambient_size)
        return SubalgebraBasis(amb, EchelonBasis(amb * amb), ())
    N = gens[0].rows
    for g in gens:
        assert isinstance(g, RatMatrix), "generators must be RatMatrix"
        if not g.is_square() or g.rows != N:
            raise ValueError("generators must be square matrices of one common size")
    if ambient_size is not None and ambient_size != N:
        raise ValueError("ambient_size does not match the generators")

    m = N * N
    builder = _EchelonBuilder(m)
    elems = []  # primitive integer matrices; scaling is irrelevant to the span
    for g in gens:
        num, _den = g.flat_num_den()
        res = builder.reduce_residual(num)
        if res is not None:
            builder.insert_residual(res.copy())
            elems.append(res.reshape(N, N))

    # worklist: bracket each accepted element against all accepted before it
    i = 0
    while i < len(elems):
        for j in range(i):
            w = _commutator_nums(elems[i], elems[j]).reshape(-1)
            res = builder.reduce_residual(w)
            if res is not None:
                builder.insert_residual(res.copy())
                elems.append(res.reshape(N, N))
        i += 1
        assert len(elems) <= m, "closure exceeded the ambient dimension bound"

    return SubalgebraBasis(N, builder.snapshot(), gens)


def killing_form(s: SubalgebraBasis) -> RatMatrix:
    """Gram matrix K[i,j] = trace(ad b_i . ad b_j) over the basis of s."""
    ads = s.ad_tensor()
    D = s.dimension
    K = [[Fraction(0)] * D for _ in range(D)]
    for i in range(D):
        Ti, di = ads[i]
        for j in range(i, D):
            Tj, dj = ads[j]
            if Ti.dtype != object and Tj.dtype != object:
                bound = D * D * _maxabs(Ti.reshape(-1)) * _maxabs(Tj.reshape(-1))
                if bound < INT64_SAFE:
                    t = int(np.einsum("kl,lk->", Ti, Tj))
                else:
                    t = int((_to_object(Ti) * _to_object(Tj).T).sum())
            else:
                t = int((_to_object(Ti) * _to_object(Tj).T).sum())
            K[i][j] = K[j][i] = Fraction(t, di * dj)
    return RatMatrix(K) if D else RatMatrix.zeros(0, 0)


def killing_nondegenerate(s: SubalgebraBasis) -> bool:
    k = killing_form(s)
    return s.dimension == 0 or rref(k).rank == s.dimension


def center(s: SubalgebraBasis):
    """Basis of the center {x in s : [x, b] = 0 for every b in s}, as matrices."""
    D = s.dimension
    if D == 0:
        return []
    ads = s.ad_tensor()
    # x = sum x_i b_i is central iff sum_i (x_i / den_i) T_i = 0; solve for
    # z_i = x_i / den_i over the stacked integer columns.
    stacked = [[Fraction(int(ads[i][0][k, j]), 1) for i in range(D)]
               for j in range(D) for k in range(D)]
    ker = kernel_basis(RatMatrix(stacked))
    mats = s.basis_matrices()
    out = []
    for z in ker:
        x = RatMatrix.zeros(s.ambient_size)
        for i in range(D):
            xi = z[i] * ads[i][1]
            if xi:
                x = x + xi * mats[i]
        out.append(x)
    return out
