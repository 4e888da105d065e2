"""Exact rational dense linear algebra.

Scalars are stdlib Fractions (arbitrary precision, always in lowest terms
with positive denominator).  Matrices and echelon bases store a single
integer numerator array plus one positive denominator, normalized so the
gcd of all numerators and the denominator is 1; that keeps the hot loops in
integer arithmetic.  Arrays are int64 while every guard bound stays below
2**62 and are promoted to object dtype (Python big ints) the moment a bound
trips, so results are exact for any input size.

Echelon bases follow the reduced-row-echelon convention: each stored row is
a primitive integer vector whose pivot entry doubles as the denominator, so
the rational row has pivot exactly 1 and zeros in every other pivot column.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import _kernels_numpy as _npk
from .backend import kernels

Rational = Fraction

INT64_SAFE = _npk.INT64_SAFE

_maxabs = _npk._maxabs


def rat(x) -> Fraction:
    """Parse an exact rational from an int, Fraction, or 'p/q' string.

    Floats are rejected: every scalar in this package is exact.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected int, Fraction, or 'p/q' string, got {type(x).__name__}")


def format_rational(q: Fraction) -> str:
    """Canonical 'p/q' string (denominator always printed)."""
    q = rat(q)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# integer-array helpers


def _entries_to_num_den(rows):
    """rows of int/str/Fraction -> (integer ndarray, positive common denominator)."""
    fr = [[rat(x) for x in row] for row in rows]
    den = 1
    for row in fr:
        for x in row:
            den = den // math.gcd(den, x.denominator) * x.denominator
    nums = [x.numerator * (den // x.denominator) for row in fr for x in row]
    big = any(abs(v) >= INT64_SAFE for v in nums) or den >= INT64_SAFE
    arr = np.array(nums, dtype=object if big else np.int64)
    return arr.reshape(len(fr), len(fr[0]) if fr else 0), den


def _norm_num_den(num, den):
    """Canonicalize: gcd(content, den) = 1, zero matrix gets den 1, demote dtype."""
    if not num.any():
        return np.zeros(num.shape, dtype=np.int64), 1
    g = math.gcd(_npk.content(num.reshape(-1)), den)
    if g > 1:
        num = num // g
        den = den // g
    if num.dtype == object and _maxabs(num.reshape(-1)) < INT64_SAFE and den < INT64_SAFE:
        num = num.astype(np.int64)
    return num, int(den)


def _to_object(arr):
    return arr if arr.dtype == object else arr.astype(object)


def _lin_comb(a, sa, b, sb):
    """Exact sa*a + sb*b for integer arrays and Python-int scalars."""
    if a.dtype != object and b.dtype != object:
        bound = _maxabs(a.reshape(-1)) * abs(sa) + _maxabs(b.reshape(-1)) * abs(sb)
        if bound < INT64_SAFE:
            return a * sa + b * sb
    return _to_object(a) * sa + _to_object(b) * sb


def _scale_num(a, s):
    if a.dtype != object and abs(s) < INT64_SAFE and _maxabs(a.reshape(-1)) * abs(s) < INT64_SAFE:
        return a * s
    return _to_object(a) * s


def _matmul_nums(a, b):
    if a.dtype != object and b.dtype != object:
        bound = a.shape[1] * _maxabs(a.reshape(-1)) * _maxabs(b.reshape(-1))
        if bound < INT64_SAFE:
            return a @ b
    return _to_object(a) @ _to_object(b)


def _commutator_nums(a, b):
    """a@b - b@a, exact."""
    if a.dtype != object and b.dtype != object:
        bound = 2 * a.shape[1] * _maxabs(a.reshape(-1)) * _maxabs(b.reshape(-1))
        if bound < INT64_SAFE:
            return a @ b - b @ a
    a = _to_object(a)
    b = _to_object(b)
    return a @ b - b @ a


def _freeze(arr):
    arr.flags.writeable = False
    return arr


# ---------------------------------------------------------------------------
# rational matrices


class RatMatrix:
    """Immutable dense matrix of exact rationals.

    Stored as one integer array ``num`` over a positive denominator ``den``
    with gcd(content(num), den) == 1.  Entry (i, j) equals
    Fraction(num[i, j], den); indices on ``entry`` are 0-based.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, rows):
        num, den = _entries_to_num_den([list(r) for r in rows])
        num, den = _norm_num_den(num, den)
        self.num = _freeze(num)
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        m = object.__new__(cls)
        num, den = _norm_num_den(num, den)
        m.num = _freeze(num)
        m.den = den
        m._hash = None
        return m

    @classmethod
    def from_num_den(cls, num, den=1):
        """Build from an integer ndarray (int64 or object of Python ints) over den."""
        if den == 0:
            raise ZeroDivisionError("denominator must be nonzero")
        arr = np.asarray(num)
        assert arr.dtype in (np.int64, object), "integer array expected"
        arr = arr.copy()
        if den < 0:
            arr, den = -arr, -den
        return cls._raw(arr, int(den))

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls._raw(np.zeros((rows, cols), dtype=np.int64), 1)

    @classmethod
    def identity(cls, n):
        return cls._raw(np.eye(n, dtype=np.int64), 1)

    @classmethod
    def block_diag(cls, blocks):
        blocks = list(blocks)
        assert blocks, "need at least one block"
        n = sum(b.rows for b in blocks)
        den = 1
        for b in blocks:
            den = den // math.gcd(den, b.den) * b.den
        scaled = [_scale_num(b.num, den // b.den) for b in blocks]
        big = any(s.dtype == object for s in scaled)
        out = np.zeros((n, n), dtype=object if big else np.int64)
        at = 0
        for b, s in zip(blocks, scaled):
            out[at:at + b.rows, at:at + b.cols] = _to_object(s) if big else s
            at += b.rows
        return cls._raw(out, den)

    @property
    def rows(self):
        return self.num.shape[0]

    @property
    def cols(self):
        return self.num.shape[1]

    @property
    def shape(self):
        return self.num.shape

    def is_square(self):
        return self.rows == self.cols

    def entry(self, i, j) -> Fraction:
        return Fraction(int(self.num[i, j]), self.den)

    def to_fraction_rows(self):
        d = self.den
        return tuple(tuple(Fraction(int(v), d) for v in row) for row in self.num.tolist())

    def transpose(self):
        return RatMatrix._raw(self.num.T.copy(), self.den)

    def trace(self) -> Fraction:
        t = sum(int(self.num[i, i]) for i in range(min(self.shape)))
        return Fraction(t, self.den)

    def is_zero(self):
        return not self.num.any()

    def flat_num_den(self):
        """(1-D integer copy of the numerators, denominator)."""
        return self.num.reshape(-1).copy(), self.den

    def __add__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        assert self.shape == other.shape, "shape mismatch"
        L = self.den // math.gcd(self.den, other.den) * other.den
        num = _lin_comb(self.num, L // self.den, other.num, L // other.den)
        return RatMatrix._raw(num, L)

    def __sub__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        assert self.shape == other.shape, "shape mismatch"
        L = self.den // math.gcd(self.den, other.den) * other.den
        num = _lin_comb(self.num, L // self.den, other.num, -(L // other.den))
        return RatMatrix._raw(num, L)

    def __neg__(self):
        return RatMatrix._raw(-self.num, self.den)

    def __mul__(self, scalar):
        if isinstance(scalar, RatMatrix):
            raise TypeError("use @ for the matrix product")
        q = rat(scalar)
        return RatMatrix._raw(_scale_num(self.num, q.numerator), self.den * q.denominator)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        assert self.cols == other.rows, "inner dimension mismatch"
        return RatMatrix._raw(_matmul_nums(self.num, other.num), self.den * other.den)

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (self.shape == other.shape and self.den == other.den
                and self.num.tolist() == other.num.tolist())

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self.den, tuple(int(v) for v in self.num.reshape(-1))))
        return self._hash

    def __repr__(self):
        if self.rows * self.cols <= 36:
            body = "; ".join(" ".join(format_rational(x) for x in row)
                             for row in self.to_fraction_rows())
            return f"RatMatrix[{body}]"
        return f"RatMatrix<{self.rows}x{self.cols}, den={self.den}>"


def vector_to_num_den(v):
    """Sequence of rationals -> (1-D integer ndarray, denominator)."""
    num, den = _entries_to_num_den([list(v)])
    return num.reshape(-1), den


# ---------------------------------------------------------------------------
# echelon engine


class _EchelonBuilder:
    """Mutable reduced-echelon accumulator; the public types wrap snapshots."""

    __slots__ = ("m", "r", "big", "B", "piv")

    def __init__(self, m, big=False):
        self.m = int(m)
        self.r = 0
        self.big = bool(big)
        cap = 16
        self.B = np.zeros((cap, self.m), dtype=object if big else np.int64)
        self.piv = np.zeros(cap, dtype=np.int64)

    @classmethod
    def from_basis(cls, basis):
        b = cls(basis.ambient_dim, big=basis._B.dtype == object)
        r = basis.nrows
        if r:
            cap = max(16, 2 * r)
            b.B = np.zeros((cap, b.m), dtype=basis._B.dtype)
            b.piv = np.zeros(cap, dtype=np.int64)
            b.B[:r] = basis._B
            b.piv[:r] = basis._piv
            b.r = r
        return b

    def _promote(self):
        if not self.big:
            self.B = self.B.astype(object)
            self.big = True

    def _ensure_capacity(self):
        if self.r + 1 > self.B.shape[0]:
            cap = 2 * self.B.shape[0]
            B = np.zeros((cap, self.m), dtype=self.B.dtype)
            piv = np.zeros(cap, dtype=np.int64)
            B[:self.r] = self.B[:self.r]
            piv[:self.r] = self.piv[:self.r]
            self.B, self.piv = B, piv

    def reduce_residual(self, w):
        """Primitive residual of w against the basis, or None if w is in the span.

        w is a 1-D integer array (int64 or object) and is not modified.
        The residual is the exact rational residual up to a positive scale.
        """
        assert w.shape[0] == self.m, "ambient dimension mismatch"
        if w.dtype == object and not self.big:
            self._promote()
        ww = _to_object(w.copy()) if self.big else w.copy()
        if self.big:
            _npk.reduce_vec(self.B, self.piv, self.r, ww)
        else:
            status = kernels().reduce_vec(self.B, self.piv, self.r, ww)
            if status != _npk.STATUS_OK:
                self._promote()
                ww = _to_object(w.copy())
                _npk.reduce_vec(self.B, self.piv, self.r, ww)
        if not ww.any():
            return None
        _npk.normalize_content(ww)
        return ww

    def insert_residual(self, res):
        """Insert a nonzero reduced residual as a new row; keeps RREF invariants."""
        if res.dtype == object and not self.big:
            self._promote()
        c = int(np.flatnonzero(res)[0])
        if res[c] < 0:
            res = -res
        if self.big:
            res = _to_object(res)
            _npk.eliminate_col(self.B, self.piv, self.r, res, c)
        else:
            status = kernels().eliminate_col(self.B, self.piv, self.r, res, c)
            if status != _npk.STATUS_OK:
                # processed rows are already clear in column c; redo is safe
                self._promote()
                res = _to_object(res)
                _npk.eliminate_col(self.B, self.piv, self.r, res, c)
        self._ensure_capacity()
        pos = int(np.searchsorted(self.piv[:self.r], c))
        if pos < self.r:
            self.B[pos + 1:self.r + 1] = self.B[pos:self.r].copy()
            self.piv[pos + 1:self.r + 1] = self.piv[pos:self.r].copy()
        self.B[pos] = res
        self.piv[pos] = c
        self.r += 1
        return pos

    def insert_vector(self, w):
        """Reduce w and absorb any new direction.  True if the rank grew."""
        res = self.reduce_residual(w)
        if res is None:
            return False
        self.insert_residual(res)
        return True

    def reduce_with_coords(self, w, den=1):
        """Exact reduction of the rational vector w/den, recording coefficients.

        Returns (coeffs, residual) with w/den == sum coeffs[i]*row_i plus the
        (scaled-primitive) residual; residual is None when w/den is in the span.
        """
        assert w.shape[0] == self.m, "ambient dimension mismatch"
        ww = _to_object(w.copy()) if self.big or w.dtype == object else w.copy()
        coeffs = [Fraction(0)] * self.r
        g = _npk.normalize_content(ww)
        if g == 0:
            return coeffs, None
        s = Fraction(g, den)
        guarded = ww.dtype != object
        for i in range(self.r):
            c = int(self.piv[i])
            wc = int(ww[c])
            if wc == 0:
                continue
            d = int(self.B[i, c])
            row = self.B[i]
            if guarded:
                bound = d * _maxabs(ww) + abs(wc) * _maxabs(row)
                if bound >= INT64_SAFE:
                    ww = _to_object(ww)
                    row = _to_object(np.asarray(row))
                    guarded = False
            if not guarded and row.dtype != object:
                row = _to_object(np.asarray(row))
            coeffs[i] = s * wc
            ww = d * ww - wc * row
            g = _npk.normalize_content(ww)
            if g:
                s = s * g / d
        if not ww.any():
            return coeffs, None
        return coeffs, ww

    def snapshot(self):
        return EchelonBasis._raw(self.m, self.B[:self.r].copy(), self.piv[:self.r].copy())


class EchelonBasis:
    """Immutable reduced-row-echelon basis of a subspace of Q^m.

    Rational rows have pivot entry 1, pivots in strictly increasing column
    order, zeros above and below every pivot, and no zero rows; this is the
    canonical basis of the subspace, so equal spans compare equal.
    """

    __slots__ = ("ambient_dim", "_B", "_piv")

    def __init__(self, ambient_dim, rows=()):
        b = _EchelonBuilder(ambient_dim)
        for v in rows:
            num, _den = vector_to_num_den(v)
            b.insert_vector(num)
        snap = b.snapshot()
        self.ambient_dim = snap.ambient_dim
        self._B = snap._B
        self._piv = snap._piv

    @classmethod
    def _raw(cls, m, B, piv):
        self = object.__new__(cls)
        self.ambient_dim = int(m)
        self._B = _freeze(B)
        self._piv = _freeze(piv)
        return self

    @property
    def nrows(self):
        return self._B.shape[0]

    @property
    def pivot_cols(self):
        return tuple(int(c) for c in self._piv)

    def row(self, i):
        d = int(self._B[i, self._piv[i]])
        return tuple(Fraction(int(v), d) for v in self._B[i].tolist())

    def rows_fractions(self):
        return tuple(self.row(i) for i in range(self.nrows))

    def row_num_den(self, i):
        """(primitive integer row, pivot value) — the row equals num/den."""
        return self._B[i], int(self._B[i, self._piv[i]])

    def contains(self, v):
        num, _ = vector_to_num_den(v)
        return _EchelonBuilder.from_basis(self).reduce_residual(num) is None

    def coords(self, v):
        """Coefficients of v in this basis, or None when v is outside the span."""
        num, den = vector_to_num_den(v)
        coeffs, residual = _EchelonBuilder.from_basis(self).reduce_with_coords(num, den)
        return None if residual is not None else tuple(coeffs)

    def __eq__(self, other):
        if not isinstance(other, EchelonBasis):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim
                and self.pivot_cols == other.pivot_cols
                and self._B.tolist() == other._B.tolist())

    def __hash__(self):
        return hash((self.ambient_dim, self.pivot_cols))

    def __repr__(self):
        return f"EchelonBasis<dim {self.nrows} in Q^{self.ambient_dim}>"

    def to_json_dict(self):
        return {
            "ambient_dim": self.ambient_dim,
            "pivot_cols": list(self.pivot_cols),
            "rows": [[format_rational(x) for x in row] for row in self.rows_fractions()],
        }

    @classmethod
    def from_json_dict(cls, d):
        basis = cls(d["ambient_dim"], d["rows"])
        assert list(basis.pivot_cols) == list(d["pivot_cols"]), "corrupt echelon payload"
        return basis


def insert_into_span(basis: EchelonBasis, v):
    """Insert vector v into the span.  Returns (new_basis, was_new)."""
    num, _den = vector_to_num_den(v)
    b = _EchelonBuilder.from_basis(basis)
    was_new = b.insert_vector(num)
    return (b.snapshot() if was_new else basis), was_new


class RrefResult(NamedTuple):
    matrix: RatMatrix
    rank: int
    pivot_cols: tuple


def rref(m: RatMatrix) -> RrefResult:
    """Reduced row-echelon form of m (same shape, zero rows trailing)."""
    b = _EchelonBuilder(m.cols)
    for i in range(m.rows):
        b.insert_vector(m.num[i].copy())
    snap = b.snapshot()
    rows = [list(r) for r in snap.rows_fractions()]
    rows.extend([Fraction(0)] * m.cols for _ in range(m.rows - snap.nrows))
    out = RatMatrix(rows) if rows else RatMatrix.zeros(m.rows, m.cols)
    return RrefResult(out, snap.nrows, snap.pivot_cols)


def kernel_basis(m: RatMatrix):
    """Basis of the right null space {x : m @ x = 0}, one vector per free column."""
    b = _EchelonBuilder(m.cols)
    for i in range(m.rows):
        b.insert_vector(m.num[i].copy())
    snap = b.snapshot()
    pivots = list(snap.pivot_cols)
    pivot_set = set(pivots)
    out = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        x = [Fraction(0)] * m.cols
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            num, den = snap.row_num_den(i)
            x[p] = -Fraction(int(num[f]), den)
        out.append(tuple(x))
    return out
