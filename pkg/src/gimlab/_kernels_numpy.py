"""Pure-numpy kernels for the integer echelon engine.

Every vector in the package is stored as a primitive integer array (content
gcd 1) so that row reduction never leaves the integers.  A basis row ``v``
with pivot column ``c`` represents the rational row ``v / v[c]``; keeping the
pivot value as the implicit denominator makes the reduced-echelon invariant
(pivot entry equal to 1) hold without storing fractions.

The int64 fast path guards every elimination step with an a-priori bound
computed in Python integers: if the next step could produce a value at or
above 2**62 the kernel reports overflow and the caller redoes the operation
on an object-dtype (arbitrary precision) array.  Object arrays take the same
code path with the guard disabled, so both modes produce bit-identical
rational results.
"""

import numpy as np

# Stay a factor of 2 below the int64 range so a*b + c*d cannot wrap.
INT64_SAFE = 2**62

STATUS_OK = 0
STATUS_OVERFLOW = 1


def _maxabs(arr):
    # max |entry| as a Python int; 0 for empty arrays
    if arr.size == 0:
        return 0
    return max(int(arr.max()), -int(arr.min()))


def content(w):
    """gcd of |entries| of a 1-D array, as a Python int (0 for the zero vector)."""
    if w.size == 0:
        return 0
    return int(np.gcd.reduce(np.abs(w)))


def normalize_content(w):
    """Divide w in place by its content.  Returns the content (0 if w == 0)."""
    g = content(w)
    if g > 1:
        w //= g
    return g


def reduce_vec(B, piv, r, w):
    """Eliminate the pivot columns of rows B[0:r] from w, in place.

    After each elimination step w is divided by its content, so the result is
    a primitive integer representative of the exact rational residual.
    Returns STATUS_OK, or STATUS_OVERFLOW when the int64 guard trips (w is
    then garbage and the caller must redo the reduction on object dtype).
    """
    guarded = B.dtype != object
    for i in range(r):
        c = int(piv[i])
        wc = int(w[c])
        if wc == 0:
            continue
        d = int(B[i, c])
        if guarded:
            bound = d * _maxabs(w) + abs(wc) * _maxabs(B[i])
            if bound >= INT64_SAFE:
                return STATUS_OVERFLOW
        w *= d
        w -= wc * B[i]
        normalize_content(w)
    return STATUS_OK


def eliminate_col(B, piv, r, v, c):
    """Clear column c of rows B[0:r] using the primitive row v (pivot at c).

    Maintains the pivot-equals-denominator convention: row i becomes
    v[c]*B[i] - B[i,c]*v, divided by its content.  v itself is not in B.
    Returns STATUS_OK or STATUS_OVERFLOW (B rows are then inconsistent and
    the caller must redo on object dtype).
    """
    guarded = B.dtype != object
    p = int(v[c])
    mv = _maxabs(v)
    for i in range(r):
        bic = int(B[i, c])
        if bic == 0:
            continue
        if guarded:
            bound = p * _maxabs(B[i]) + abs(bic) * mv
            if bound >= INT64_SAFE:
                return STATUS_OVERFLOW
        row = B[i]
        row *= p
        row -= bic * v
        normalize_content(row)
    return STATUS_OK
