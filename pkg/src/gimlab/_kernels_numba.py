"""numba-compiled int64 kernels mirroring _kernels_numpy.

Same contracts as the numpy versions, restricted to int64 arrays.  The
overflow guard is evaluated in float64: the threshold 4.0e18 sits below
2**62 with enough margin to absorb the float rounding of products near
2**63, so a passing guard proves the int64 arithmetic cannot wrap.
"""

import numpy as np
from numba import njit

_GUARD = 4.0e18

STATUS_OK = 0
STATUS_OVERFLOW = 1


@njit(cache=True)
def _content64(w):
    g = np.int64(0)
    for i in range(w.shape[0]):
        x = w[i]
        if x < 0:
            x = -x
        if x != 0:
            a, b = g, x
            while b:
                a, b = b, a % b
            g = a
            if g == 1:
                return g
    return g


@njit(cache=True)
def _maxabs64(w):
    m = np.int64(0)
    for i in range(w.shape[0]):
        x = w[i]
        if x < 0:
            x = -x
        if x > m:
            m = x
    return m


@njit(cache=True)
def reduce_vec(B, piv, r, w):
    for i in range(r):
        c = piv[i]
        wc = w[c]
        if wc == 0:
            continue
        d = B[i, c]
        awc = -wc if wc < 0 else wc
        if float(d) * float(_maxabs64(w)) + float(awc) * float(_maxabs64(B[i])) > _GUARD:
            return STATUS_OVERFLOW
        for j in range(w.shape[0]):
            w[j] = d * w[j] - wc * B[i, j]
        g = _content64(w)
        if g > 1:
            for j in range(w.shape[0]):
                w[j] //= g
    return STATUS_OK


@njit(cache=True)
def eliminate_col(B, piv, r, v, c):
    p = v[c]
    mv = _maxabs64(v)
    for i in range(r):
        bic = B[i, c]
        if bic == 0:
            continue
        abic = -bic if bic < 0 else bic
        if float(p) * float(_maxabs64(B[i])) + float(abic) * float(mv) > _GUARD:
            return STATUS_OVERFLOW
        for j in range(B.shape[1]):
            B[i, j] = p * B[i, j] - bic * v[j]
        g = _content64(B[i])
        if g > 1:
            for j in range(B.shape[1]):
                B[i, j] //= g
    return STATUS_OK
