"""Chevalley generator systems for the split classical algebras in gl_2n.

Three concrete systems are built, each with the node labeling used
throughout the package:

* family A: sl_2n with the simple chain 1 - 2 - ... - (2n-1);
* family C: sp_2n with nodes 1..n-1 the usual chain and node n the long
  root tied to node 1 (Cartan entries A[n,1] = -1, A[1,n] = -2);
* family D: so_2n with nodes 1..n-1 the chain and node n tied to node 2.

The C and D systems are realized on the symplectic/orthogonal split forms
that arise as evaluation images at a = 1 and a = -1: generators
x_i = E_{i,i+1} - E_{n+i+1,n+i} for the chain, plus E_{n+1,1}/E_{1,n+1}
(symplectic) or E_{n+1,2} - E_{n+2,1}/E_{2,n+1} - E_{1,n+2} (orthogonal)
for node n.  Composite lowest/highest root vectors are produced by
executing the nested bracket chains, not from closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import RatMatrix, rat
from .lie import bracket


def elementary(size, i, j) -> RatMatrix:
    """Matrix unit E_ij (1-based indices, matching the usual notation)."""
    assert 1 <= i <= size and 1 <= j <= size, "elementary indices are 1-based"
    rows = [[0] * size for _ in range(size)]
    rows[i - 1][j - 1] = 1
    return RatMatrix(rows)


@dataclass(frozen=True)
class ChevalleySystem:
    """Generator triple (e_i, f_i, h_i) of a split classical algebra.

    ``n`` is the size parameter (ambient gl_2n); ``rank`` is the number of
    nodes: 2n-1 for family A, n for families C and D.  ``cartan`` is the
    Cartan matrix in the package labeling, satisfying [h_i, e_j] =
    cartan[i][j] * e_j.
    """

    family: str
    n: int
    rank: int
    ambient_size: int
    e: tuple
    f: tuple
    h: tuple
    cartan: tuple


def _chain_pair(n, i):
    """The chain generators x_i, y_i shared by the C and D systems."""
    N = 2 * n
    x = elementary(N, i, i + 1) - elementary(N, n + i + 1, n + i)
    y = elementary(N, i + 1, i) - elementary(N, n + i, n + i + 1)
    return x, y


def _with_h(family, n, rank, ambient, e, f, cartan):
    h = tuple(bracket(ei, fi) for ei, fi in zip(e, f))
    return ChevalleySystem(family, n, rank, ambient, tuple(e), tuple(f), h,
                           tuple(tuple(row) for row in cartan))


def _chain_cartan(rank):
    A = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        A[i][i] = 2
        if i + 1 < rank:
            A[i][i + 1] = A[i + 1][i] = -1
    return A


def chevalley_A(n) -> ChevalleySystem:
    """sl_2n with e_i = E_{i,i+1}, f_i = E_{i+1,i}, i = 1..2n-1."""
    if n < 2:
        raise ValueError("family A needs n >= 2")
    N = 2 * n
    e = [elementary(N, i, i + 1) for i in range(1, N)]
    f = [elementary(N, i + 1, i) for i in range(1, N)]
    return _with_h("A", n, N - 1, N, e, f, _chain_cartan(N - 1))


def chevalley_C(n) -> ChevalleySystem:
    """sp_2n; node n is the long root E_{n+1,1}, tied to node 1."""
    if n < 3:
        raise ValueError("family C needs n >= 3")
    N = 2 * n
    e, f = [], []
    for i in range(1, n):
        x, y = _chain_pair(n, i)
        e.append(x)
        f.append(y)
    e.append(elementary(N, n + 1, 1))
    f.append(elementary(N, 1, n + 1))
    A = _chain_cartan(n)
    A[n - 1][n - 2] = A[n - 2][n - 1] = 0  # node n is not chained to n-1
    A[n - 1][0] = -1
    A[0][n - 1] = -2
    return _with_h("C", n, n, N, e, f, A)


def _split_orthogonal_system(n) -> ChevalleySystem:
    """so_2n on the split symmetric form; node n is tied to node 2.

    Valid for n >= 3; at n = 3 the diagram degenerates to the linear chain
    (so_6), which is what the rank-3 orthogonal block constructions use.
    """
    assert n >= 3
    N = 2 * n
    e, f = [], []
    for i in range(1, n):
        x, y = _chain_pair(n, i)
        e.append(x)
        f.append(y)
    e.append(elementary(N, n + 1, 2) - elementary(N, n + 2, 1))
    f.append(elementary(N, 2, n + 1) - elementary(N, 1, n + 2))
    A = _chain_cartan(n)
    A[n - 1][n - 2] = A[n - 2][n - 1] = 0
    A[n - 1][1] = A[1][n - 1] = -1
    return _with_h("D", n, n, N, e, f, A)


def chevalley_D(n) -> ChevalleySystem:
    """so_2n; requires n >= 4 (rank 3 is the degenerate linear diagram)."""
    if n < 4:
        raise ValueError("family D needs n >= 4")
    return _split_orthogonal_system(n)


def lowest_root_vectors_A(sys: ChevalleySystem, a):
    """Corner root vectors of sl_2n built by the nested bracket chains.

    e_corner = a * [f_{2n-1}, [... [f_2, f_1] ...]] and
    f_corner = a^-1 * [[... [e_1, e_2] ...], e_{2n-1}].
    """
    assert sys.family == "A"
    a = rat(a)
    if a == 0:
        raise ValueError("corner parameter a must be nonzero")
    u = sys.f[0]
    for i in range(1, sys.rank):
        u = bracket(sys.f[i], u)
    e_corner = a * u
    v = sys.e[0]
    for i in range(1, sys.rank):
        v = bracket(v, sys.e[i])
    f_corner = (1 / a) * v
    return e_corner, f_corner


def defining_form(family, n) -> RatMatrix:
    """The bilinear form preserved by the C/D realizations: X^T J + J X = 0.

    Family C gets the antisymmetric [[0, I], [-I, 0]]; family D the
    symmetric [[0, I], [I, 0]].
    """
    if family not in ("C", "D"):
        raise ValueError("defining_form exists for families C and D")
    s = 1 if family == "D" else -1
    rows = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        rows[i][n + i] = 1
        rows[n + i][i] = s
    return RatMatrix(rows)


def composite_EF_C(sys: ChevalleySystem):
    """Symplectic composite pair E = [f_{n-1},...[f_1,f_n]...],
    F = [...[e_n,e_1],...,e_{n-1}]; [E, F] = -(2h_n + h_1 + ... + h_{n-1})."""
    if sys.family != "C":
        raise ValueError("composite_EF_C needs a family C system")
    n = sys.rank
    E = bracket(sys.f[0], sys.f[n - 1])
    for i in range(1, n - 1):
        E = bracket(sys.f[i], E)
    F = bracket(sys.e[n - 1], sys.e[0])
    for i in range(1, n - 1):
        F = bracket(F, sys.e[i])
    return E, F


def composite_EF_D(sys: ChevalleySystem):
    """Orthogonal composite pair; the chains omit node 1:
    E = [f_{n-1},...[f_2,f_n]...], F = [...[e_n,e_2],...,e_{n-1}]."""
    if sys.family != "D":
        raise ValueError("composite_EF_D needs a family D system")
    n = sys.rank
    E = bracket(sys.f[1], sys.f[n - 1])
    for i in range(2, n - 1):
        E = bracket(sys.f[i], E)
    F = bracket(sys.e[n - 1], sys.e[1])
    for i in range(2, n - 1):
        F = bracket(F, sys.e[i])
    return E, F
