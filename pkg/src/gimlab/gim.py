"""Generalized intersection matrices and the defining relations.

A GIM is a square integer matrix with 2 on the diagonal whose off-diagonal
entries agree in sign across the diagonal: m_ij < 0 iff m_ji < 0 and
m_ij > 0 iff m_ji > 0.  The algebra attached to M has generators
e_i, f_i, h_i subject to

  R1:  [h_i, e_j] = m_ij e_j,  [h_i, f_j] = -m_ij f_j,  [e_i, f_i] = h_i
  R2:  for i != j with m_ij <= 0:
         [e_i, f_j] = 0 = [f_i, e_j],
         (ad e_i)^(1-m_ij) e_j = 0 = (ad f_i)^(1-m_ij) f_j
  R3:  for i != j with m_ij > 0:
         [e_i, e_j] = 0 = [f_i, f_j],
         (ad e_i)^(m_ij+1) f_j = 0 = (ad f_i)^(m_ij+1) e_j

check_gim_relations verifies all of these for a concrete assignment of the
generators.  The checker core is parameterized over the bracket so the same
code validates matrix images and loop-algebra images.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import lie
from .exact import RatMatrix, format_rational


def is_gim(entries) -> bool:
    """Whether an integer grid satisfies the GIM conditions."""
    rows = [list(r) for r in entries]
    k = len(rows)
    if k == 0 or any(len(r) != k for r in rows):
        return False
    for r in rows:
        for x in r:
            if not isinstance(x, int) or isinstance(x, bool):
                return False
    for i in range(k):
        if rows[i][i] != 2:
            return False
        for j in range(k):
            if i == j:
                continue
            if (rows[i][j] < 0) != (rows[j][i] < 0):
                return False
            if (rows[i][j] > 0) != (rows[j][i] > 0):
                return False
    return True


@dataclass(frozen=True)
class GimMatrix:
    """Validated GIM; raises ValueError if the defining conditions fail."""

    entries: tuple

    def __init__(self, entries):
        entries = tuple(tuple(int(x) for x in row) for row in entries)
        if not is_gim(entries):
            raise ValueError("not a GIM: need square integer entries, "
                             "2 on the diagonal, and matching off-diagonal signs")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self):
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij  # 1-based, matching m_ij in the relations
        return self.entries[i - 1][j - 1]

    def to_json_dict(self):
        return {"n": self.n, "entries": [list(r) for r in self.entries]}

    @classmethod
    def from_json_dict(cls, d):
        return cls(d["entries"])


def gim_matrix_mn(n) -> GimMatrix:
    """The tridiagonal GIM with -1 off the diagonal and +1 corners; n >= 3."""
    if n < 3:
        raise ValueError("the corner GIM family starts at n = 3")
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 2
        if i + 1 < n:
            rows[i][i + 1] = rows[i + 1][i] = -1
    rows[0][n - 1] = rows[n - 1][0] = 1
    return GimMatrix(rows)


class GeneratorImages:
    """Concrete images of the generators e_i, f_i under a homomorphism.

    h_i is always derived as [X_i, Y_i].  ``warnings`` carries advisory
    notes from the construction (degenerate parameter choices and the
    like); they never block the checker.
    """

    __slots__ = ("n", "ambient_size", "X", "Y", "H", "warnings")

    def __init__(self, X, Y, warnings=()):
        X = tuple(X)
        Y = tuple(Y)
        if len(X) != len(Y) or not X:
            raise ValueError("need matching nonempty generator lists")
        sizes = {m.num.shape for m in X} | {m.num.shape for m in Y}
        if len(sizes) != 1:
            raise ValueError("generator images live in different ambient sizes")
        (shape,) = sizes
        if shape[0] != shape[1]:
            raise ValueError("generator images must be square")
        self.n = len(X)
        self.ambient_size = shape[0]
        self.X = X
        self.Y = Y
        self.H = tuple(lie.bracket(x, y) for x, y in zip(X, Y))
        self.warnings = tuple(warnings)

    def all_images(self):
        return list(self.X) + list(self.Y)


@dataclass(frozen=True)
class RelationFailure:
    relation: str
    i: int
    j: int
    residual: object


@dataclass(frozen=True)
class RelationReport:
    passed: bool
    checked: int
    failures: tuple

    def to_json_dict(self):
        return {
            "passed": self.passed,
            "checked": self.checked,
            "failures": [
                {"relation": fl.relation, "i": fl.i, "j": fl.j,
                 "residual": _residual_json(fl.residual)}
                for fl in self.failures
            ],
        }


def _residual_json(r):
    if hasattr(r, "to_json_dict"):
        return r.to_json_dict()
    return [[format_rational(x) for x in row] for row in r.to_fraction_rows()]


def check_relations_core(m: GimMatrix, X, Y, H, br) -> RelationReport:
    """Verify R1, R2, R3 for images under an arbitrary bracket.

    X, Y, H are 0-indexed sequences; failures are reported with 1-based
    generator indices in a fixed deterministic order.
    """
    n = m.n
    failures = []
    checked = 0

    def ad_pow(x, k, y):
        for _ in range(k):
            y = br(x, y)
        return y

    def record(tag, i, j, res):
        nonlocal checked
        checked += 1
        if not res.is_zero():
            failures.append(RelationFailure(tag, i + 1, j + 1, res))

    for i in range(n):
        for j in range(n):
            mij = m.entries[i][j]
            record("R1-he", i, j, br(H[i], X[j]) - mij * X[j])
            record("R1-hf", i, j, br(H[i], Y[j]) + mij * Y[j])
    for i in range(n):
        record("R1-ef", i, i, br(X[i], Y[i]) - H[i])

    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            mij = m.entries[i][j]
            if mij <= 0:
                record("R2-ef", i, j, br(X[i], Y[j]))
                record("R2-fe", i, j, br(Y[i], X[j]))
                record("R2-adee", i, j, ad_pow(X[i], 1 - mij, X[j]))
                record("R2-adff", i, j, ad_pow(Y[i], 1 - mij, Y[j]))
            else:
                record("R3-ee", i, j, br(X[i], X[j]))
                record("R3-ff", i, j, br(Y[i], Y[j]))
                record("R3-adef", i, j, ad_pow(X[i], mij + 1, Y[j]))
                record("R3-adfe", i, j, ad_pow(Y[i], mij + 1, X[j]))

    return RelationReport(not failures, checked, tuple(failures))


def check_gim_relations(m: GimMatrix, images: GeneratorImages) -> RelationReport:
    """Verify the defining relations for matrix images of the generators."""
    if images.n != m.n:
        raise ValueError("generator count does not match the GIM size")
    return check_relations_core(m, images.X, images.Y, images.H, lie.bracket)
