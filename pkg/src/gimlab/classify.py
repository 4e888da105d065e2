"""Isomorphism-type classification of closure images inside gl_N.

A block image is fingerprinted by its dimension together with the space of
invariant bilinear forms on the natural representation, i.e. solutions B of
X^T B + B X = 0 over all X in the subalgebra:

  sl_2n:  dimension 4n^2-1, no invariant form
  sp_2n:  dimension 2n^2+n, one antisymmetric form
  so_2n:  dimension 2n^2-n, one symmetric form

Anything else is reported UNKNOWN.  classify_image projects a closure of
block-diagonal images to its 2n x 2n blocks, classifies each, merges
mutually inverse evaluation points into single diagonal copies, and checks
the resulting signature against the total dimension; the Killing form of
the whole closure certifies semisimplicity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .evalmaps import EvalParams
from .exact import (RatMatrix, _EchelonBuilder, format_rational, kernel_basis)
from .lie import SubalgebraBasis, killing_nondegenerate


def invariant_forms(s: SubalgebraBasis):
    """Solution space of X^T B + B X = 0 over all X in s.

    Returns (dim, basis) where every basis matrix is either symmetric or
    antisymmetric (the space is transpose-invariant, so it splits).
    """
    N = s.ambient_size
    D = s.dimension
    eye = np.eye(N, dtype=np.int64)
    rows = []
    for i in range(D):
        num, _den = s.basis.row_num_den(i)
        XT = num.reshape(N, N).T
        if XT.dtype == object:
            M = np.kron(XT, eye.astype(object)) + np.kron(eye.astype(object), XT)
        else:
            M = np.kron(XT, eye) + np.kron(eye, XT)
        rows.append(M)
    if rows:
        big = any(r.dtype == object for r in rows)
        if big:
            rows = [r.astype(object) if r.dtype != object else r for r in rows]
        stacked = np.vstack(rows)
    else:
        stacked = np.zeros((0, N * N), dtype=np.int64)
    ker = kernel_basis(RatMatrix.from_num_den(stacked))
    dim = len(ker)
    builder = _EchelonBuilder(N * N)
    out = []
    for v in ker:
        B = RatMatrix([v[i * N:(i + 1) * N] for i in range(N)])
        for C in (B + B.transpose(), B - B.transpose()):
            if C.is_zero():
                continue
            num, _den = C.flat_num_den()
            if builder.insert_vector(num):
                out.append(C)
    assert len(out) == dim, "symmetry split lost solutions"
    return dim, out


def form_symmetry(B: RatMatrix) -> str:
    if B == B.transpose():
        return "symmetric"
    if B == -B.transpose():
        return "antisymmetric"
    return "none"


@dataclass(frozen=True)
class BlockVerdict:
    block_index: int
    dimension: int
    invariant_form_space_dim: int
    form_symmetry: str
    verdict: str

    def to_json_dict(self):
        return {"block_index": self.block_index,
                "dimension": self.dimension,
                "invariant_form_space_dim": self.invariant_form_space_dim,
                "form_symmetry": self.form_symmetry,
                "verdict": self.verdict}


def classify_block(s: SubalgebraBasis, n, block_index=0) -> BlockVerdict:
    """Fingerprint one 2n x 2n block; UNKNOWN if no table row matches."""
    if s.ambient_size != 2 * n:
        raise ValueError("block must live in gl_2n")
    d = s.dimension
    fd, basis = invariant_forms(s)
    sym = form_symmetry(basis[0]) if fd == 1 else "none"
    if d == 4 * n * n - 1 and fd == 0:
        verdict = "SL"
    elif d == 2 * n * n + n and fd == 1 and sym == "antisymmetric":
        verdict = "SP"
    elif d == 2 * n * n - n and fd == 1 and sym == "symmetric":
        verdict = "SO"
    else:
        verdict = "UNKNOWN"
    return BlockVerdict(block_index, d, fd, sym, verdict)


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    total_dimension: int
    blocks: tuple
    pairings: tuple
    signature: tuple
    semisimple: bool
    a_tuple: tuple
    inconsistencies: tuple

    def to_json_dict(self):
        return {
            "n": self.n,
            "total_dimension": self.total_dimension,
            "blocks": [b.to_json_dict() for b in self.blocks],
            "pairings": [list(p) for p in self.pairings],
            "signature": list(self.signature),
            "semisimple": self.semisimple,
            "a_tuple": [format_rational(a) for a in self.a_tuple],
            "inconsistencies": list(self.inconsistencies),
        }


def _block_subalgebra(closure: SubalgebraBasis, N, k, gens):
    builder = _EchelonBuilder(N * N)
    total = closure.ambient_size
    for i in range(closure.dimension):
        num, _den = closure.basis.row_num_den(i)
        blk = num.reshape(total, total)[k * N:(k + 1) * N, k * N:(k + 1) * N]
        builder.insert_vector(np.ascontiguousarray(blk).reshape(-1))
    return SubalgebraBasis(N, builder.snapshot(), gens)


def classify_image(closure: SubalgebraBasis, params: EvalParams) -> ClassificationReport:
    """Classify a closure of block-diagonal images against its point tuple."""
    n = params.n
    N = 2 * n
    K = len(params.a_tuple)
    if closure.ambient_size != N * K:
        raise ValueError("closure ambient size %d does not match 2nK = %d"
                         % (closure.ambient_size, N * K))
    # the projection argument needs honest block-diagonal input
    mask = np.ones((N * K, N * K), dtype=bool)
    for k in range(K):
        mask[k * N:(k + 1) * N, k * N:(k + 1) * N] = False
    for i in range(closure.dimension):
        num, _den = closure.basis.row_num_den(i)
        if (num.reshape(N * K, N * K)[mask] != 0).any():
            raise ValueError("closure contains non-block-diagonal elements")

    blocks = []
    for k in range(K):
        gens = []
        for g in closure.generators:
            sub = np.ascontiguousarray(
                g.num[k * N:(k + 1) * N, k * N:(k + 1) * N])
            gens.append(RatMatrix.from_num_den(sub, g.den))
        blocks.append(classify_block(_block_subalgebra(closure, N, k, gens),
                                     n, block_index=k + 1))

    vals = params.a_tuple
    pairings = []
    for k in range(K):
        for j in range(k + 1, K):
            if vals[k] * vals[j] == 1 and vals[k] != 1 and vals[k] != -1:
                pairings.append((k + 1, j + 1))

    inconsistencies = []
    for k in range(K):
        for j in range(k + 1, K):
            if vals[k] == vals[j]:
                inconsistencies.append(
                    "points %d and %d coincide; their blocks are equal"
                    % (k + 1, j + 1))
    paired = {i for p in pairings for i in p}
    for b in blocks:
        if b.verdict == "UNKNOWN":
            inconsistencies.append("block %d is UNKNOWN" % b.block_index)
        if b.block_index in paired and b.verdict != "SL":
            inconsistencies.append(
                "block %d is in an inverse pairing but classified %s"
                % (b.block_index, b.verdict))

    sl = sum(1 for b in blocks if b.verdict == "SL")
    sp = sum(1 for b in blocks if b.verdict == "SP")
    so = sum(1 for b in blocks if b.verdict == "SO")
    a_count = sl - len(pairings)
    signature = (a_count, sp, so)
    if sp > 1:
        inconsistencies.append("more than one symplectic copy")
    if so > 1:
        inconsistencies.append("more than one orthogonal copy")
    if a_count < 0:
        inconsistencies.append("more pairings than sl blocks")
    if signature == (0, 0, 0):
        inconsistencies.append("signature is all zero; the type excludes the "
                               "trivial algebra")
    total = closure.dimension
    expected = (a_count * (4 * n * n - 1) + sp * (2 * n * n + n)
                + so * (2 * n * n - n))
    if total != expected:
        inconsistencies.append(
            "total dimension %d does not match the signature formula %d"
            % (total, expected))

    return ClassificationReport(
        n=n, total_dimension=total, blocks=tuple(blocks),
        pairings=tuple(pairings), signature=signature,
        semisimple=killing_nondegenerate(closure), a_tuple=vals,
        inconsistencies=tuple(inconsistencies))


def report_markdown(report: ClassificationReport) -> str:
    """GitHub-flavored table, one row per block, plus the summary lines."""
    lines = ["| block | point | dim | form dim | symmetry | verdict |",
             "|---|---|---|---|---|---|"]
    for b, a in zip(report.blocks, report.a_tuple):
        lines.append("| %d | %s | %d | %d | %s | %s |"
                     % (b.block_index, format_rational(a), b.dimension,
                        b.invariant_form_space_dim, b.form_symmetry, b.verdict))
    lines.append("")
    lines.append("- signature (sl, sp, so): (%d, %d, %d)" % report.signature)
    lines.append("- total dimension: %d" % report.total_dimension)
    if report.pairings:
        lines.append("- inverse pairings: %s"
                     % ", ".join("(%d, %d)" % p for p in report.pairings))
    lines.append("- semisimple: %s" % ("yes" if report.semisimple else "no"))
    for note in report.inconsistencies:
        lines.append("- inconsistency: %s" % note)
    return "\n".join(lines) + "\n"
