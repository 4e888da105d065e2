"""Evaluation homomorphisms from the corner GIM algebra into gl-type targets.

psi_a sends the n generators of the corner GIM algebra into sl_2n:

  X_i = E_{i,i+1} - E_{n+i+1,n+i},   Y_i = E_{i+1,i} - E_{n+i,n+i+1}   (i < n)
  X_n = E_{n,n+1} + a^-1 E_{1,2n},   Y_n = E_{n+1,n} + a E_{2n,1}

with a nonzero rational parameter a.  The "minus" variant negates the two
corner terms; it coincides with the plus variant at parameter -a.

psi_tuple stacks several psi_a copies block-diagonally.  psi_big builds the
four block patterns used in the image classification, where leading blocks
are replaced by symplectic or orthogonal embeddings built from composite
root vectors:

  case 1: every block is a corner embedding into sl_2n (all a_k != +-1)
  case 2: a_1 = 1, symplectic first block, corner blocks after
  case 3: a_1 = -1, orthogonal first block, corner blocks after
  case 4: a_1 = -1, a_2 = 1, orthogonal then symplectic then corner blocks

Each classical block is described by extended generator lists indexed by
the 2n chain positions, with zeros at positions n+1..2n-1 and a composite
pair at position 2n; the uniform formula

  X_i = sum over blocks of (e-slot i  minus  f-slot n+i)

then reproduces the individual single-block maps exactly.  A corner block
with parameter a gives the minus variant of psi_a; lemma21_images keeps
that convention, so lemma21_images(n, a) equals psi_a(n, a, "minus").
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chevalley import (ChevalleySystem, _split_orthogonal_system, chevalley_A,
                        chevalley_C, chevalley_D, composite_EF_C,
                        composite_EF_D, lowest_root_vectors_A, elementary)
from .exact import RatMatrix, format_rational, rat
from .gim import GeneratorImages


def _check_a(a) -> Fraction:
    a = rat(a)
    if a == 0:
        raise ValueError("evaluation parameter a must be nonzero")
    return a


@dataclass(frozen=True)
class EvalParams:
    """A tuple of evaluation points with the corner sign variant.

    Entries must be nonzero rationals; degenerate interactions between
    entries (equal or mutually inverse points) are reported as warnings by
    the maps that consume the tuple, not rejected here.
    """

    n: int
    a_tuple: tuple
    sign_variant: str

    def __init__(self, n, a_tuple, sign_variant="plus"):
        n = int(n)
        if n < 3:
            raise ValueError("need n >= 3")
        if sign_variant not in ("plus", "minus"):
            raise ValueError("sign_variant must be 'plus' or 'minus'")
        vals = tuple(_check_a(a) for a in a_tuple)
        if not vals:
            raise ValueError("need at least one evaluation point")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "a_tuple", vals)
        object.__setattr__(self, "sign_variant", sign_variant)

    def to_json_dict(self):
        return {"n": self.n,
                "a_tuple": [format_rational(a) for a in self.a_tuple],
                "sign_variant": self.sign_variant}

    @classmethod
    def from_json_dict(cls, d):
        return cls(d["n"], d["a_tuple"], d.get("sign_variant", "plus"))


@dataclass(frozen=True)
class CaseConfig:
    """Block pattern selector for psi_big.

    The case forces a prefix of the tuple: case 2 needs a_1 = 1, case 3
    needs a_1 = -1, case 4 needs (a_1, a_2) = (-1, 1).  All remaining
    entries must avoid +-1, and entries must be pairwise distinct and
    pairwise non-inverse.  Violations raise ValueError naming the
    constraint.
    """

    n: int
    case_id: int
    K: int
    a_tuple: tuple

    def __init__(self, n, case_id, a_tuple):
        n = int(n)
        case_id = int(case_id)
        if case_id not in (1, 2, 3, 4):
            raise ValueError("case_id must be 1, 2, 3, or 4")
        if n < 3:
            raise ValueError("need n >= 3")
        vals = tuple(_check_a(a) for a in a_tuple)
        if not vals:
            raise ValueError("need at least one evaluation point")
        forced = {1: (), 2: (Fraction(1),), 3: (Fraction(-1),),
                  4: (Fraction(-1), Fraction(1))}[case_id]
        if len(vals) < max(len(forced), 1):
            raise ValueError("tuple too short for case %d" % case_id)
        if vals[:len(forced)] != forced:
            raise ValueError("case %d forces the tuple to start with (%s)"
                             % (case_id, ", ".join(str(x) for x in forced)))
        for a in vals[len(forced):]:
            if a == 1 or a == -1:
                raise ValueError("entries after the forced prefix must avoid +-1")
        for k in range(len(vals)):
            for j in range(k + 1, len(vals)):
                if vals[k] == vals[j]:
                    raise ValueError("evaluation points must be pairwise distinct")
                if vals[k] * vals[j] == 1:
                    raise ValueError("evaluation points must be pairwise non-inverse")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "case_id", case_id)
        object.__setattr__(self, "K", len(vals))
        object.__setattr__(self, "a_tuple", vals)

    def to_json_dict(self):
        return {"n": self.n, "case_id": self.case_id, "K": self.K,
                "a_tuple": [format_rational(a) for a in self.a_tuple]}

    @classmethod
    def from_json_dict(cls, d):
        return cls(d["n"], d["case_id"], d["a_tuple"])


def psi_a(n, a, sign_variant="plus") -> GeneratorImages:
    """The corner embedding into sl_2n at evaluation point a."""
    if n < 3:
        raise ValueError("need n >= 3")
    if sign_variant not in ("plus", "minus"):
        raise ValueError("sign_variant must be 'plus' or 'minus'")
    a = _check_a(a)
    sgn = 1 if sign_variant == "plus" else -1
    N = 2 * n
    X, Y = [], []
    for i in range(1, n):
        X.append(elementary(N, i, i + 1) - elementary(N, n + i + 1, n + i))
        Y.append(elementary(N, i + 1, i) - elementary(N, n + i, n + i + 1))
    X.append(elementary(N, n, n + 1) + (sgn / a) * elementary(N, 1, N))
    Y.append(elementary(N, n + 1, n) + (sgn * a) * elementary(N, N, 1))
    warnings = []
    if a == 1:
        warnings.append("a = 1: the image is the symplectic subalgebra sp_%d" % N)
    elif a == -1:
        warnings.append("a = -1: the image is the orthogonal subalgebra so_%d" % N)
    return GeneratorImages(X, Y, warnings)


def _tuple_warnings(vals):
    notes = []
    for k in range(len(vals)):
        for j in range(k + 1, len(vals)):
            if vals[k] == vals[j]:
                notes.append("blocks %d and %d share the evaluation point %s"
                             % (k + 1, j + 1, vals[k]))
            if vals[k] * vals[j] == 1:
                notes.append("blocks %d and %d have mutually inverse points"
                             % (k + 1, j + 1))
    return notes


def psi_tuple(n, params: EvalParams) -> GeneratorImages:
    """Block-diagonal stack of corner embeddings, one per evaluation point."""
    if n != params.n:
        raise ValueError("rank argument disagrees with params.n")
    blocks = [psi_a(n, a, params.sign_variant) for a in params.a_tuple]
    warnings = []
    for b in blocks:
        warnings.extend(b.warnings)
    warnings.extend(_tuple_warnings(params.a_tuple))
    X = [RatMatrix.block_diag([b.X[i] for b in blocks]) for i in range(n)]
    Y = [RatMatrix.block_diag([b.Y[i] for b in blocks]) for i in range(n)]
    return GeneratorImages(X, Y, warnings)


def _extended_slots(n, sys: ChevalleySystem, a=None):
    """Length-2n e/f slot lists for one block of the big map.

    For a corner block (family A) the slots are the 2n-1 chain generators
    plus the composite corner pair at parameter a.  For the symplectic and
    orthogonal blocks positions n+1..2n-1 are zero and position 2n carries
    the twisted composite pair f_n - F, e_n - E.
    """
    N = 2 * n
    if sys.family == "A":
        ce, cf = lowest_root_vectors_A(sys, a)
        return list(sys.e) + [ce], list(sys.f) + [cf]
    if sys.family == "C":
        E, F = composite_EF_C(sys)
    else:
        E, F = composite_EF_D(sys)
    z = RatMatrix.zeros(N)
    e_slots = list(sys.e) + [z] * (n - 1) + [sys.f[n - 1] - F]
    f_slots = list(sys.f) + [z] * (n - 1) + [sys.e[n - 1] - E]
    return e_slots, f_slots


def _block_system(n, a):
    if a == 1:
        return chevalley_C(n)
    if a == -1:
        return _split_orthogonal_system(n)
    return chevalley_A(n)


def psi_big(config: CaseConfig) -> GeneratorImages:
    """The case-patterned block map; CaseConfig has already validated it."""
    n = config.n
    slot_pairs = []
    for a in config.a_tuple:
        sys = _block_system(n, a)
        slot_pairs.append(_extended_slots(n, sys, a if sys.family == "A" else None))
    X, Y = [], []
    for i in range(1, n + 1):
        X.append(RatMatrix.block_diag(
            [es[i - 1] - fs[n + i - 1] for es, fs in slot_pairs]))
        Y.append(RatMatrix.block_diag(
            [fs[i - 1] - es[n + i - 1] for es, fs in slot_pairs]))
    return GeneratorImages(X, Y)


def lemma21_images(n, a) -> GeneratorImages:
    """The corner embedding built from chain and composite root vectors:
    X_i = e slot i minus f slot n+i inside sl_2n."""
    a = _check_a(a)
    sys = chevalley_A(n)
    ce, cf = lowest_root_vectors_A(sys, a)
    es = list(sys.e) + [ce]
    fs = list(sys.f) + [cf]
    X = [es[i - 1] - fs[n + i - 1] for i in range(1, n + 1)]
    Y = [fs[i - 1] - es[n + i - 1] for i in range(1, n + 1)]
    warnings = []
    if a == 1 or a == -1:
        warnings.append("a = %s violates the corner hypothesis a != +-1; "
                        "the image degenerates to a classical subalgebra" % a)
    return GeneratorImages(X, Y, warnings)


def lemma22_images(n) -> GeneratorImages:
    """Generators sent into sp_2n: chain generators plus the composite
    pair E, F at the corner node."""
    sys = chevalley_C(n)
    E, F = composite_EF_C(sys)
    X = list(sys.e[:n - 1]) + [E]
    Y = list(sys.f[:n - 1]) + [F]
    return GeneratorImages(X, Y)


def lemma23_images(n) -> GeneratorImages:
    """Generators sent into so_2n (n >= 4): chain generators plus the
    orthogonal composite pair."""
    sys = chevalley_D(n)
    E, F = composite_EF_D(sys)
    X = list(sys.e[:n - 1]) + [E]
    Y = list(sys.f[:n - 1]) + [F]
    return GeneratorImages(X, Y)


def mu_separator(a) -> Fraction:
    """mu(a) = 2 + a + a^-1; mu(a) = mu(b) iff b is a or 1/a."""
    a = _check_a(a)
    return 2 + a + 1 / a


_ADMISSIBLE_MODES = ("lemma51", "lemma52", "lemma53", "lemma54")


def tuple_admissible(params, mode) -> bool:
    """Whether a tuple of evaluation points fits one of the four patterns.

    lemma51: all entries avoid +-1.
    lemma52: a_1 = 1 and later entries avoid -1.
    lemma53: a_1 = -1, a_2 = 1.
    lemma54: a_1 = -1 and later entries avoid 1.
    All modes require nonzero entries, pairwise distinct and pairwise
    non-inverse.  ``params`` is an EvalParams or a bare sequence.
    """
    if mode not in _ADMISSIBLE_MODES:
        raise ValueError("mode must be one of %s" % (_ADMISSIBLE_MODES,))
    if isinstance(params, EvalParams):
        a_tuple = params.a_tuple
    else:
        a_tuple = params
    try:
        vals = tuple(rat(a) for a in a_tuple)
    except (ValueError, TypeError):
        return False
    if not vals or any(a == 0 for a in vals):
        return False
    for k in range(len(vals)):
        for j in range(k + 1, len(vals)):
            if vals[k] == vals[j] or vals[k] * vals[j] == 1:
                return False
    one = Fraction(1)
    if mode == "lemma51":
        return all(a != one and a != -one for a in vals)
    if mode == "lemma52":
        return vals[0] == one and all(a != -one for a in vals[1:])
    if mode == "lemma53":
        return len(vals) >= 2 and vals[0] == -one and vals[1] == one
    return vals[0] == -one and all(a != one for a in vals[1:])
