"""Loop algebra with central extension, fixed-point generators, quotients.

Elements are finite sums x_m (x) t^m plus a central coefficient, with
bracket

  [x (x) t^m, y (x) t^k] = [x, y] (x) t^{m+k} + m delta_{m,-k} tr(xy) c.

The trace form tr(xy) normalizes the cocycle so the derived h-hat at the
corner node carries central coefficient exactly -1.

fixed_point_generators builds the n hatted pairs

  e-hat_i = (E_{i,i+1} - E_{n+i+1,n+i}) (x) 1          (i < n)
  e-hat_n = E_{n,n+1} (x) 1 + E_{1,2n} (x) t^{-1}

(and mirrored f-hats); the minus variant negates the two t-power terms.
xi_chain executes the four-step bracket chain whose final element, minus
the derived corner h-hat, is Xi = H_n (x) t^{-1} + (H_1+...+H_{2n-1}) (x) t.

make_quotient encodes evaluation at distinct nonzero points a_1..a_K: with
theta*(t) = prod(t - a_i) the constants d_i = prod_{j!=i}(a_i - a_j) and
c_i = 1/d_i satisfy sum c_i theta*/(t - a_i) = 1, validated exactly, and
eval_quotient_map sends a loop element to its K evaluation images (central
coefficient to zero).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import lie
from .chevalley import elementary
from .exact import RatMatrix, format_rational, rat
from .gim import GimMatrix, RelationReport, check_relations_core


class LoopElement:
    """Finitely supported Laurent series with matrix coefficients plus c.

    ``terms`` is a sorted tuple of (exponent, RatMatrix) with zero
    coefficients dropped; every coefficient must be trace zero (the loop
    algebra sits over sl, and the cocycle formula relies on it).  ``size``
    is the common matrix size, or None for purely central elements.
    """

    __slots__ = ("terms", "central", "size")

    def __init__(self, terms=(), central=0, size=None):
        acc = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for m, mat in items:
            m = int(m)
            if not isinstance(mat, RatMatrix):
                raise TypeError("coefficients must be RatMatrix")
            acc[m] = acc[m] + mat if m in acc else mat
        for m, mat in list(acc.items()):
            if not mat.is_square():
                raise ValueError("coefficients must be square")
            if size is None:
                size = mat.rows
            elif mat.rows != size:
                raise ValueError("coefficients of mixed sizes")
            if mat.trace() != 0:
                raise ValueError("coefficients must be trace zero")
            if mat.is_zero():
                del acc[m]
        self.terms = tuple(sorted(acc.items()))
        self.central = rat(central)
        self.size = size

    def coefficient(self, m) -> RatMatrix:
        for k, mat in self.terms:
            if k == m:
                return mat
        if self.size is None:
            raise ValueError("element has no matrix part to size a zero from")
        return RatMatrix.zeros(self.size)

    def exponents(self):
        return tuple(m for m, _ in self.terms)

    def is_zero(self):
        return not self.terms and self.central == 0

    def _merge(self, other, sgn):
        if self.size is not None and other.size is not None \
                and self.size != other.size:
            raise ValueError("size mismatch")
        terms = dict(self.terms)
        for m, mat in other.terms:
            terms[m] = terms[m] + sgn * mat if m in terms else sgn * mat
        return LoopElement(terms, self.central + sgn * other.central,
                           self.size if self.size is not None else other.size)

    def __add__(self, other):
        if not isinstance(other, LoopElement):
            return NotImplemented
        return self._merge(other, 1)

    def __sub__(self, other):
        if not isinstance(other, LoopElement):
            return NotImplemented
        return self._merge(other, -1)

    def __neg__(self):
        return LoopElement([(m, -mat) for m, mat in self.terms],
                           -self.central, self.size)

    def __mul__(self, s):
        if isinstance(s, LoopElement):
            raise TypeError("use loop_bracket for the Lie product")
        s = rat(s)
        return LoopElement([(m, s * mat) for m, mat in self.terms],
                           s * self.central, self.size)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LoopElement):
            return NotImplemented
        return self.terms == other.terms and self.central == other.central

    def __hash__(self):
        return hash((self.terms, self.central))

    def __repr__(self):
        if self.is_zero():
            return "LoopElement<0>"
        bits = ["t^%d" % m for m, _ in self.terms]
        if self.central:
            bits.append("c")
        return "LoopElement<%s>" % " + ".join(bits)

    def to_json_dict(self):
        return {
            "terms": [{"exp": m,
                       "matrix": [[format_rational(x) for x in row]
                                  for row in mat.to_fraction_rows()]}
                      for m, mat in self.terms],
            "central": format_rational(self.central),
        }

    @classmethod
    def from_json_dict(cls, d):
        terms = [(t["exp"], RatMatrix(t["matrix"])) for t in d["terms"]]
        return cls(terms, d.get("central", 0))


def loop_bracket(x: LoopElement, y: LoopElement) -> LoopElement:
    """[x (x) t^m, y (x) t^k] = [x,y] (x) t^{m+k} + m delta_{m,-k} tr(xy) c."""
    if x.size is not None and y.size is not None and x.size != y.size:
        raise ValueError("size mismatch")
    acc = {}
    central = Fraction(0)
    for m, xm in x.terms:
        for k, yk in y.terms:
            com = lie.bracket(xm, yk)
            if not com.is_zero():
                e = m + k
                acc[e] = acc[e] + com if e in acc else com
            if m == -k:
                central += m * (xm @ yk).trace()
    size = x.size if x.size is not None else y.size
    return LoopElement(acc, central, size)


def fixed_point_generators(n, sign_variant="plus"):
    """The n hatted generator pairs (e-hat_i, f-hat_i) in the extended loop
    algebra over sl_2n."""
    if n < 3:
        raise ValueError("need n >= 3")
    if sign_variant not in ("plus", "minus"):
        raise ValueError("sign_variant must be 'plus' or 'minus'")
    sgn = 1 if sign_variant == "plus" else -1
    N = 2 * n
    pairs = []
    for i in range(1, n):
        e = LoopElement([(0, elementary(N, i, i + 1) - elementary(N, n + i + 1, n + i))])
        f = LoopElement([(0, elementary(N, i + 1, i) - elementary(N, n + i, n + i + 1))])
        pairs.append((e, f))
    e_n = LoopElement([(0, elementary(N, n, n + 1)),
                       (-1, sgn * elementary(N, 1, N))])
    f_n = LoopElement([(0, elementary(N, n + 1, n)),
                       (1, sgn * elementary(N, N, 1))])
    pairs.append((e_n, f_n))
    return pairs


def check_loop_relations(m: GimMatrix, pairs) -> RelationReport:
    """Verify the defining relations for hatted generator pairs."""
    if len(pairs) != m.n:
        raise ValueError("generator count does not match the GIM size")
    X = [p[0] for p in pairs]
    Y = [p[1] for p in pairs]
    H = [loop_bracket(x, y) for x, y in zip(X, Y)]
    return check_relations_core(m, X, Y, H, loop_bracket)


def xi_chain(n, sign_variant="plus"):
    """Execute the four-step bracket chain; returns (Xi, intermediates).

    The steps are: the e-hat chain down from the corner, the f-hat chain,
    their bracket, and its bracket with f-hat_n; Xi is the last step minus
    the derived corner h-hat.
    """
    pairs = fixed_point_generators(n, sign_variant)
    e = [p[0] for p in pairs]
    f = [p[1] for p in pairs]
    u = e[n - 1]
    for i in range(n - 2, -1, -1):
        u = loop_bracket(e[i], u)
    s1 = u
    v = f[n - 2]
    for i in range(n - 3, -1, -1):
        v = loop_bracket(v, f[i])
    s2 = v
    s3 = loop_bracket(s2, s1)
    s4 = loop_bracket(s3, f[n - 1])
    h_n = loop_bracket(e[n - 1], f[n - 1])
    xi = s4 - h_n
    return xi, [s1, s2, s3, s4]


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _poly_div_linear(p, a):
    """Divide p(t) by (t - a); p given low-degree-first.  Remainder must be 0."""
    K = len(p) - 1
    q = [Fraction(0)] * K
    q[K - 1] = p[K]
    for j in range(K - 2, -1, -1):
        q[j] = p[j + 1] + a * q[j + 1]
    r = p[0] + a * q[0]
    assert r == 0, "nonzero remainder: a is not a root"
    return q


@dataclass(frozen=True)
class QuotientSpec:
    """Evaluation data for theta*(t) = prod(t - a_i) with distinct nonzero
    roots: d_i = prod_{j != i}(a_i - a_j), c_i = 1/d_i."""

    roots: tuple
    c: tuple
    d: tuple
    theta: tuple  # coefficients, low degree first, monic

    def to_json_dict(self):
        return {"roots": [format_rational(a) for a in self.roots],
                "c": [format_rational(x) for x in self.c],
                "d": [format_rational(x) for x in self.d],
                "theta": [format_rational(x) for x in self.theta]}


def make_quotient(roots) -> QuotientSpec:
    """Build the partial-fraction constants and validate their identity."""
    vals = tuple(rat(a) for a in roots)
    if not vals:
        raise ValueError("need at least one root")
    if any(a == 0 for a in vals):
        raise ValueError("roots must be nonzero")
    if len(set(vals)) != len(vals):
        raise ValueError("roots must be distinct")
    theta = [Fraction(1)]
    for a in vals:
        theta = _poly_mul(theta, [-a, Fraction(1)])
    d = []
    for i, ai in enumerate(vals):
        prod = Fraction(1)
        for j, aj in enumerate(vals):
            if j != i:
                prod *= ai - aj
        d.append(prod)
    c = tuple(1 / x for x in d)
    # the defining identity, checked coefficient by coefficient
    acc = [Fraction(0)] * max(len(theta) - 1, 1)
    for i, ai in enumerate(vals):
        q = _poly_div_linear(theta, ai) if len(theta) > 1 else [Fraction(1)]
        for j, coef in enumerate(q):
            acc[j] += c[i] * coef
    assert acc[0] == 1 and all(x == 0 for x in acc[1:]), \
        "partial fraction identity failed"
    return QuotientSpec(vals, c, tuple(d), tuple(theta))


def eval_quotient_map(x: LoopElement, q: QuotientSpec):
    """Evaluate at each root: k-th output is sum_m a_k^m x_m; c goes to 0."""
    size = x.size if x.size is not None else 0
    out = []
    for a in q.roots:
        s = RatMatrix.zeros(size)
        for m, mat in x.terms:
            s = s + (a ** m) * mat
        out.append(s)
    return out


def sigma(x: LoopElement) -> LoopElement:
    """The exponent-flip involution x (x) t^m -> x (x) t^{-m}."""
    if x.central != 0:
        raise ValueError("sigma is defined on the centerless loop algebra")
    return LoopElement([(-m, mat) for m, mat in x.terms], 0, x.size)
