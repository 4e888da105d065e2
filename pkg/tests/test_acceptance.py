"""End-to-end acceptance gate.

One test per numbered criterion, zero tolerance: every comparison is an
exact equality over the rationals.  Each test prints a single CRITERION
line on success; a failed criterion shows up as the pytest failure line.
Criteria 1 and 4 also enforce wall-clock budgets.
"""

import random
import time
from fractions import Fraction
from functools import lru_cache

from hypothesis import given, settings
from hypothesis import strategies as st

from gimlab import (CaseConfig, EvalParams, LoopElement, RatMatrix, bracket,
                    center, chevalley_A, check_gim_relations, classify_block,
                    classify_image, elementary, eval_quotient_map,
                    fixed_point_generators, gim_matrix_mn, killing_nondegenerate,
                    lemma21_images, lemma22_images, lemma23_images, lie_closure,
                    loop_bracket, lowest_root_vectors_A, make_quotient,
                    mu_separator, psi_a, psi_big, psi_tuple, rat, sigma,
                    tuple_admissible, xi_chain)
from gimlab.classify import _block_subalgebra

from conftest import fractions, loop_elements, traceless_matrices

CASES = {1: ("2", "3"), 2: ("1", "2"), 3: ("-1", "2"), 4: ("-1", "1", "2")}

TRICHOTOMY = {
    # a -> (dimension formula, form dim, symmetry, verdict)
    "2": (lambda n: 4 * n * n - 1, 0, "none", "SL"),
    "1": (lambda n: 2 * n * n + n, 1, "antisymmetric", "SP"),
    "-1": (lambda n: 2 * n * n - n, 1, "symmetric", "SO"),
}


@lru_cache(maxsize=None)
def _psi_closure(n, a_str, variant="plus"):
    im = psi_a(n, rat(a_str), variant)
    return im, lie_closure(im.all_images())


@lru_cache(maxsize=None)
def _case_data(n, cid):
    cfg = CaseConfig(n, cid, CASES[cid])
    im = psi_big(cfg)
    s = lie_closure(im.all_images())
    rep = classify_image(s, EvalParams(n, CASES[cid], "plus"))
    return im, s, rep


def test_criterion_01_trichotomy():
    budgets = {3: 10.0, 4: 120.0}
    elapsed = {}
    for n in (3, 4):
        t0 = time.monotonic()
        for a_str, (dim_of, fd, sym, verdict) in TRICHOTOMY.items():
            _, s = _psi_closure(n, a_str)
            v = classify_block(s, n, block_index=1)
            assert v.dimension == dim_of(n), (n, a_str)
            assert v.invariant_form_space_dim == fd, (n, a_str)
            assert v.form_symmetry == sym, (n, a_str)
            assert v.verdict == verdict, (n, a_str)
        elapsed[n] = time.monotonic() - t0
        assert elapsed[n] < budgets[n], "n=%d took %.1fs" % (n, elapsed[n])
    print("CRITERION 1 PASS (n=3: %.1fs, n=4: %.1fs)"
          % (elapsed[3], elapsed[4]))


def test_criterion_02_relation_suite():
    instances = 0
    for n in (3, 4):
        m = gim_matrix_mn(n)
        images = []
        for a in ("2", "3", "1/2", "1", "-1"):
            images.append(psi_a(n, rat(a)))
        images.append(lemma21_images(n, rat(2)))
        images.append(lemma22_images(n))
        if n >= 4:
            images.append(lemma23_images(n))
        if n == 3:
            for cid in (1, 2, 3, 4):
                images.append(psi_big(CaseConfig(n, cid, CASES[cid])))
        else:
            images.append(psi_big(CaseConfig(n, 4, CASES[4])))
        expected_checks = 2 * n * n + n + 4 * (n * n - n)
        for im in images:
            rep = check_gim_relations(m, im)
            assert rep.passed and rep.failures == ()
            assert rep.checked == expected_checks
            instances += 1
    print("CRITERION 2 PASS (%d homomorphisms, zero residuals)" % instances)


def test_criterion_03_corner_bracket():
    for n in (3, 4):
        sys = chevalley_A(n)
        total = sys.h[0]
        for h in sys.h[1:]:
            total = total + h
        for a in ("2", "5/2"):
            ce, cf = lowest_root_vectors_A(sys, rat(a))
            assert bracket(cf, ce) == total, (n, a)
    print("CRITERION 3 PASS (corner coroot = full chain sum, n = 3, 4)")


def test_criterion_04_case_images():
    expected = {1: (70, (2, 0, 0)), 2: (56, (1, 1, 0)),
                3: (50, (1, 0, 1)), 4: (71, (1, 1, 1))}
    times = {}
    for cid, (dim, sig) in expected.items():
        t0 = time.monotonic()
        _, s, rep = _case_data(3, cid)
        times[cid] = time.monotonic() - t0
        assert s.dimension == dim, cid
        assert rep.total_dimension == dim, cid
        assert rep.signature == sig, cid
        assert rep.inconsistencies == (), cid
        assert times[cid] < 60.0, "case %d took %.1fs" % (cid, times[cid])
    print("CRITERION 4 PASS (dims %s, worst case %.1fs)"
          % ([expected[c][0] for c in (1, 2, 3, 4)], max(times.values())))


def test_criterion_05_admissibility_sweep():
    rng = random.Random(20260819)
    pool = sorted({Fraction(p, q) for p in range(-6, 7) if p != 0
                   for q in range(1, 4)})
    admitted = rejected = 0
    for _ in range(1000):
        vals = [rng.choice(pool) for _ in range(rng.randint(1, 4))]
        ones = [v for v in vals if v == 1]
        negs = [v for v in vals if v == -1]
        rest = [v for v in vals if v != 1 and v != -1]
        canon = negs[:1] + ones[:1] + negs[1:] + ones[1:] + rest
        if ones and negs:
            mode = "lemma53"
        elif ones:
            mode = "lemma52"
        elif negs:
            mode = "lemma54"
        else:
            mode = "lemma51"
        mu_ok = True
        for i in range(len(canon)):
            for j in range(i + 1, len(canon)):
                a, b = canon[i], canon[j]
                collide = mu_separator(a) == mu_separator(b)
                # the separator collides exactly on equal or inverse pairs
                assert collide == ((a * b - 1) * (a - b) == 0)
                if collide:
                    mu_ok = False
        assert tuple_admissible(canon, mode) == mu_ok, (canon, mode)
        if mu_ok:
            admitted += 1
        else:
            rejected += 1
    assert admitted and rejected
    print("CRITERION 5 PASS (1000 tuples: %d admissible, %d rejected)"
          % (admitted, rejected))


def test_criterion_06_chain_intermediates():
    for n in (3, 4):
        N = 2 * n
        xi, (s1, s2, s3, s4) = xi_chain(n)
        top = elementary(N, 1, n + 1)
        assert s1 == LoopElement([(0, top), (-1, top)])
        assert s2 == LoopElement([(0, elementary(N, n, 1)
                                   - elementary(N, n + 1, N))])
        cor = elementary(N, n, n + 1) + elementary(N, 1, N)
        assert s3 == LoopElement([(0, cor), (-1, cor)])
        hn = elementary(N, n, n) - elementary(N, n + 1, n + 1)
        sh = elementary(N, 1, 1) - elementary(N, N, N)
        assert s4 == LoopElement([(-1, hn), (0, hn + sh), (1, sh)], central=-1)
        assert s4.central == -1
        assert xi == LoopElement([(-1, hn), (1, sh)]) and xi.central == 0
    print("CRITERION 6 PASS (four intermediates and the closing element, "
          "n = 3, 4)")


def _expand_roots(roots):
    poly = [Fraction(1)]
    for a in roots:
        out = [Fraction(0)] * (len(poly) + 1)
        for i, coef in enumerate(poly):
            out[i] += -a * coef
            out[i + 1] += coef
        poly = out
    return poly


def _divide_by_linear(poly, a):
    K = len(poly) - 1
    q = [Fraction(0)] * K
    acc = Fraction(0)
    for j in range(K - 1, -1, -1):
        acc = poly[j + 1] + a * acc
        q[j] = acc
    assert poly[0] + a * q[0] == 0, "not a root"
    return q


def test_criterion_07_partial_fractions():
    for roots in (("2", "1/2"), ("2", "3", "1/3", "1/2")):
        vals = tuple(Fraction(r) for r in roots)
        q = make_quotient(roots)
        # independent reconstruction of every constant
        theta = _expand_roots(vals)
        assert tuple(theta) == q.theta
        for i, ai in enumerate(vals):
            d = Fraction(1)
            for j, aj in enumerate(vals):
                if j != i:
                    d *= ai - aj
            assert q.d[i] == d
            assert q.c[i] == 1 / d
            assert q.c[i] * q.d[i] == 1
        # sum_i c_i theta(t)/(t - a_i) == 1, coefficient by coefficient
        acc = [Fraction(0)] * (len(theta) - 1)
        for i, ai in enumerate(vals):
            quot = _divide_by_linear(theta, ai)
            for j, coef in enumerate(quot):
                acc[j] += q.c[i] * coef
        assert acc[0] == 1 and all(x == 0 for x in acc[1:])
        # evaluation agrees with the block map on every generator
        params = EvalParams(3, roots, "plus")
        target = psi_tuple(3, params)
        pairs = fixed_point_generators(3, "plus")
        for i, (ep, fp) in enumerate(pairs):
            assert RatMatrix.block_diag(eval_quotient_map(ep, q)) == target.X[i]
            assert RatMatrix.block_diag(eval_quotient_map(fp, q)) == target.Y[i]
    print("CRITERION 7 PASS (partial fractions and evaluation, 2 and 4 roots)")


def _random_loop_element(rng, size=6, max_exp=3):
    terms = []
    for _ in range(rng.randint(1, 3)):
        exp = rng.randint(-max_exp, max_exp)
        rows = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                 for _ in range(size)] for _ in range(size)]
        tr = sum(rows[i][i] for i in range(size))
        rows[size - 1][size - 1] -= tr
        terms.append((exp, RatMatrix(rows)))
    return LoopElement(terms, 0, size)


def test_criterion_08_inverse_pair_quotient():
    q = make_quotient(("2", "1/2"))
    pairs = fixed_point_generators(3, "plus")
    gens = [g for p in pairs for g in p]
    mats = [RatMatrix.block_diag(eval_quotient_map(x, q)) for x in gens]
    s = lie_closure(mats, 12)
    assert s.dimension == 35
    proj = _block_subalgebra(s, 6, 0, ())
    assert proj.dimension == 35  # first projection is injective
    rng = random.Random(8128)
    for _ in range(100):
        x = _random_loop_element(rng)
        assert sigma(sigma(x)) == x
        direct = eval_quotient_map(x, q)
        flipped = eval_quotient_map(sigma(x), q)
        assert flipped[0] == direct[1] and flipped[1] == direct[0]
    print("CRITERION 8 PASS (dim 35, injective projection, involution on "
          "100 elements)")


def test_criterion_09_minus_variant_swap():
    swapped = {"2": "SL", "1": "SO", "-1": "SP"}
    for n in (3, 4):
        m = gim_matrix_mn(n)
        for a_str, verdict in swapped.items():
            im, s = _psi_closure(n, a_str, "minus")
            assert check_gim_relations(m, im).passed
            v = classify_block(s, n, block_index=1)
            assert v.verdict == verdict, (n, a_str)
            # the sl dimension is untouched; sp and so trade places
            plus = classify_block(_psi_closure(n, a_str)[1], n, block_index=1)
            if a_str == "2":
                assert v.dimension == plus.dimension
            else:
                partner = "-1" if a_str == "1" else "1"
                other = classify_block(_psi_closure(n, partner)[1], n,
                                       block_index=1)
                assert v.dimension == other.dimension
                assert v.form_symmetry == other.form_symmetry
    print("CRITERION 9 PASS (minus variant swaps SP and SO, n = 3, 4)")


def test_criterion_10_semisimplicity():
    checked = 0
    for n in (3, 4):
        for a_str in TRICHOTOMY:
            _, s = _psi_closure(n, a_str)
            assert killing_nondegenerate(s), (n, a_str)
            assert center(s) == [], (n, a_str)
            checked += 1
    for cid in (1, 2, 3, 4):
        _, s, _ = _case_data(3, cid)
        assert killing_nondegenerate(s), cid
        assert center(s) == [], cid
        checked += 1
    print("CRITERION 10 PASS (Killing form and center on %d images)" % checked)


def test_criterion_11_property_suites():
    runs = {"bracket": 0, "cocycle": 0, "closure": 0, "conjugation": 0}

    @settings(max_examples=200, deadline=None)
    @given(traceless_matrices(3), traceless_matrices(3), traceless_matrices(3))
    def bracket_suite(x, y, z):
        runs["bracket"] += 1
        assert bracket(x, y) == -1 * bracket(y, x)
        total = (bracket(x, bracket(y, z)) + bracket(y, bracket(z, x))
                 + bracket(z, bracket(x, y)))
        assert total.is_zero()

    @settings(max_examples=200, deadline=None)
    @given(loop_elements(), loop_elements(), loop_elements())
    def cocycle_suite(x, y, z):
        runs["cocycle"] += 1
        assert (loop_bracket(x, y) + loop_bracket(y, x)).is_zero()
        total = (loop_bracket(x, loop_bracket(y, z))
                 + loop_bracket(y, loop_bracket(z, x))
                 + loop_bracket(z, loop_bracket(x, y)))
        assert total.is_zero()

    @settings(max_examples=200, deadline=None)
    @given(st.lists(traceless_matrices(2), min_size=1, max_size=3),
           st.randoms())
    def closure_suite(gens, rnd):
        runs["closure"] += 1
        s = lie_closure(gens, 2)
        mats = []
        for i in range(s.dimension):
            num, den = s.basis.row_num_den(i)
            mats.append(RatMatrix.from_num_den(num.reshape(2, 2), den))
        again = lie_closure(mats, 2)
        assert again.dimension == s.dimension
        assert again.basis == s.basis
        shuffled = list(gens)
        rnd.shuffle(shuffled)
        assert lie_closure(shuffled, 2).basis == s.basis

    e12, e21 = elementary(2, 1, 2), elementary(2, 2, 1)
    eye = RatMatrix.identity(2)

    @settings(max_examples=200, deadline=None)
    @given(fractions(3, 2), fractions(3, 2), fractions(3, 2))
    def conjugation_suite(c1, c2, c3):
        runs["conjugation"] += 1
        g = (eye + c1 * e12) @ (eye + c2 * e21) @ (eye + c3 * e12)
        gi = (eye - c3 * e12) @ (eye - c2 * e21) @ (eye - c1 * e12)
        s = lie_closure([g @ x @ gi for x in (e12, e21)])
        v = classify_block(s, 1)
        assert (v.verdict, v.dimension, v.invariant_form_space_dim) \
            == ("SP", 3, 1)

    bracket_suite()
    cocycle_suite()
    closure_suite()
    conjugation_suite()
    assert all(count >= 200 for count in runs.values()), runs
    print("CRITERION 11 PASS (%s)"
          % ", ".join("%s: %d" % kv for kv in sorted(runs.items())))
