"""Batch verification front-end.

Subcommands build the named constructions, run the exact checks, and emit
deterministic JSON reports (sorted keys, rationals as "p/q" strings, no
timestamps), so identical inputs give byte-identical files.  `classify`
and `reproduce` additionally print GitHub-style markdown tables.

Closure bases can be cached on disk: pass --cache DIR or set GIMLAB_CACHE
(the environment variable wins).  Cache entries are keyed by a content
hash of the generators and ambient size; a hit restores the exact echelon
basis that recomputation would produce.

Exit status: 0 when every assertion passed, 1 when a check failed, 2 for
invalid invocations or job specs.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from fractions import Fraction

from . import chevalley, classify, evalmaps, gim, lie, loop
from .evalmaps import CaseConfig, EvalParams
from .exact import EchelonBasis, RatMatrix, format_rational, rat

CACHE_VERSION = 1

CASE_TUPLES = {1: ("2", "3"), 2: ("1", "2"), 3: ("-1", "2"), 4: ("-1", "1", "2")}


def _dump(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _fmt_tuple(vals) -> str:
    return "(" + ", ".join(format_rational(v) for v in vals) + ")"


# closure cache


def _closure_key(gens, ambient) -> str:
    blob = [CACHE_VERSION, int(ambient)]
    for g in gens:
        num, den = g.flat_num_den()
        blob.append([int(den), [int(x) for x in num]])
    raw = json.dumps(blob, separators=(",", ":")).encode("utf-8")
    return hashlib.sha256(raw).hexdigest()


def closure_with_cache(gens, ambient, cache_dir=None):
    if not cache_dir:
        return lie.lie_closure(gens, ambient)
    path = os.path.join(cache_dir, "closure-%s.json" % _closure_key(gens, ambient)[:32])
    if os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            d = json.load(fh)
        basis = EchelonBasis.from_json_dict(d["basis"])
        return lie.SubalgebraBasis(ambient, basis, tuple(gens))
    s = lie.lie_closure(gens, ambient)
    os.makedirs(cache_dir, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_dump({"version": CACHE_VERSION,
                        "ambient_size": ambient,
                        "dimension": s.dimension,
                        "basis": s.basis.to_json_dict()}))
    return s


# construction dispatch


def _build_images(target, n, a_vals, variant):
    """Images plus a short instance label for reports."""
    if target == "A":
        if len(a_vals) != 1:
            raise ValueError("target A needs exactly one --a value")
        return (evalmaps.lemma21_images(n, a_vals[0]),
                "chain+corner at a = %s" % format_rational(a_vals[0]))
    if target == "C":
        if a_vals:
            raise ValueError("target C takes no --a values")
        return evalmaps.lemma22_images(n), "symplectic composite pair"
    if target == "D":
        if a_vals:
            raise ValueError("target D takes no --a values")
        return evalmaps.lemma23_images(n), "orthogonal composite pair"
    if target in ("case1", "case2", "case3", "case4"):
        cid = int(target[-1])
        cfg = CaseConfig(n, cid, tuple(a_vals))
        return evalmaps.psi_big(cfg), "case %d at %s" % (cid, _fmt_tuple(a_vals))
    if target == "psi":
        if not a_vals:
            raise ValueError("target psi needs at least one --a value")
        if len(a_vals) == 1:
            return (evalmaps.psi_a(n, a_vals[0], variant),
                    "psi at a = %s" % format_rational(a_vals[0]))
        params = EvalParams(n, tuple(a_vals), variant)
        return (evalmaps.psi_tuple(n, params),
                "psi blocks at %s" % _fmt_tuple(a_vals))
    raise ValueError("unknown target %r" % (target,))


# command bodies: each returns (exit_code, payload, markdown-or-None)


def cmd_mn(n):
    m = gim.gim_matrix_mn(n)
    payload = m.to_json_dict()
    payload["command"] = "mn"
    payload["is_gim"] = gim.is_gim(m.entries)
    return 0, payload, None


def cmd_check_hom(target, n, a_vals, variant):
    images, label = _build_images(target, n, a_vals, variant)
    report = gim.check_gim_relations(gim.gim_matrix_mn(n), images)
    payload = {"command": "check-hom", "target": target, "n": n,
               "a": [format_rational(v) for v in a_vals],
               "variant": variant, "instance": label,
               "warnings": list(images.warnings)}
    payload.update(report.to_json_dict())
    return (0 if report.passed else 1), payload, None


def cmd_image(target, n, a_vals, variant, cache_dir):
    images, label = _build_images(target, n, a_vals, variant)
    s = closure_with_cache(images.all_images(), images.ambient_size, cache_dir)
    payload = {"command": "image", "target": target, "n": n,
               "a": [format_rational(v) for v in a_vals],
               "variant": variant, "instance": label,
               "ambient_size": s.ambient_size,
               "dimension": s.dimension, "basis_rows": s.basis.nrows}
    return 0, payload, None


def cmd_classify(n, a_vals, variant, mode, cache_dir):
    if not a_vals:
        raise ValueError("classify needs at least one --a value")
    params = EvalParams(n, tuple(a_vals), variant)
    images = evalmaps.psi_tuple(n, params)
    s = closure_with_cache(images.all_images(), images.ambient_size, cache_dir)
    report = classify.classify_image(s, params)
    payload = {"command": "classify", "variant": variant,
               "warnings": list(images.warnings)}
    payload.update(report.to_json_dict())
    if mode:
        payload["mode"] = mode
        payload["mode_admissible"] = evalmaps.tuple_admissible(params, mode)
    code = 0 if not report.inconsistencies else 1
    return code, payload, classify.report_markdown(report)


def _loop_checks(n, variant):
    m = gim.gim_matrix_mn(n)
    pairs = loop.fixed_point_generators(n, variant)
    rel = loop.check_loop_relations(m, pairs)
    e_n, f_n = pairs[n - 1]
    h_n = loop.loop_bracket(e_n, f_n)
    xi, _steps = loop.xi_chain(n, variant)
    half = Fraction(1, 2) * loop.loop_bracket(xi, e_n)
    checks = [
        ("relations", rel.passed),
        ("corner-coroot-central-is-minus-one", h_n.central == -1),
        ("xi-centerless", xi.central == 0 and not xi.is_zero()),
        ("half-ad-xi-recovers-xi", loop.loop_bracket(half, f_n) == xi),
    ]
    payload = {"command": "loop-identities", "n": n, "variant": variant,
               "relations": rel.to_json_dict(),
               "checks": [{"name": k, "passed": bool(v)} for k, v in checks],
               "passed": all(v for _, v in checks)}
    return payload


def cmd_loop_identities(n, variant):
    payload = _loop_checks(n, variant)
    return (0 if payload["passed"] else 1), payload, None


def _quotient_checks(n, roots):
    q = loop.make_quotient(roots)
    params = EvalParams(n, q.roots, "plus")
    target = evalmaps.psi_tuple(n, params)
    pairs = loop.fixed_point_generators(n, "plus")
    cd_ok = all(ci * di == 1 for ci, di in zip(q.c, q.d))
    gen_ok = []
    for i, (ep, fp) in enumerate(pairs):
        xs = RatMatrix.block_diag(loop.eval_quotient_map(ep, q))
        ys = RatMatrix.block_diag(loop.eval_quotient_map(fp, q))
        gen_ok.append(xs == target.X[i] and ys == target.Y[i])
    payload = {"command": "quotient", "n": n,
               "quotient": q.to_json_dict(),
               "partial_fraction_cd": cd_ok,
               "eval_matches_block_map": gen_ok,
               "passed": cd_ok and all(gen_ok)}
    return payload


def cmd_quotient(n, roots):
    payload = _quotient_checks(n, roots)
    return (0 if payload["passed"] else 1), payload, None


# reproduction suite


def _row(row_id, instance, expected, computed, passed):
    return {"id": row_id, "instance": instance, "expected": str(expected),
            "computed": str(computed), "passed": bool(passed)}


def _psi_closure_row(n, a, verdict, dim, cache_dir):
    images = evalmaps.psi_a(n, a)
    s = closure_with_cache(images.all_images(), images.ambient_size, cache_dir)
    b = classify.classify_block(s, n, block_index=1)
    got = "dim %d, %s" % (b.dimension, b.verdict)
    want = "dim %d, %s" % (dim, verdict)
    return _row("psi-%s" % verdict.lower(),
                "psi at a = %s, n = %d" % (format_rational(a), n),
                want, got, got == want)


def _case_row(n, cid, cache_dir):
    a_vals = tuple(rat(x) for x in CASE_TUPLES[cid])
    cfg = CaseConfig(n, cid, a_vals)
    images = evalmaps.psi_big(cfg)
    rel = gim.check_gim_relations(gim.gim_matrix_mn(n), images)
    s = closure_with_cache(images.all_images(), images.ambient_size, cache_dir)
    report = classify.classify_image(s, EvalParams(n, a_vals, "plus"))
    sig = {1: (len(a_vals), 0, 0), 2: (len(a_vals) - 1, 1, 0),
           3: (len(a_vals) - 1, 0, 1), 4: (len(a_vals) - 2, 1, 1)}[cid]
    dim = (sig[0] * (4 * n * n - 1) + sig[1] * (2 * n * n + n)
           + sig[2] * (2 * n * n - n))
    want = "relations pass, dim %d, signature %s" % (dim, str(sig))
    got = "relations %s, dim %d, signature %s" % (
        "pass" if rel.passed else "FAIL", report.total_dimension,
        str(report.signature))
    ok = (rel.passed and report.total_dimension == dim
          and report.signature == sig and not report.inconsistencies)
    return _row("case%d" % cid, "case %d at %s, n = %d"
                % (cid, _fmt_tuple(a_vals), n), want, got, ok)


def _reproduce_rows(n, cache_dir):
    rows = []
    m = gim.gim_matrix_mn(n)
    corner_ok = gim.is_gim(m.entries) and m[1, n] == 1 and m[n, 1] == 1
    rows.append(_row("gim-matrix", "M_%d" % n, "GIM with +1 corners",
                     "GIM with +1 corners" if corner_ok else "violated",
                     corner_ok))

    sysA = chevalley.chevalley_A(n)
    ec, fc = chevalley.lowest_root_vectors_A(sysA, rat(2))
    want = -sum(sysA.h[1:], sysA.h[0])
    rows.append(_row("corner-bracket", "[e_corner, f_corner], n = %d" % n,
                     "-(h_1 + ... + h_%d)" % (2 * n - 1),
                     "matches" if lie.bracket(ec, fc) == want else "differs",
                     lie.bracket(ec, fc) == want))

    rows.append(_psi_closure_row(n, rat(2), "SL", 4 * n * n - 1, cache_dir))
    rows.append(_psi_closure_row(n, rat(1), "SP", 2 * n * n + n, cache_dir))
    rows.append(_psi_closure_row(n, rat(-1), "SO", 2 * n * n - n, cache_dir))

    rel_ok = True
    for a in ("2", "3", "1/2", "1", "-1"):
        images = evalmaps.psi_a(n, rat(a))
        rel_ok = rel_ok and gim.check_gim_relations(m, images).passed
    rows.append(_row("psi-relations", "a in {2, 3, 1/2, 1, -1}, n = %d" % n,
                     "all relations pass", "pass" if rel_ok else "FAIL",
                     rel_ok))

    images = evalmaps.lemma21_images(n, rat(2))
    rel = gim.check_gim_relations(m, images)
    s = closure_with_cache(images.all_images(), images.ambient_size, cache_dir)
    ok = rel.passed and s.dimension == 4 * n * n - 1
    rows.append(_row("chain-corner-map", "a = 2, n = %d" % n,
                     "relations pass, dim %d" % (4 * n * n - 1),
                     "relations %s, dim %d" % ("pass" if rel.passed else "FAIL",
                                               s.dimension), ok))

    images = evalmaps.lemma22_images(n)
    rel = gim.check_gim_relations(m, images)
    s = closure_with_cache(images.all_images(), images.ambient_size, cache_dir)
    ok = rel.passed and s.dimension == 2 * n * n + n
    rows.append(_row("symplectic-map", "n = %d" % n,
                     "relations pass, dim %d" % (2 * n * n + n),
                     "relations %s, dim %d" % ("pass" if rel.passed else "FAIL",
                                               s.dimension), ok))

    if n >= 4:
        images = evalmaps.lemma23_images(n)
        rel = gim.check_gim_relations(m, images)
        s = closure_with_cache(images.all_images(), images.ambient_size,
                               cache_dir)
        ok = rel.passed and s.dimension == 2 * n * n - n
        rows.append(_row("orthogonal-map", "n = %d" % n,
                         "relations pass, dim %d" % (2 * n * n - n),
                         "relations %s, dim %d"
                         % ("pass" if rel.passed else "FAIL", s.dimension), ok))

    for cid in (1, 2, 3, 4):
        rows.append(_case_row(n, cid, cache_dir))

    lp = _loop_checks(n, "plus")
    rows.append(_row("loop-identities", "n = %d" % n, "all identities hold",
                     "pass" if lp["passed"] else "FAIL", lp["passed"]))

    qp = _quotient_checks(n, ("2", "1/2"))
    pairs = loop.fixed_point_generators(n, "plus")
    gens = [g for p in pairs for g in p]
    q = loop.make_quotient(("2", "1/2"))
    mats = [RatMatrix.block_diag(loop.eval_quotient_map(x, q)) for x in gens]
    s = closure_with_cache(mats, 4 * n, cache_dir)
    proj = classify._block_subalgebra(s, 2 * n, 0, ())
    ok = (qp["passed"] and s.dimension == 4 * n * n - 1
          and proj.dimension == s.dimension)
    rows.append(_row("quotient-pair", "roots (2, 1/2), n = %d" % n,
                     "eval = block map, dim %d, first projection injective"
                     % (4 * n * n - 1),
                     "eval %s, dim %d, projection rank %d"
                     % ("ok" if qp["passed"] else "FAIL", s.dimension,
                        proj.dimension), ok))
    return rows


def reproduce_all(n_values, out_dir, cache_dir=None):
    """Run the whole verification suite per rank; write per-job JSON and
    one markdown summary under out_dir."""
    sections = []
    all_rows = []
    for n in n_values:
        rows = _reproduce_rows(int(n), cache_dir)
        sections.append((int(n), rows))
        all_rows.extend(rows)
        os.makedirs(out_dir, exist_ok=True)
        for row in rows:
            path = os.path.join(out_dir, "n%d-%s.json" % (n, row["id"]))
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(_dump(row))
    lines = ["# verification summary", ""]
    for n, rows in sections:
        lines.append("## n = %d" % n)
        lines.append("")
        lines.append("| id | instance | expected | computed | pass |")
        lines.append("|---|---|---|---|---|")
        for r in rows:
            lines.append("| %s | %s | %s | %s | %s |"
                         % (r["id"], r["instance"], r["expected"],
                            r["computed"], "yes" if r["passed"] else "NO"))
        lines.append("")
    failed = [r for r in all_rows if not r["passed"]]
    lines.append("%d of %d rows passed." % (len(all_rows) - len(failed),
                                            len(all_rows)))
    md = "\n".join(lines) + "\n"
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, "summary.md"), "w", encoding="utf-8") as fh:
        fh.write(md)
    payload = {"command": "reproduce", "n_values": [int(n) for n in n_values],
               "rows": all_rows, "passed": not failed}
    return (0 if not failed else 1), payload, md


# job specs


def run_job(spec) -> int:
    """Execute one JSON job spec; writes the report to output_path if set."""
    if not isinstance(spec, dict) or "command" not in spec:
        raise ValueError("job spec must be an object with a 'command' key")
    cmd = spec["command"]
    if cmd not in ("mn", "check-hom", "image", "classify", "loop-identities",
                   "quotient"):
        raise ValueError("unknown job command %r" % (cmd,))
    n = spec.get("n")
    if n is None:
        raise ValueError("job spec for %r is missing 'n'" % (cmd,))
    a_vals = [rat(x) for x in spec.get("a", [])]
    variant = spec.get("variant", spec.get("sign_variant", "plus"))
    target = spec.get("target")
    mode = spec.get("mode")
    out = spec.get("out", spec.get("output_path"))
    cache_dir = os.environ.get("GIMLAB_CACHE") or spec.get("cache")
    if cmd in ("check-hom", "image") and spec.get("case") is not None:
        target = "case%d" % int(spec["case"])
    if cmd == "mn":
        code, payload, md = cmd_mn(int(n))
    elif cmd == "check-hom":
        code, payload, md = cmd_check_hom(target, int(n), a_vals, variant)
    elif cmd == "image":
        code, payload, md = cmd_image(target, int(n), a_vals, variant, cache_dir)
    elif cmd == "classify":
        code, payload, md = cmd_classify(int(n), a_vals, variant, mode, cache_dir)
    elif cmd == "loop-identities":
        code, payload, md = cmd_loop_identities(int(n), variant)
    else:
        code, payload, md = cmd_quotient(int(n), spec.get("a", []))
    _emit(payload, md, out)
    return code


def _emit(payload, md, out):
    text = _dump(payload)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if md:
        sys.stdout.write(md)


# argument parsing


def _build_parser():
    p = argparse.ArgumentParser(
        prog="gimlab",
        description="exact verification of matrix and loop-algebra images "
                    "of the corner-modified tridiagonal relation family")
    sub = p.add_subparsers(dest="command")

    def add(name, help_text, needs_n=True, multi_n=False):
        q = sub.add_parser(name, help=help_text)
        if needs_n:
            q.add_argument("--n", action="append", type=int, required=not multi_n,
                           default=None, help="rank (n >= 3)")
        q.add_argument("--out", help="write the JSON report here")
        return q

    add("mn", "emit the corner-modified tridiagonal matrix")

    q = add("check-hom", "verify the defining relations for a named image")
    q.add_argument("--target", choices=["A", "C", "D", "psi",
                                        "case1", "case2", "case3", "case4"])
    q.add_argument("--a", action="append", default=[], help="point, as p/q")
    q.add_argument("--case", type=int, choices=[1, 2, 3, 4])
    q.add_argument("--variant", choices=["plus", "minus"], default="plus")

    q = add("image", "closure dimension of a named image")
    q.add_argument("--target", choices=["A", "C", "D", "psi",
                                        "case1", "case2", "case3", "case4"])
    q.add_argument("--a", action="append", default=[], help="point, as p/q")
    q.add_argument("--case", type=int, choices=[1, 2, 3, 4])
    q.add_argument("--variant", choices=["plus", "minus"], default="plus")
    q.add_argument("--cache", help="closure cache directory")

    q = add("classify", "classify the block images of a point tuple")
    q.add_argument("--a", action="append", default=[], help="point, as p/q")
    q.add_argument("--variant", choices=["plus", "minus"], default="plus")
    q.add_argument("--mode", choices=["lemma51", "lemma52", "lemma53",
                                      "lemma54"])
    q.add_argument("--cache", help="closure cache directory")

    q = add("loop-identities", "loop-algebra relations and the xi chain")
    q.add_argument("--variant", choices=["plus", "minus"], default="plus")

    q = add("quotient", "evaluation quotient against the block map")
    q.add_argument("--a", action="append", default=[],
                   help="quotient root, as p/q")

    q = add("reproduce", "run the full verification suite", multi_n=True)
    q.add_argument("--cache", help="closure cache directory")

    q = sub.add_parser("run", help="execute JSON job specs")
    q.add_argument("specs", nargs="+", help="job spec files")
    return p


def _single_n(args):
    vals = args.n or []
    if len(vals) != 1:
        raise ValueError("this command needs exactly one --n")
    if vals[0] < 3:
        raise ValueError("need n >= 3")
    return vals[0]


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_usage(sys.stderr)
        return 2
    try:
        if args.command == "run":
            code = 0
            for path in args.specs:
                with open(path, encoding="utf-8") as fh:
                    spec = json.load(fh)
                code = max(code, run_job(spec))
            return code

        cache_dir = os.environ.get("GIMLAB_CACHE") or getattr(args, "cache", None)
        if args.command == "mn":
            code, payload, md = cmd_mn(_single_n(args))
        elif args.command == "check-hom":
            target = args.target
            if target is None and args.case is not None:
                target = "case%d" % args.case
            if target is None:
                raise ValueError("check-hom needs --target or --case")
            a_vals = [rat(x) for x in args.a]
            code, payload, md = cmd_check_hom(target, _single_n(args), a_vals,
                                              args.variant)
        elif args.command == "image":
            target = args.target
            if target is None and args.case is not None:
                target = "case%d" % args.case
            if target is None:
                raise ValueError("image needs --target or --case")
            a_vals = [rat(x) for x in args.a]
            code, payload, md = cmd_image(target, _single_n(args), a_vals,
                                          args.variant, cache_dir)
        elif args.command == "classify":
            a_vals = [rat(x) for x in args.a]
            code, payload, md = cmd_classify(_single_n(args), a_vals,
                                             args.variant, args.mode, cache_dir)
        elif args.command == "loop-identities":
            code, payload, md = cmd_loop_identities(_single_n(args),
                                                    args.variant)
        elif args.command == "quotient":
            code, payload, md = cmd_quotient(_single_n(args), args.a)
        elif args.command == "reproduce":
            n_values = args.n or []
            if any(v < 3 for v in n_values):
                raise ValueError("need n >= 3")
            out_dir = args.out or "gimlab-reports"
            code, payload, md = reproduce_all(n_values, out_dir, cache_dir)
            sys.stdout.write(md)
            return code
        else:
            parser.print_usage(sys.stderr)
            return 2
    except (ValueError, TypeError, OSError, json.JSONDecodeError, KeyError) as e:
        sys.stderr.write("error: %s\n" % e)
        return 2
    _emit(payload, md, getattr(args, "out", None))
    return code


if __name__ == "__main__":
    sys.exit(main())
