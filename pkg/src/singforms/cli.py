"""Command-line front end.

Subcommands: hypersurface analyze, koszul cohomology, koszul pattern,
quotient analyze, quotient classify, selftest.  Exit codes: 0 success,
2 input error, 3 reduction budget exhausted.  JSON reports are wrapped
in a schema-stable envelope under the key "singular-forms/1".
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from math import comb

from . import __version__
from .errors import BudgetExceededError, SingFormsError
from .hypersurface import analyze_hypersurface
from .koszul import build_koszul, koszul_cohomology, tjurina_dimension, vanishing_pattern
from .poly import Ring, parse_poly
from .quotient import (
    canonical_type,
    classify_dimension,
    gorenstein_check,
    invariant_form_generators,
    is_isolated,
    reflexive_freeness,
    reid_tai_terminal,
    validate_type,
)

SCHEMA = "singular-forms/1"


def _split_csv(text: str) -> list[str]:
    items = [s.strip() for s in text.split(",")]
    if any(not s for s in items):
        raise ValueError(f"malformed comma list: {text!r}")
    return items


def _split_ints(text: str) -> list[int]:
    return [int(s) for s in _split_csv(text)]


def _ring_from_args(args) -> Ring:
    names = tuple(_split_csv(args.vars))
    weights = tuple(_split_ints(args.weights)) if args.weights else None
    return Ring(names, weights)


def _budget_from_args(args) -> int | None:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("SF_BUDGET")
    return int(env) if env else None


def _envelope(command: str, input_echo: dict, result: dict, started: float) -> dict:
    return {
        "schema": SCHEMA,
        "version": __version__,
        "command": command,
        "input": input_echo,
        "timing_ms": int((time.monotonic() - started) * 1000),
        "result": result,
    }


def _emit(args, envelope: dict, text: str) -> None:
    if args.json:
        print(json.dumps(envelope, indent=2, sort_keys=True))
    else:
        print(text)


# -- hypersurface -------------------------------------------------------


def _cmd_hypersurface_analyze(args) -> int:
    started = time.monotonic()
    ring = _ring_from_args(args)
    f = parse_poly(args.f, ring)
    p_list = _split_ints(args.plist) if args.plist else None
    limit = _budget_from_args(args)
    report = analyze_hypersurface(f, p_list, degree_prefix=args.degree_prefix, limit=limit)
    echo = {"vars": list(ring.variables), "weights": list(ring.weights) if ring.weights else None,
            "f": args.f, "plist": list(report.p_list)}
    lines = [
        f"f = {report.f_text}  in Q[{', '.join(report.variables)}]",
        f"dim X = {report.n}; singular locus codimension: "
        + ("smooth" if report.smooth else str(report.d)),
        f"normal: {'yes' if report.normal else 'no'}; "
        f"embedding dimension at origin: {report.embedding_dim}",
        "tjurina dimension: "
        + ("infinite" if report.tjurina is None else str(report.tjurina)),
        "",
        report.table_text(),
        "",
    ]
    for p, at0, generic in report.corank_profiles:
        lines.append(f"corank profile p={p}: origin {at0}, generic {generic}")
    for v in report.reflexive:
        lines.append(
            f"reflexive {v.p}-forms: {'free' if v.free else 'NOT free'} "
            f"({v.min_gens} generators vs rank {v.generic_rank})"
        )
    for v in report.modulo_torsion:
        lines.append(
            f"{v.p}-forms modulo torsion: {'free' if v.free else 'NOT free'} "
            f"({v.min_gens} generators vs rank {v.generic_rank})"
        )
    for v in report.kahler:
        lines.append(
            f"full {v.p}-form module: {'free' if v.free else 'NOT free'} "
            f"({v.min_gens} generators vs rank {v.generic_rank})"
        )
    for c in report.checks:
        lines.append(f"check [{c.rule}]: {c.status} ({c.detail})")
    _emit(args, _envelope("hypersurface analyze", echo, report.to_json_dict(), started),
          "\n".join(lines))
    return 0


# -- koszul --------------------------------------------------------------


def _cmd_koszul_cohomology(args) -> int:
    started = time.monotonic()
    ring = _ring_from_args(args)
    f = parse_poly(args.f, ring)
    limit = _budget_from_args(args)
    K = build_koszul(f, limit)
    mod = koszul_cohomology(K, args.p, degree_prefix=args.degree_prefix, limit=limit)
    echo = {"vars": list(ring.variables), "weights": list(ring.weights) if ring.weights else None,
            "f": args.f, "p": args.p}
    result = {
        "kind": "koszul_cohomology",
        "p": mod.p,
        "is_zero": mod.is_zero,
        "min_gen_count": mod.min_gen_count,
        "hilbert_prefix": list(mod.hilbert_prefix),
        "kernel_generators": len(mod.presentation.generators),
        "ambient_rank": mod.presentation.rank,
    }
    text = (
        f"H^{mod.p}: " + ("zero" if mod.is_zero else "nonzero")
        + f"; minimal generators at origin: {mod.min_gen_count}"
        + f"; dimensions in degrees 0..{args.degree_prefix}: {list(mod.hilbert_prefix)}"
    )
    _emit(args, _envelope("koszul cohomology", echo, result, started), text)
    return 0


def _cmd_koszul_pattern(args) -> int:
    started = time.monotonic()
    ring = _ring_from_args(args)
    f = parse_poly(args.f, ring)
    limit = _budget_from_args(args)
    pattern = vanishing_pattern(f, limit)
    tjurina = tjurina_dimension(f, limit)
    echo = {"vars": list(ring.variables), "weights": list(ring.weights) if ring.weights else None,
            "f": args.f}
    result = {
        "kind": "koszul_pattern",
        "n": pattern.n,
        "h_nonzero": list(pattern.h_nonzero),
        "tor_nonzero": list(pattern.tor_nonzero),
        "cotor_nonzero": list(pattern.cotor_nonzero),
        "nonvanishing_degrees": list(pattern.nonvanishing_degrees()),
        "tjurina": tjurina if tjurina is not None else "infinite",
    }
    cols = range(pattern.n + 2)
    width = 5
    head = "p".ljust(7) + "".join(str(p).rjust(width) for p in cols)
    tor = "tor".ljust(7) + "".join(
        ("≠0" if nz else "0").rjust(width) for nz in pattern.tor_nonzero)
    cotor = "cotor".ljust(7) + "".join(
        ("≠0" if nz else "0").rjust(width) for nz in pattern.cotor_nonzero)
    text = "\n".join([head, tor, cotor,
                      "tjurina dimension: " + ("infinite" if tjurina is None else str(tjurina))])
    _emit(args, _envelope("koszul pattern", echo, result, started), text)
    return 0


# -- quotient ------------------------------------------------------------


def _cmd_quotient_analyze(args) -> int:
    started = time.monotonic()
    weights = _split_ints(args.a)
    t = validate_type(args.r, weights)
    p = args.p if args.p is not None else t.n - 1
    verdict = reflexive_freeness(t, p)
    basis = invariant_form_generators(t, p)
    canon = canonical_type(t)
    terminal = reid_tai_terminal(t)
    gorenstein = gorenstein_check(t)
    isolated = is_isolated(t)
    echo = {"r": args.r, "a": weights, "p": p}
    result = {
        "kind": "quotient_report",
        "r": t.r,
        "weights": list(t.weights),
        "n": t.n,
        "canonical": list(canon.weights),
        "reduced_from": t.reduced_from,
        "p": p,
        "free": verdict.free,
        "generator_count": verdict.min_gens,
        "generic_rank": verdict.generic_rank,
        "generators": [
            {"indices": list(I), "monomial": list(m)} for I, m in basis.entries
        ],
        "terminal": terminal,
        "isolated": isolated,
        "gorenstein": gorenstein,
    }
    names = [f"x{i + 1}" for i in range(t.n)]
    lines = [
        f"type: {t!r}" + (f" (normalized from 1/{t.reduced_from})" if t.reduced_from else ""),
        f"canonical form: {canon!r}",
        f"free: {'yes' if verdict.free else 'no'} "
        f"({verdict.min_gens} {'=' if verdict.free else '>'} C({t.n},{p}));"
        f" terminal: {'yes' if terminal else 'no'};"
        f" gorenstein: {'yes' if gorenstein else 'no'};"
        f" isolated: {'yes' if isolated else 'no'}",
    ]
    if len(basis.entries) <= 24:
        lines.append("generators: " + ", ".join(basis.render(names)))
    _emit(args, _envelope("quotient analyze", echo, result, started), "\n".join(lines))
    return 0


def _cmd_quotient_classify(args) -> int:
    started = time.monotonic()
    classified = classify_dimension(args.dim, args.rmax)
    echo = {"dim": args.dim, "rmax": args.rmax}
    result = {
        "kind": "classification",
        "n": args.dim,
        "r_max": args.rmax,
        "p": args.dim - 1,
        "types": [c.to_json_dict() for c in classified],
    }
    lines = [f"types with free ({args.dim - 1})-forms, r <= {args.rmax}:"]
    for c in classified:
        lines.append(
            f"  {c.type!r}: {c.generator_count} generators;"
            f" terminal: {'yes' if c.terminal else 'no'};"
            f" isolated: {'yes' if c.isolated else 'no'};"
            f" gorenstein: {'yes' if c.gorenstein else 'no'}"
        )
    _emit(args, _envelope("quotient classify", echo, result, started), "\n".join(lines))
    return 0


# -- selftest ------------------------------------------------------------


def _selftest_cases():
    def parse_case():
        ring = Ring(("x", "y"))
        assert parse_poly("(x+y)^2 - x^2 - 2*x*y", ring).to_string() == "y^2"

    def groebner_case():
        ring = Ring(("x", "y"))
        from .groebner import Ideal

        basis = Ideal(ring, (parse_poly("x^2+y^2", ring), parse_poly("x*y", ring))).groebner_basis()
        assert {g.to_string() for g in basis} == {"x*y", "x^2 + y^2", "y^3"}

    def quadric_case():
        ring = Ring(("x", "y", "z"))
        f = parse_poly("x^2+y^2+z^2", ring)
        assert vanishing_pattern(f).nonvanishing_degrees() == (2, 3)
        assert tjurina_dimension(f) == 1

    def oracle_case():
        from .koszul import torsion_oracle

        ring = Ring(("x", "y", "z"))
        f = parse_poly("x^2+y^2+z^2", ring)
        assert torsion_oracle(f, 2).equal

    def quotient_case():
        t = validate_type(2, (1, 1, 1))
        v = reflexive_freeness(t, 2)
        assert v.free and v.min_gens == 3
        assert reid_tai_terminal(t) and not gorenstein_check(t)
        assert canonical_type(validate_type(5, (2, 3))).weights == (1, 4)

    def wedge_case():
        from .matrices import det_fraction_free, exterior_power_matrix

        a = [[2, 0, 0], [0, 3, 0], [0, 0, 5]]
        w = exterior_power_matrix(a, 2)
        assert [w[i][i] for i in range(3)] == [6, 10, 15]
        assert det_fraction_free(w) == det_fraction_free(a) ** 2

    def classify_case():
        res = classify_dimension(3, 10)
        assert [(c.type.r, c.type.weights) for c in res] == [(1, (0, 0, 0)), (2, (1, 1, 1))]

    return [
        ("parse", parse_case),
        ("groebner", groebner_case),
        ("quadric-pattern", quadric_case),
        ("torsion-oracle", oracle_case),
        ("quotient", quotient_case),
        ("wedge-determinant", wedge_case),
        ("classify", classify_case),
    ]


def _cmd_selftest(args) -> int:
    started = time.monotonic()
    results = []
    failed = 0
    for name, fn in _selftest_cases():
        try:
            fn()
            ok = True
        except Exception:
            ok = False
            failed += 1
        results.append({"name": name, "pass": ok})
    if args.json:
        envelope = _envelope("selftest", {}, {"kind": "selftest", "cases": results}, started)
        print(json.dumps(envelope, indent=2, sort_keys=True))
    else:
        for r in results:
            print(("PASS " if r["pass"] else "FAIL ") + r["name"])
    return 1 if failed else 0


# -- parser wiring -------------------------------------------------------


def _add_common(parser, poly_input: bool):
    if poly_input:
        parser.add_argument("--vars", required=True, help="comma-separated variable names")
        parser.add_argument("--f", required=True, help="hypersurface equation")
        parser.add_argument("--weights", help="comma-separated grading weights")
    parser.add_argument("--budget", type=int, help="reduction steps per engine loop")
    parser.add_argument("--json", action="store_true", help="emit the JSON envelope")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="singforms")
    parser.add_argument("--version", action="version", version=f"singforms {__version__}")
    sub = parser.add_subparsers(dest="group", required=True)

    hyp = sub.add_parser("hypersurface", help="hypersurface singularity analysis")
    hyp_sub = hyp.add_subparsers(dest="action", required=True)
    analyze = hyp_sub.add_parser("analyze", help="full singularity report")
    _add_common(analyze, poly_input=True)
    analyze.add_argument("--plist", help="comma-separated form degrees")
    analyze.add_argument("--degree-prefix", type=int, default=8)
    analyze.set_defaults(func=_cmd_hypersurface_analyze)

    kos = sub.add_parser("koszul", help="wedge-with-df complex computations")
    kos_sub = kos.add_subparsers(dest="action", required=True)
    coh = kos_sub.add_parser("cohomology", help="one cohomology module")
    _add_common(coh, poly_input=True)
    coh.add_argument("--p", type=int, required=True)
    coh.add_argument("--degree-prefix", type=int, default=8)
    coh.set_defaults(func=_cmd_koszul_cohomology)
    pat = kos_sub.add_parser("pattern", help="torsion/cotorsion vanishing table")
    _add_common(pat, poly_input=True)
    pat.set_defaults(func=_cmd_koszul_pattern)

    quo = sub.add_parser("quotient", help="cyclic quotient singularities")
    quo_sub = quo.add_subparsers(dest="action", required=True)
    qan = quo_sub.add_parser("analyze", help="one quotient type")
    qan.add_argument("--r", type=int, required=True)
    qan.add_argument("--a", required=True, help="comma-separated weights")
    qan.add_argument("--p", type=int, help="form degree (default n-1)")
    _add_common(qan, poly_input=False)
    qan.set_defaults(func=_cmd_quotient_analyze)
    qcl = quo_sub.add_parser("classify", help="types with free (n-1)-forms")
    qcl.add_argument("--dim", type=int, required=True)
    qcl.add_argument("--rmax", type=int, required=True)
    _add_common(qcl, poly_input=False)
    qcl.set_defaults(func=_cmd_quotient_classify)

    st = sub.add_parser("selftest", help="run the built-in consistency battery")
    st.add_argument("--json", action="store_true")
    st.set_defaults(func=_cmd_selftest)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad usage, 0 on --help/--version
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (SingFormsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
