"""Command-line front end: ``skeinlab <command> ...``."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import List, Optional

from . import __version__
from .braid import BraidParseError, BraidWord, parse_braid, render
from .coeffs import coeff_props_check, specialize, thm1_check, thm2_check, words_report
from .conway import conway_torus, torus_homflypt
from .hecke import homflypt
from .oracles import CrossingBoundExceeded, alexander_burau, jones_kauffman, unit_equal
from .suites import DEFAULT_SEED, SUITES, pmap, run_suite
from .threebraid import OmegaClass, enumerate_b3, omega_check, poly_hash, survey_equal_v, survey_row

SURVEY_MAX_LEN = 10


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _report_json(b) -> dict:
    r = words_report(b)
    d = r["decomp"]
    return {
        "word": render(b),
        "n": r["n"],
        "w": r["w"],
        "mu": r["mu"],
        "P": r["P"].to_json(),
        "p": [p.to_json() for p in d.p],
        "h": [h.to_json() for h in r["h"]],
        "conway": r["conway"].to_json(),
        "jones": r["jones"].to_json(),
        "alexander": r["alexander"].to_json(),
        "checks": {
            "thm1": thm1_check(b, d, r["conway"]),
            "thm2": thm2_check(b, d=d),
            "prop10": coeff_props_check(b),
        },
    }


def cmd_invariants(args) -> int:
    b = parse_braid(args.braid)
    rep = _report_json(b)
    _emit(rep)
    return 0 if all(rep["checks"].values()) else 1


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        print(f"unknown suite {args.suite!r}; choose from: {', '.join(sorted(SUITES))}",
              file=sys.stderr)
        return 2
    cfg = {
        "max_len": args.max_len,
        "kappa": args.kappa,
        "range_": args.range,
        "samples": args.samples,
        "seed": args.seed,
    }
    res = run_suite(args.suite, **cfg)
    if args.json:
        _emit(res.to_json())
    else:
        status = "PASS" if res.ok else "FAIL"
        print(f"{res.name}: {status} ({res.checked} checked, {len(res.failures)} failed, "
              f"{res.elapsed:.2f}s)")
        for k, v in res.notes.items():
            print(f"  {k}: {v}")
        for item, reason in res.failures[: args.show]:
            print(f"  counterexample: {item}: {reason}")
        if len(res.failures) > args.show:
            print(f"  ... {len(res.failures) - args.show} more")
    return 0 if res.ok else 1


def cmd_survey(args) -> int:
    if not 1 <= args.max_len <= SURVEY_MAX_LEN:
        print(f"--max-len must be between 1 and {SURVEY_MAX_LEN}", file=sys.stderr)
        return 2
    rows = pmap(survey_row, list(enumerate_b3(args.max_len)))
    rep = survey_equal_v(args.max_len, rows)
    out = csv.writer(sys.stdout, lineterminator="\n")
    head = ["word", "w", "mu", "V_hash", "P_hash", "bucket"]
    if args.full:
        head += ["V", "P"]
    out.writerow(head)
    for r in rep.rows:
        row = [render(r.word), r.w, r.mu, poly_hash(r.V), poly_hash(r.P), r.bucket]
        if args.full:
            row += [r.V.dumps(), r.P.dumps()]
        out.writerow(row)
    print(json.dumps(rep.summary()), file=sys.stderr)
    for b, c in rep.violations:
        print(f"violation: {b} / {c}", file=sys.stderr)
    for b, c, why in rep.lemma2_issues:
        print(f"screen: {b} / {c}: {why}", file=sys.stderr)
    return 0 if rep.ok else 1


def cmd_torus_table(args) -> int:
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["p", "engine_P", "closed_P", "equal"])
    ok = True
    for p in range(args.min, args.max + 1):
        b = BraidWord(2, (1 if p > 0 else -1,) * abs(p))
        eng, closed = homflypt(b), torus_homflypt(p)
        ok &= eng == closed
        out.writerow([p, str(eng), str(closed), eng == closed])
    return 0 if ok else 1


def cmd_oracle(args) -> int:
    b = parse_braid(args.braid)
    P = homflypt(b)
    jk = jones_kauffman(b)
    ab = alexander_burau(b)
    je, ae = specialize(P, "jones"), specialize(P, "alexander")
    rep = {
        "word": render(b),
        "jones_kauffman": jk.to_json(),
        "jones_engine": je.to_json(),
        "jones_equal": jk == je,
        "alexander_burau": ab.to_json(),
        "alexander_engine": ae.to_json(),
        "alexander_unit_equal": unit_equal(ab, ae),
    }
    _emit(rep)
    return 0 if rep["jones_equal"] and rep["alexander_unit_equal"] else 1


def cmd_conway(args) -> int:
    _emit(conway_torus(args.p).to_json())
    return 0


def _pairs(text: str):
    out = []
    for chunk in text.split(","):
        a, _, b = chunk.partition(":")
        out.append((int(a), int(b)))
    return tuple(out)


def cmd_omega(args) -> int:
    c = OmegaClass(args.index, args.d, e=args.e, E=args.E,
                   pairs=_pairs(args.pairs) if args.pairs else ())
    r = omega_check(c)
    _emit(r.to_json())
    return 0 if r.unit_equal else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skeinlab", description="Homflypt invariants of braid closures.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="full JSON report for one braid word")
    p.add_argument("braid")
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help="one of: " + ", ".join(sorted(SUITES)))
    p.add_argument("--max-len", type=int)
    p.add_argument("--kappa", type=int)
    p.add_argument("--range", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json", action="store_true")
    p.add_argument("--show", type=int, default=20, help="counterexamples to print")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("survey", help="equal-Jones survey of canonical B_3 words (CSV)")
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--full", action="store_true", help="include full polynomials")
    p.set_defaults(fn=cmd_survey)

    p = sub.add_parser("torus-table", help="engine vs closed form on sigma_1^p")
    p.add_argument("--min", type=int, default=-12)
    p.add_argument("--max", type=int, default=12)
    p.set_defaults(fn=cmd_torus_table)

    p = sub.add_parser("oracle", help="Kauffman and Burau values against the engine")
    p.add_argument("braid")
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("conway", help="C_p as JSON")
    p.add_argument("p", type=int)
    p.set_defaults(fn=cmd_conway)

    p = sub.add_parser("omega", help="B_3 family representative and its Alexander polynomial")
    p.add_argument("index", type=int, choices=range(7))
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--e", type=int, default=0)
    p.add_argument("--E", type=int, default=0)
    p.add_argument("--pairs", help="family 6 tail as e1:E1,e2:E2,...")
    p.set_defaults(fn=cmd_omega)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except BraidParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (CrossingBoundExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
