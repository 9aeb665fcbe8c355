"""
Verification suites shared by the ``verify`` command and the acceptance tests.

Each suite returns a :class:`SuiteResult` holding the number of items checked
and a list of ``(item, reason)`` failures. Per-item work goes through
:func:`pmap`, which fans out to processes when ``SKEINLAB_THREADS`` > 1 and
always returns results in input order.
"""

from __future__ import annotations

import inspect
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from itertools import product
from typing import Callable, Dict, List, Sequence, Tuple

from .braid import BraidWord, cyclic_shift, random_word, stabilize, writhe
from .coeffs import (
    coeff_props_check,
    decompose,
    specialize,
    sum_identity_holds,
    thm1_check,
    thm2_check,
    verify_omega_family,
)
from .conway import (
    check_diff_prod,
    check_gcd_props,
    check_prod_rel,
    check_sum_rel,
    check_zm_expansion,
    conway_closed_form,
    conway_torus,
    fibonacci_value,
    torus_homflypt,
)
from .hecke import check_reduction_formulas, check_skein_triple, homflypt, homflypt_via_elements
from .laurent import LaurentPoly
from .oracles import alexander_burau, jones_kauffman, unit_equal
from .threebraid import (
    augmented_identities,
    enumerate_b3,
    equal_p_decision,
    eta_conway_checks,
    example1_instance,
    jones3,
    landscape_check,
    omega_check,
    omega_grid,
    p3_closed,
    p3_lemma1,
    survey_equal_v,
)

DEFAULT_SEED = 20240611


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: List[Tuple[str, str]] = field(default_factory=list)
    notes: Dict[str, object] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, item, reason: str) -> None:
        self.failures.append((str(item), reason))

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "failures": [{"item": i, "reason": r} for i, r in self.failures],
            "notes": self.notes,
            "elapsed_s": round(self.elapsed, 3),
        }


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("SKEINLAB_THREADS", "1")))
    except ValueError:
        return 1


def pmap(fn: Callable, items: Sequence) -> list:
    items = list(items)
    k = worker_count()
    if k == 1 or len(items) < 64:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=k) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (8 * k))))


def _timed(name: str):
    def deco(f):
        def run(**cfg) -> SuiteResult:
            t0 = time.perf_counter()
            res = SuiteResult(name)
            f(res, **cfg)
            res.elapsed = time.perf_counter() - t0
            return res

        run.__name__ = f.__name__
        run.__doc__ = f.__doc__
        run.__signature__ = inspect.signature(f).replace(
            parameters=list(inspect.signature(f).parameters.values())[1:]
        )
        return run

    return deco


def random_corpus(count: int, max_strands: int, max_len: int, seed: int) -> List[BraidWord]:
    rng = random.Random(seed)
    return [random_word(rng, max_strands, max_len) for _ in range(count)]


# -- per-item checks (top level so they pickle) ---------------------------------

def _coeff_item(b: BraidWord, kappa: int = 6) -> List[str]:
    P = homflypt(b)
    d = decompose(P, b.strands, writhe(b))
    nabla = P.at_v1()
    out = []
    if not thm1_check(b, d, nabla):
        out.append("thm1")
    if not thm2_check(b, range(-kappa, kappa + 1), d):
        out.append("thm2")
    if not sum_identity_holds(d, nabla):
        out.append("sum")
    return out


def _oracle_item(b: BraidWord) -> List[str]:
    P = homflypt(b)
    out = []
    if jones_kauffman(b) != specialize(P, "jones"):
        out.append("jones")
    if not unit_equal(alexander_burau(b), specialize(P, "alexander")):
        out.append("alexander")
    return out


def _invariance_item(b: BraidWord) -> List[str]:
    P = homflypt(b)
    out = []
    for k in range(1, len(b.letters)):
        if homflypt(cyclic_shift(b, k)) != P:
            out.append(f"shift {k}")
            break
    for sign in (1, -1):
        if homflypt(stabilize(b, sign)) != P:
            out.append(f"stabilize {sign:+d}")
    if not coeff_props_check(b):
        out.append("coefficient properties")
    return out


def _b3_item(b: BraidWord) -> List[str]:
    P = homflypt(b)
    d = decompose(P, 3, writhe(b))
    nabla = P.at_v1()
    out = []
    if p3_closed(b, nabla) != d:
        out.append("closed p_j")
    if p3_lemma1(b, nabla) != P:
        out.append("closed P")
    if jones3(b, specialize(P, "alexander")) != specialize(P, "jones"):
        out.append("closed V")
    return out


def _landscape_item(b: BraidWord) -> List[str]:
    d = decompose(homflypt(b), 3, writhe(b))
    if landscape_check(d):
        return []
    degs = ["-inf" if p.is_zero() else str(p.degree()) for p in d.p]
    return ["valley: degrees " + ",".join(degs)]


def _identity_item(b: BraidWord) -> List[str]:
    out = []
    for pos in range(len(b.letters)):
        if not check_skein_triple(b, pos):
            out.append(f"skein at {pos}")
    for i in range(1, b.strands):
        for e in (-2, -1, 1, 2):
            if not check_reduction_formulas(b, i, e):
                out.append(f"reduction i={i} e={e}")
    if homflypt(b) != homflypt_via_elements(b):
        out.append("fast/reference engine mismatch")
    return out


def _collect(res: SuiteResult, items: Sequence, fn: Callable) -> None:
    for b, problems in zip(items, pmap(fn, items)):
        res.checked += 1
        for p in problems:
            res.fail(b, p)


# -- suites ---------------------------------------------------------------------

@_timed("torus")
def suite_torus(res: SuiteResult, p_range: int = 12):
    """Engine P of sigma_1^p closures against the closed form."""
    for p in range(-p_range, p_range + 1):
        b = BraidWord(2, (1 if p > 0 else -1,) * abs(p))
        res.checked += 1
        if homflypt(b) != torus_homflypt(p):
            res.fail(b, "closed form mismatch")


def coefficient_corpus(max_len: int, samples: int, seed: int,
                       max_strands: int = 6, rand_len: int = 14) -> List[BraidWord]:
    return list(enumerate_b3(max_len)) + random_corpus(samples, max_strands, rand_len, seed)


@_timed("coefficients")
def suite_coefficients(res: SuiteResult, max_len: int = 10, samples: int = 500,
                       seed: int = DEFAULT_SEED, kappa: int = 6):
    """Lowest-coefficient formulas, both linear relations and the kappa family."""
    _collect(res, coefficient_corpus(max_len, samples, seed), partial(_coeff_item, kappa=kappa))


def random_weight(rng: random.Random, degree: int = 3) -> LaurentPoly:
    while True:
        p = LaurentPoly({k: rng.randint(-5, 5) for k in range(degree + 1)}, "z")
        if not p.is_zero():
            return p


@_timed("omega-family")
def suite_omega_family(res: SuiteResult, samples: int = 50, seed: int = DEFAULT_SEED,
                       words_per_pair: int = 20):
    """Weights built from two free parameters satisfy the family identity."""
    rng = random.Random(seed)
    words = random_corpus(words_per_pair, 6, 12, seed + 1)
    b3 = list(enumerate_b3(6))
    words += rng.sample(b3, min(words_per_pair, len(b3)))
    for _ in range(samples):
        A0, A1 = random_weight(rng), random_weight(rng)
        for b in words:
            res.checked += 1
            if not verify_omega_family(A0, A1, b):
                res.fail(b, f"A0={A0} A1={A1}")


@_timed("oracles")
def suite_oracles(res: SuiteResult, samples: int = 200, seed: int = DEFAULT_SEED):
    """Kauffman-bracket Jones and Burau Alexander against the engine."""
    _collect(res, random_corpus(samples, 5, 12, seed), _oracle_item)


@_timed("invariance")
def suite_invariance(res: SuiteResult, samples: int = 200, seed: int = DEFAULT_SEED):
    """Conjugation, both stabilizations, mirror and stabilization coefficient rules."""
    _collect(res, random_corpus(samples, 5, 10, seed), _invariance_item)


@_timed("identities")
def suite_identities(res: SuiteResult, samples: int = 60, seed: int = DEFAULT_SEED):
    """Skein relation, reduction formulas and fast/reference engine agreement."""
    _collect(res, random_corpus(samples, 4, 8, seed), _identity_item)


@_timed("conway-identities")
def suite_conway(res: SuiteResult, range_: int = 12):
    """Torus Conway identities, gcd/divisibility and closed-form agreement."""
    R = range_
    for x, y in product(range(-R, R + 1), repeat=2):
        res.checked += 1
        if not check_sum_rel(x, y):
            res.fail((x, y), "sum relation")
    for x in range(-R, R + 1):
        for k in range(1, R + 1):
            res.checked += 1
            if not check_prod_rel(x, k):
                res.fail((x, k), "product relation")
    for x, y, p in product(range(-6, 7), repeat=3):
        q = x + y - p
        for kappa in range(-4, 5):
            res.checked += 1
            if not check_diff_prod(x, y, p, q, kappa):
                res.fail((x, y, p, q, kappa), "difference of products")
    for m in range(1, 7):
        for p in range(-10, 11):
            res.checked += 1
            if not check_zm_expansion(m, p):
                res.fail((m, p), "z^m expansion")
    for a, b in product(range(-R, R + 1), repeat=2):
        res.checked += 1
        if not check_gcd_props(a, b):
            res.fail((a, b), "gcd/divisibility")
    fa, fb = 0, 1
    for p in range(1, 21):
        fa, fb = fb, fa + fb
        res.checked += 1
        if fibonacci_value(p) != fa:
            res.fail(p, f"C_p(1) = {fibonacci_value(p)}, expected {fa}")
    for p in range(-64, 65):
        res.checked += 1
        if conway_torus(p) != conway_closed_form(p):
            res.fail(p, "recursion vs closed form")


@_timed("three-braid")
def suite_three_braid(res: SuiteResult, max_len: int = 10, pair_len: int = 7):
    """Closed-form p_j, P and V on the B_3 corpus, and the equal-P criterion on all pairs."""
    corpus = list(enumerate_b3(max_len))
    _collect(res, corpus, _b3_item)
    small = [b for b in corpus if len(b.letters) <= pair_len]
    Ps = [homflypt(b) for b in small]
    nablas = [P.at_v1() for P in Ps]
    for i in range(len(small)):
        for j in range(i, len(small)):
            res.checked += 1
            pred, _ = equal_p_decision(small[i], small[j], nablas[i], nablas[j])
            if pred != (Ps[i] == Ps[j]):
                res.fail(f"{small[i]} / {small[j]}", f"predicted {pred}")


@_timed("landscape")
def suite_landscape(res: SuiteResult, max_len: int = 10):
    """No valley in the degree profile of p_0, p_1, p_2 on the B_3 corpus."""
    _collect(res, list(enumerate_b3(max_len)), _landscape_item)


@_timed("survey")
def suite_survey(res: SuiteResult, max_len: int = 8):
    """Equal Jones implies equal Homflypt on the canonical B_3 corpus."""
    rep = survey_equal_v(max_len)
    res.checked = len(rep.rows)
    res.notes.update(rep.summary())
    for b, c in rep.violations:
        res.fail(f"{b} / {c}", "equal V, unequal P")
    for b, c, why in rep.lemma2_issues:
        res.fail(f"{b} / {c}", "equal-V pair screen: " + why)


@_timed("example1")
def suite_example1(res: SuiteResult):
    """Equal nonzero Conway polynomials with distinct Homflypt polynomials."""
    for x, y in ((3, 1), (4, 2)):
        b, g = example1_instance(x, y)
        Pb, Pg = homflypt(b), homflypt(g)
        res.checked += 1
        if Pb.at_v1() != Pg.at_v1():
            res.fail((x, y), "Conway polynomials differ")
        elif Pb.at_v1().is_zero():
            res.fail((x, y), "Conway polynomial is zero")
        if Pb == Pg:
            res.fail((x, y), "Homflypt polynomials agree")


@_timed("omega")
def suite_omega(res: SuiteResult, degree_claim: bool = True):
    """Closed-form Alexander polynomials of the seven B_3 families.

    Unit-equality with the engine and exact divisibility are always checked;
    with ``degree_claim`` the top-degree statement for families 0..5 is too.
    """
    div_fail = mismatch = deg_fail = deg_checked = 0
    for c in omega_grid():
        r = omega_check(c)
        res.checked += 1
        if r.division_failed:
            div_fail += 1
            res.fail(c.label(), "inexact division in closed form")
        elif not r.unit_equal:
            mismatch += 1
            res.fail(c.label(), "closed form not unit-equal to engine")
        if r.max_degree_claim is not None:
            deg_checked += 1
            if not r.max_degree_claim:
                deg_fail += 1
                if degree_claim:
                    got = "zero" if r.engine.is_zero() else f"{r.engine.degree() / 2:g}"
                    res.fail(c.label(), f"max t-degree {got}, claimed {(writhe(r.word) - 2) / 2:g}")
    res.notes.update(points=res.checked, division_failures=div_fail,
                     unit_mismatches=mismatch, degree_checked=deg_checked,
                     degree_failures=deg_fail)


@_timed("augmented")
def suite_augmented(res: SuiteResult, samples: int = 50, seed: int = DEFAULT_SEED, max_a: int = 2):
    """Prefixing full twists, plus the alternating-tail Conway forms."""
    rng = random.Random(seed)
    for _ in range(samples):
        g = random_word(rng, 3, 8, min_strands=3)
        for a in range(1, max_a + 1):
            res.checked += 1
            if not augmented_identities(a, g):
                res.fail(g, f"a={a}")
    for r in (1, 2):
        for flat in product(range(1, 4), repeat=2 * r):
            pairs = tuple((flat[2 * k], flat[2 * k + 1]) for k in range(r))
            for key, val in eta_conway_checks(pairs).items():
                if val is None:
                    continue
                res.checked += 1
                if not val:
                    res.fail(pairs, key)


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "torus": suite_torus,
    "thm1": suite_coefficients,
    "thm2": suite_coefficients,
    "coefficients": suite_coefficients,
    "omega-family": suite_omega_family,
    "oracles": suite_oracles,
    "prop10": suite_invariance,
    "invariance": suite_invariance,
    "identities": suite_identities,
    "conway-identities": suite_conway,
    "three-braid": suite_three_braid,
    "landscape": suite_landscape,
    "survey": suite_survey,
    "example1": suite_example1,
    "omega": suite_omega,
    "augmented": suite_augmented,
}


def run_suite(name: str, **cfg) -> SuiteResult:
    """Run a suite by name, passing only the options it accepts."""
    if name not in SUITES:
        raise KeyError(name)
    fn = SUITES[name]
    accepted = inspect.signature(fn).parameters
    res = fn(**{k: v for k, v in cfg.items() if k in accepted and v is not None})
    res.name = name
    return res
