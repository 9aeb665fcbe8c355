"""
Three-strand braids: closed forms, the equal-P criterion, Murasugi-type
representatives and the equal-Jones survey.

Throughout, alpha_2 = sigma_2 sigma_1, ``nabla`` is the Conway polynomial and
Alexander/Jones values are Laurent polynomials in s with t = s^2.
"""

from __future__ import annotations

import hashlib
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .braid import BraidWord, component_count, concat, torus_word, writhe
from .coeffs import StdFormDecomp, decompose, specialize
from .conway import conway_torus, eps, torus_homflypt, trivial_link_homflypt
from .hecke import homflypt
from .laurent import BiLaurent, InexactDivision, LaurentPoly, exact_div
from .oracles import unit_equal

__all__ = [
    "OmegaClass",
    "p3_closed",
    "p3_lemma1",
    "jones3",
    "equal_p_decision",
    "landscape_check",
    "no_valley",
    "omega_rep",
    "omega_alexander",
    "omega_grid",
    "augmented_identities",
    "eta_word",
    "eta_conway_checks",
    "example1_instance",
    "lemma2_predicted_deltas",
    "enumerate_b3",
    "survey_equal_v",
    "SurveyReport",
]

C = conway_torus
S = "s"


def _require_b3(b: BraidWord) -> None:
    if b.strands != 3:
        raise ValueError(f"expected a word in B_3, got B_{b.strands}")


def _t(k) -> LaurentPoly:
    """t^k with t = s^2; half-integer k allowed via 2k."""
    return LaurentPoly.monomial(int(2 * k), 1, S)


def p3_closed(b: BraidWord, nabla: LaurentPoly) -> StdFormDecomp:
    """p_0 = C_{w+1} - nabla, p_2 = C_{w-1} - nabla, p_1 = z^2 nabla - p_0 - p_2."""
    _require_b3(b)
    w = writhe(b)
    p0 = C(w + 1) - nabla
    p2 = C(w - 1) - nabla
    p1 = nabla.shift(2) - p0 - p2
    return StdFormDecomp(3, w, (p0, p1, p2))


def p3_lemma1(b: BraidWord, nabla: Optional[LaurentPoly] = None) -> BiLaurent:
    """P = P(T_w) P(O_2) - nabla v^w (P(O_3) - 1)."""
    _require_b3(b)
    if nabla is None:
        nabla = homflypt(b).at_v1()
    w = writhe(b)
    O2, O3 = trivial_link_homflypt(2), trivial_link_homflypt(3)
    return torus_homflypt(w) * O2 - BiLaurent.from_z(nabla, w) * (O3 - 1)


def jones3(b: BraidWord, alexander: Optional[LaurentPoly] = None) -> LaurentPoly:
    """V = t^((w-2)/2) (t^(w+1) + (-1)^w (1+t+t^2)) - (1+t+t^2) t^(w-1) Delta."""
    _require_b3(b)
    if alexander is None:
        alexander = specialize(homflypt(b), "alexander")
    w = writhe(b)
    G = LaurentPoly({0: 1, 2: 1, 4: 1}, S)
    first = (_t(w + 1) + G * eps(w)).shift(w - 2)
    return first - (G * alexander).shift(2 * (w - 1))


def equal_p_decision(b: BraidWord, c: BraidWord,
                     nabla_b: Optional[LaurentPoly] = None,
                     nabla_c: Optional[LaurentPoly] = None) -> Tuple[bool, Optional[str]]:
    """Predict whether two B_3 closures share a Homflypt polynomial.

    Returns ``(equal, case)`` with case ``"i"``, ``"ii"``, ``"iii"`` or None.
    """
    _require_b3(b)
    _require_b3(c)
    if nabla_b is None:
        nabla_b = homflypt(b).at_v1()
    if nabla_c is None:
        nabla_c = homflypt(c).at_v1()
    wb, wc = writhe(b), writhe(c)
    if wb < wc:
        wb, wc = wc, wb
        nabla_b, nabla_c = nabla_c, nabla_b
    if nabla_b != nabla_c:
        return False, None
    if wb == wc:
        return True, "i"
    if wb == wc + 2 and nabla_b == C(wb - 1):
        return True, "ii"
    if wb == 2 and wc == -2 and nabla_b == 1:
        return True, "iii"
    return False, None


def no_valley(degrees: Sequence[Optional[int]]) -> bool:
    """True when the degree profile rises then falls (None is below every degree).

    Equivalently the indices split into a prefix where degrees do not decrease
    and a suffix where they do not increase.
    """
    key = [float("-inf") if d is None else d for d in degrees]
    for split in range(len(key) + 1):
        left, right = key[:split], key[split:]
        if all(x <= y for x, y in zip(left, left[1:])) and all(
            x >= y for x, y in zip(right, right[1:])
        ):
            return True
    return False


def _deg(p: LaurentPoly) -> Optional[int]:
    return None if p.is_zero() else p.degree()


def landscape_check(d: StdFormDecomp) -> bool:
    """deg p_0 <= deg p_1 or deg p_2 <= deg p_1, with the zero polynomial lowest."""
    if d.n != 3:
        raise ValueError("landscape check is stated for three strands")
    lo = float("-inf")
    d0, d1, d2 = (lo if x is None else x for x in map(_deg, d.p))
    simple = d0 <= d1 or d2 <= d1
    if simple != no_valley([_deg(p) for p in d.p]):
        raise AssertionError("landscape criteria disagree")
    return simple


# -- representatives of the seven conjugacy families ---------------------------

@dataclass(frozen=True)
class OmegaClass:
    """One parameter point of family ``index`` (0..6).

    ``d`` is any integer; ``e``/``E`` are used by families 4 and 5; ``pairs``
    lists (e_k, E_k) for the alternating tail of family 6.
    """

    index: int
    d: int
    e: int = 0
    E: int = 0
    pairs: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.index not in range(7):
            raise ValueError("family index must be in 0..6")
        if self.index == 4 and self.e < 1:
            raise ValueError("family 4 needs e >= 1")
        if self.index == 5 and self.E < 1:
            raise ValueError("family 5 needs E >= 1")
        if self.index == 6:
            if not self.pairs:
                raise ValueError("family 6 needs r >= 1 pairs")
            if any(a < 1 or b < 1 for a, b in self.pairs):
                raise ValueError("family 6 exponents must be positive")

    def label(self) -> str:
        extra = ""
        if self.index == 4:
            extra = f",e={self.e}"
        elif self.index == 5:
            extra = f",E={self.E}"
        elif self.index == 6:
            extra = ",pairs=" + ";".join(f"{a}:{b}" for a, b in self.pairs)
        return f"Omega{self.index}(d={self.d}{extra})"


def _alpha2(k: int) -> BraidWord:
    return torus_word(k, 3)


def eta_word(pairs: Sequence[Tuple[int, int]]) -> BraidWord:
    """prod_k sigma_2^(-e_k) sigma_1^(E_k)."""
    letters: Tuple[int, ...] = ()
    for a, b in pairs:
        letters += (-2,) * a + (1,) * b
    return BraidWord(3, letters)


def omega_rep(c: OmegaClass) -> BraidWord:
    d = c.d
    if c.index == 0:
        return _alpha2(3 * d)
    if c.index == 1:
        return _alpha2(3 * d + 1)
    if c.index == 2:
        return _alpha2(3 * d + 2)
    if c.index == 3:
        return concat(_alpha2(3 * d + 1), BraidWord(3, (2,)))
    if c.index == 4:
        return concat(_alpha2(3 * d), BraidWord(3, (-2,) * c.e))
    if c.index == 5:
        return concat(_alpha2(3 * d), BraidWord(3, (1,) * c.E))
    return concat(_alpha2(3 * d), eta_word(c.pairs))


_G = LaurentPoly({0: 1, 2: 1, 4: 1}, S)


def _twist_term(d: int, x: int) -> LaurentPoly:
    """t (t^3d - 1)(t^(3d+x) - (-1)^x) / (G t^3d t^(x/2))."""
    num = _t(1) * (_t(3 * d) - 1) * (_t(3 * d + x) - eps(x))
    return exact_div(num, _G).shift(-6 * d - x)


def omega_alexander(c: OmegaClass, eta_alexander: Optional[LaurentPoly] = None) -> LaurentPoly:
    """Closed-form Alexander polynomial of the family representative.

    Division by G must be exact; :class:`InexactDivision` signals a
    transcription or parameter problem. Family 6 adds the Alexander polynomial
    of its tail, taken from the engine unless supplied.
    """
    d = c.d
    i = c.index
    if i == 0:
        return exact_div(_t(1) * (_t(3 * d) - 1) ** 2, _G).shift(-6 * d)
    if i == 1:
        return exact_div(_t(1) * (_t(6 * d + 2) + _t(3 * d + 1) + 1), _G).shift(-(6 * d + 2))
    if i == 2:
        return exact_div(_t(1) * (_t(6 * d + 4) + _t(3 * d + 2) + 1), _G).shift(-(6 * d + 4))
    if i == 3:
        return exact_div(_t(1) * (_t(6 * d + 3) - 1), _G).shift(-(6 * d + 2) - 1)
    if i == 4:
        return _twist_term(d, -c.e)
    if i == 5:
        return _twist_term(d, c.E)
    eta = eta_word(c.pairs)
    if eta_alexander is None:
        eta_alexander = specialize(homflypt(eta), "alexander")
    return eta_alexander + _twist_term(d, writhe(eta))


def omega_grid(d_range=range(-3, 4), e_max=4, r_max=2, ek_max=3) -> Iterator[OmegaClass]:
    """Every parameter point of the seven families inside the given box."""
    from itertools import product

    for d in d_range:
        for i in range(4):
            yield OmegaClass(i, d)
        for e in range(1, e_max + 1):
            yield OmegaClass(4, d, e=e)
        for E in range(1, e_max + 1):
            yield OmegaClass(5, d, E=E)
        for r in range(1, r_max + 1):
            for flat in product(range(1, ek_max + 1), repeat=2 * r):
                pairs = tuple((flat[2 * k], flat[2 * k + 1]) for k in range(r))
                yield OmegaClass(6, d, pairs=pairs)


@dataclass
class OmegaResult:
    cls: OmegaClass
    word: BraidWord
    engine: LaurentPoly
    closed: Optional[LaurentPoly]
    division_failed: bool
    unit_equal: Optional[bool]
    max_degree_claim: Optional[bool]

    def to_json(self) -> dict:
        return {
            "class": self.cls.label(),
            "word": str(self.word),
            "engine_alexander": self.engine.to_json(),
            "closed_alexander": None if self.closed is None else self.closed.to_json(),
            "division_failed": self.division_failed,
            "unit_equal": self.unit_equal,
            "max_degree_claim": self.max_degree_claim,
        }


def omega_check(c: OmegaClass) -> OmegaResult:
    """Compare closed form and engine for one representative.

    The degree claim (max t-degree of Delta is (w-2)/2, families 0..5) is
    evaluated on the engine value, which is symmetric up to sign; it is None
    for family 6 and False when Delta vanishes.
    """
    word = omega_rep(c)
    engine = specialize(homflypt(word), "alexander")
    try:
        closed = omega_alexander(c)
        failed = False
    except InexactDivision:
        closed, failed = None, True
    same = None if closed is None else unit_equal(closed, engine)
    claim = None
    if c.index != 6:
        claim = (not engine.is_zero()) and engine.degree() == writhe(word) - 2
    return OmegaResult(c, word, engine, closed, failed, same, claim)


# -- augmented words ------------------------------------------------------------

def augmented_identities(a: int, g: BraidWord) -> bool:
    """Conway and Homflypt values of alpha_2^(3) g and alpha_2^(+-3a) g from those of g."""
    _require_b3(g)
    if a < 1:
        raise ValueError("a must be positive")
    w = writhe(g)
    Pg = homflypt(g)
    ng = Pg.at_v1()

    def P(word):
        return homflypt(word)

    full = _alpha2(3)
    up = _alpha2(3 * a)
    down = _alpha2(-3 * a)
    P1, Pu, Pd = P(concat(full, g)), P(concat(up, g)), P(concat(down, g))

    ok = P1.at_v1() == ng + C(w + 5) - C(w + 1)
    nu = ng
    nd = ng
    for j in range(1, a + 1):
        nu = nu + C(w + 6 * j - 1) - C(w + 6 * j - 5)
        nd = nd + C(w - 6 * j + 1) - C(w - 6 * j + 5)
    ok &= Pu.at_v1() == nu
    ok &= Pd.at_v1() == nd

    ok &= P1 == Pg.shift(6, 0) + torus_homflypt(w + 5) - torus_homflypt(w + 1).shift(6, 0)
    hu = Pg.shift(6 * a, 0)
    hd = Pg.shift(-6 * a, 0)
    for j in range(1, a + 1):
        hu = hu + torus_homflypt(w + 6 * j - 1).shift(6 * a - 6 * j, 0)
        hu = hu - torus_homflypt(w + 6 * j - 5).shift(6 + 6 * a - 6 * j, 0)
        hd = hd + torus_homflypt(w - 6 * j + 1).shift(6 * j - 6 * a, 0)
        hd = hd - torus_homflypt(w - 6 * j + 5).shift(6 * j - 6 * a - 6, 0)
    ok &= Pu == hu
    ok &= Pd == hd
    return bool(ok)


def eta_conway_checks(pairs: Sequence[Tuple[int, int]]) -> Dict[str, Optional[bool]]:
    """Conway/Alexander forms for gamma = prod_k sigma_2^(-e_k2) sigma_1^(e_k1).

    ``pairs`` holds (e_k2, e_k1). Returns results keyed ``"r2_product"`` (exact
    formula, r = 2 only), ``"conway_leading"`` and ``"alexander_leading"``
    (two leading coefficients, needs both exponent sums > 1); a key maps to
    None when its hypotheses fail.
    """
    g = eta_word(pairs)
    P = homflypt(g)
    nabla = P.at_v1()
    delta = specialize(P, "alexander")
    r = len(pairs)
    E2 = sum(a for a, _ in pairs)
    E1 = sum(b for _, b in pairs)
    E = E1 + E2
    sgn = eps(E2 + 1)
    out: Dict[str, Optional[bool]] = {"r2_product": None, "conway_leading": None,
                                      "alexander_leading": None}
    if r == 2:
        prod = LaurentPoly.one("z")
        for a, b in pairs:
            prod = prod * C(a) * C(b)
        out["r2_product"] = nabla == (C(E2) * C(E1) - prod) * sgn
    if E1 > 1 and E2 > 1:
        x = nabla * sgn
        top = x.coeff(E - 2) == 1 and (x.is_zero() or x.degree() == E - 2)
        nxt = x.coeff(E - 4) == (E - 3) - r
        out["conway_leading"] = top and nxt
        y = delta * sgn
        out["alexander_leading"] = (
            not y.is_zero() and y.degree() == E - 2 and y.coeff(E - 2) == 1
            and y.coeff(E - 4) == -(r + 1)
        )
    return out


def example1_instance(x: int, y: int) -> Tuple[BraidWord, BraidWord]:
    """beta = alpha_2^(3x) sigma_2^(-3x-3y-1) sigma_1 and gamma with 3y in place of 3x."""
    if not (x > y > 0) or (x - y) % 2:
        raise ValueError("need x > y > 0 with x = y mod 2")
    tail = BraidWord(3, (-2,) * (3 * x + 3 * y + 1) + (1,))
    return concat(_alpha2(3 * x), tail), concat(_alpha2(3 * y), tail)


def lemma2_predicted_deltas(k: int, p: int, components: int) -> Tuple[LaurentPoly, LaurentPoly]:
    """Predicted Alexander polynomials (Delta_beta, Delta_gamma) for an equal-Jones pair.

    Knots (``components == 1``): k = 2, writhes a = 2(4p+1), b = a - 4.
    Two-component links: k odd > 1, a = k(4p+3), b = a - 2k.
    """
    if components == 1:
        if k != 2 or p < 0:
            raise ValueError("knot case needs k = 2 and p >= 0")
        a = 2 * (4 * p + 1)
        if p == 0:
            one = LaurentPoly.one(S)
            return one, one
        block = LaurentPoly({0: 1, 2: -1, 6: 1}, S)  # 1 - t + t^3
        top = _t(8 * p)
        for j in range(2 * p):
            top = top + (block * _t(4 * j)) * eps(j)
        low = LaurentPoly({0: 1, 4: -1}, S)
        for j in range(2 * p - 1):
            low = low + (block * _t(4 * j + 3)) * eps(j)
        b = a - 2 * k
        return top.shift(-(a - 2)), low.shift(-b)
    if components == 2:
        if k <= 1 or k % 2 == 0 or p < 0:
            raise ValueError("two-component case needs odd k > 1 and p >= 0")
        a = k * (4 * p + 3)
        b = a - 2 * k
        inner = LaurentPoly.zero(S)
        for x in range(k):
            inner = inner + _t(3 * x) * LaurentPoly({0: -1, 2: 1}, S)
        bracket = inner + _t(3 * k - 1) * (_t(k) - 1)
        top = inner * _t(4 * k * p)
        mid = LaurentPoly.zero(S)
        for j in range(p):
            mid = mid + bracket * _t(4 * k * j)
        top = top + mid
        low = -(1 - _t(k)) + _t(k + 1) * mid
        return top.shift(-(a - 2)), low.shift(-b)
    raise ValueError("components must be 1 or 2")


# -- enumeration and the equal-Jones survey --------------------------------------

_LETTERS = (-2, -1, 1, 2)


def _is_necklace_min(word: Tuple[int, ...]) -> bool:
    L = len(word)
    for r in range(1, L):
        rot = word[r:] + word[:r]
        if rot < word:
            return False
    return True


def enumerate_b3(max_len: int) -> Iterator[BraidWord]:
    """Canonical B_3 words of length <= max_len, one per rotation class.

    Only cyclically reduced words are produced (x never followed by -x, also
    across the wrap), and of each rotation class only the lexicographically
    least rotation is kept. Every word is conjugate to one listed here of no
    greater length.
    """
    yield BraidWord(3, ())
    stack: List[int] = []

    def rec(L):
        if len(stack) == L:
            if stack[-1] != -stack[0] and _is_necklace_min(tuple(stack)):
                yield BraidWord(3, tuple(stack))
            return
        for x in _LETTERS:
            if stack and x == -stack[-1]:
                continue
            # a necklace minimum starts with its smallest letter
            if stack and x < stack[0]:
                continue
            stack.append(x)
            yield from rec(L)
            stack.pop()

    for L in range(1, max_len + 1):
        yield from rec(L)


def poly_hash(p) -> str:
    return hashlib.sha256(p.dumps().encode()).hexdigest()[:16]


@dataclass
class SurveyRow:
    word: BraidWord
    w: int
    mu: int
    V: LaurentPoly
    P: BiLaurent
    bucket: int = -1


@dataclass
class SurveyReport:
    rows: List[SurveyRow]
    buckets: int
    shared_buckets: int
    mixed_writhe_buckets: int
    violations: List[Tuple[BraidWord, BraidWord]] = field(default_factory=list)
    lemma2_issues: List[Tuple[BraidWord, BraidWord, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.lemma2_issues

    def summary(self) -> dict:
        return {
            "words": len(self.rows),
            "buckets": self.buckets,
            "shared_buckets": self.shared_buckets,
            "mixed_writhe_buckets": self.mixed_writhe_buckets,
            "violations": len(self.violations),
            "lemma2_issues": len(self.lemma2_issues),
        }


def survey_row(b: BraidWord) -> SurveyRow:
    P = homflypt(b)
    return SurveyRow(b, writhe(b), component_count(b), specialize(P, "jones"), P)


def _lemma2_screen(hi: SurveyRow, lo: SurveyRow) -> Optional[str]:
    """Necessary conditions on an equal-Jones pair with w(hi) > max(w(lo), -1)."""
    a, b = hi.w, lo.w
    if hi.mu == 3:
        return "three-component pair"
    if (a - b) % 2:
        return "odd writhe gap"
    k = (a - b) // 2
    nabla = hi.P.at_v1()
    if k == 1:
        return None if nabla == C(a - 1) else "k=1 but nabla != C_(a-1)"
    if hi.mu == 1:
        if k != 2 or a < 2:
            return f"knot pair with k={k}, a={a}"
        if a == 2:
            ok = nabla == 1 and lo.P.at_v1() == 1
            return None if ok else "a=2 knot pair without trivial nabla"
        if (a - 2) % 8:
            return f"knot pair with a={a} not of the form 2(4p+1)"
        p = (a - 2) // 8
        db, dg = lemma2_predicted_deltas(2, p, 1)
        got_b = specialize(hi.P, "alexander")
        got_g = specialize(lo.P, "alexander")
        return None if unit_equal(db, got_b) and unit_equal(dg, got_g) else "Delta mismatch (knot)"
    if k % 2 == 0 or a % k or (a // k - 3) % 4:
        return f"two-component pair with k={k}, a={a}"
    p = (a // k - 3) // 4
    db, dg = lemma2_predicted_deltas(k, p, 2)
    got_b = specialize(hi.P, "alexander")
    got_g = specialize(lo.P, "alexander")
    return None if unit_equal(db, got_b) and unit_equal(dg, got_g) else "Delta mismatch (link)"


def survey_equal_v(max_len: int, rows: Optional[List[SurveyRow]] = None) -> SurveyReport:
    """Bucket all canonical B_3 words by Jones polynomial and look for P disagreements."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    if rows is None:
        rows = [survey_row(b) for b in enumerate_b3(max_len)]
    groups: Dict[str, List[SurveyRow]] = defaultdict(list)
    order: List[str] = []
    for row in rows:
        key = row.V.dumps()
        if key not in groups:
            order.append(key)
        groups[key].append(row)
    report = SurveyReport(rows, len(groups), 0, 0)
    for bid, key in enumerate(order):
        members = groups[key]
        for row in members:
            row.bucket = bid
        if len(members) > 1:
            report.shared_buckets += 1
        first = members[0]
        for row in members[1:]:
            if row.P != first.P:
                report.violations.append((first.word, row.word))
        by_w: Dict[int, SurveyRow] = {}
        for row in members:
            by_w.setdefault(row.w, row)
        if len(by_w) > 1:
            report.mixed_writhe_buckets += 1
            ws = sorted(by_w)
            for i, wa in enumerate(ws):
                for wb in ws[:i]:
                    if wa > max(wb, -1):
                        issue = _lemma2_screen(by_w[wa], by_w[wb])
                        if issue:
                            report.lemma2_issues.append((by_w[wa].word, by_w[wb].word, issue))
    return report
