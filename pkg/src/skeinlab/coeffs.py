"""
Standard-form coefficient polynomials of the Homflypt polynomial.

For a braid word in B_n with writhe w,

    P = v^w * sum_j p_j(z) v^(2j) / (v z)^(n-1),   j = 0 .. n-1,

with each p_j an ordinary polynomial; ``h_j = p_j / z^(n-1)`` are the Laurent
coefficients. This module extracts them, specializes P to the Conway, Jones
and Alexander polynomials, and checks the relations the coefficients obey.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import List, Sequence

from .braid import BraidWord, component_count, mirror, stabilize, writhe
from .conway import conway_torus, eps
from .hecke import homflypt
from .laurent import BiLaurent, LaurentPoly, exact_div, substitute

__all__ = [
    "NotStandardForm",
    "StdFormDecomp",
    "FamilyRelation",
    "decompose",
    "decompose_word",
    "laurent_coeffs",
    "specialize",
    "conway",
    "jones",
    "alexander",
    "conway_shift_q0",
    "conway_shift_q2",
    "thm1_check",
    "thm2_check",
    "family_weights",
    "verify_omega_family",
    "coeff_props_check",
]

C = conway_torus
Z0 = LaurentPoly.zero("z")


class NotStandardForm(ValueError):
    """P does not fit the standard form for the claimed (n, w)."""


@dataclass(frozen=True)
class StdFormDecomp:
    n: int
    w: int
    p: tuple

    def reconstruct(self) -> BiLaurent:
        num = BiLaurent.zero()
        for j, pj in enumerate(self.p):
            num = num + BiLaurent.from_z(pj, self.w + 2 * j)
        return num.shift(-(self.n - 1), -(self.n - 1))

    def coeff(self, j: int) -> LaurentPoly:
        """p_j, with p_j = 0 outside 0 .. n-1."""
        return self.p[j] if 0 <= j < len(self.p) else Z0

    def to_json(self) -> dict:
        return {"n": self.n, "w": self.w, "p": [pj.to_json() for pj in self.p]}


@dataclass(frozen=True)
class FamilyRelation:
    """Weights A_j and the right-hand side Omega of sum_j A_j h_j = Omega."""

    A: tuple
    rhs: LaurentPoly

    def holds_for(self, h: Sequence[LaurentPoly]) -> bool:
        total = Z0
        for a, hj in zip(self.A, h):
            total = total + a * hj
        return total == self.rhs


def decompose(P: BiLaurent, n: int, w: int) -> StdFormDecomp:
    """Extract p_0 .. p_{n-1} from P for a braid in B_n of writhe w."""
    Q = P.shift(n - 1 - w, n - 1)
    parts = [dict() for _ in range(n)]
    for (a, b), c in Q.terms.items():
        if a % 2 or not 0 <= a <= 2 * (n - 1):
            raise NotStandardForm(f"v-exponent {a - (n - 1 - w)} out of range for n={n}, w={w}")
        if b < 0:
            raise NotStandardForm(f"z-exponent {b - (n - 1)} too negative for n={n}")
        parts[a // 2][b] = c
    return StdFormDecomp(n, w, tuple(LaurentPoly(t, "z") for t in parts))


def decompose_word(b: BraidWord) -> StdFormDecomp:
    return decompose(homflypt(b), b.strands, writhe(b))


def laurent_coeffs(d: StdFormDecomp) -> List[LaurentPoly]:
    return [pj.shift(-(d.n - 1)) for pj in d.p]


_S = LaurentPoly.var_("s")
_SUB_Z = LaurentPoly({1: 1, -1: -1}, "s")  # s - 1/s


def _specialize_at(P: BiLaurent, v_value: LaurentPoly) -> LaurentPoly:
    # clear negative z-powers, substitute, then divide (s - 1/s)^k back out
    k = max(0, -min(P.z_exponents(), default=0))
    num = substitute(P.shift(0, k), v_value, _SUB_Z)
    return exact_div(num, _SUB_Z**k)


def specialize(P: BiLaurent, which: str) -> LaurentPoly:
    """Conway (in z), Jones or Alexander (in s with t = s^2) specialization of P."""
    if which == "conway":
        return P.at_v1()
    if which == "jones":
        return _specialize_at(P, _S**2)
    if which == "alexander":
        return _specialize_at(P, LaurentPoly.one("s"))
    raise ValueError(f"unknown specialization {which!r}")


def conway(b: BraidWord) -> LaurentPoly:
    return specialize(homflypt(b), "conway")


def jones(b: BraidWord) -> LaurentPoly:
    return specialize(homflypt(b), "jones")


def alexander(b: BraidWord) -> LaurentPoly:
    return specialize(homflypt(b), "alexander")


def conway_shift_q0(j: int) -> LaurentPoly:
    """(C_{2j-3} - 1)/z^2 as a binomial sum, j >= 3."""
    return LaurentPoly({2 * j - 6 - 2 * i: comb(2 * j - 4 - i, i) for i in range(j - 2)}, "z")


def conway_shift_q2(j: int) -> LaurentPoly:
    """(C_{2j-1} - 1)/z^2 as a binomial sum, j >= 1."""
    return LaurentPoly({2 * j - 4 - 2 * i: comb(2 * j - 2 - i, i) for i in range(j - 1)}, "z")


def _q_sums(d: StdFormDecomp):
    q0 = q2 = Z0
    q0_div = q2_div = Z0
    z2 = LaurentPoly.monomial(2)
    for j in range(3, d.n):
        pj = d.p[j]
        q0 = q0 + conway_shift_q0(j) * pj
        q2 = q2 + conway_shift_q2(j) * pj
        q0_div = q0_div + exact_div(C(2 * j - 3) - 1, z2) * pj
        q2_div = q2_div + exact_div(C(2 * j - 1) - 1, z2) * pj
    return q0, q2, q0_div, q2_div


def thm1_check(b: BraidWord, d: StdFormDecomp | None = None, nabla: LaurentPoly | None = None) -> bool:
    """Lowest three coefficients from writhe, Conway polynomial and the higher p_j.

    (i)   p_0 = z^(n-3) (C_{w+4-n} - nabla) - q_0
    (ii)  p_1 = z^(n-1) nabla - p_0 - p_2 - sum_{j>=3} p_j
    (iii) p_2 = z^(n-3) (C_{w+2-n} - nabla) - q_2

    Coefficients past n-1 count as zero, which covers one and two strands.
    """
    if d is None:
        P = homflypt(b)
        d = decompose(P, b.strands, writhe(b))
        nabla = P.at_v1()
    elif nabla is None:
        nabla = d.reconstruct().at_v1()
    n, w = d.n, d.w
    q0, q2, q0_div, q2_div = _q_sums(d)
    if q0 != q0_div or q2 != q2_div:
        return False
    p0 = (C(w + 4 - n) - nabla).shift(n - 3) - q0
    p2 = (C(w + 2 - n) - nabla).shift(n - 3) - q2
    rest = Z0
    for j in range(3, n):
        rest = rest + d.p[j]
    p1 = nabla.shift(n - 1) - p0 - p2 - rest
    return p0 == d.coeff(0) and p1 == d.coeff(1) and p2 == d.coeff(2)


def thm2_check(b: BraidWord, kappa_range=range(-6, 7), d: StdFormDecomp | None = None) -> bool:
    """The two linear relations on the h_j and the derived one-parameter family.

        sum_j C_{2j-3} h_j = C_{4+w-n}
        sum_j C_{2j-1} h_j = C_{2+w-n}
        sum_j C_{2j-1-k} h_j = (-1)^k C_{k+2+w-n}     for every k in ``kappa_range``

    Both sides are multiplied by z^(n-1) so everything stays polynomial.
    """
    if d is None:
        d = decompose_word(b)
    n, w = d.n, d.w

    def lhs(offset):
        total = Z0
        for j, pj in enumerate(d.p):
            total = total + C(2 * j + offset) * pj
        return total

    ok = lhs(-3) == C(4 + w - n).shift(n - 1)
    ok = ok and lhs(-1) == C(2 + w - n).shift(n - 1)
    for k in kappa_range:
        if not ok:
            break
        ok = lhs(-1 - k) == (C(k + 2 + w - n) * eps(k)).shift(n - 1)
    return ok


def family_weights(A0: LaurentPoly, A1: LaurentPoly, n: int) -> List[LaurentPoly]:
    """A_j = (A_0 C_{2-2j} - A_1 C_{-2j}) / z for j = 0 .. n-1."""
    z = LaurentPoly.var_("z")
    return [exact_div(A0 * C(2 - 2 * j) - A1 * C(-2 * j), z) for j in range(n)]


def verify_omega_family(A0: LaurentPoly, A1: LaurentPoly, b: BraidWord,
                        d: StdFormDecomp | None = None) -> bool:
    """sum_j A_j h_j equals (A_0 C_{k+3} - A_1 C_{k+1}) / z at k = w - n."""
    if d is None:
        d = decompose_word(b)
    kappa = d.w - d.n
    z = LaurentPoly.var_("z")
    rel = FamilyRelation(
        tuple(family_weights(A0, A1, d.n)),
        exact_div(A0 * C(kappa + 3) - A1 * C(kappa + 1), z),
    )
    return rel.holds_for(laurent_coeffs(d))


def coeff_props_check(b: BraidWord) -> bool:
    """Mirror relation and both stabilization shift rules for the p_j.

    mirror:   p_{j,mirror}(z) = (-1)^(n-1) p_{n-1-j}(-z) = (-1)^(w+n-1) p_{n-1-j}(z)
    b s_n:    p_j -> z p_j, new top coefficient zero
    b s_n^-1: p_0 -> 0, p_j -> z p_{j-1}
    """
    n = b.strands
    d = decompose_word(b)
    dm = decompose_word(mirror(b))
    for j in range(n):
        other = d.p[n - 1 - j]
        if dm.p[j] != other.negate_var() * eps(n - 1):
            return False
        if dm.p[j] != other * eps(d.w + n - 1):
            return False
    dp = decompose_word(stabilize(b, 1))
    if list(dp.p) != [pj.shift(1) for pj in d.p] + [Z0]:
        return False
    dn = decompose_word(stabilize(b, -1))
    if list(dn.p) != [Z0] + [pj.shift(1) for pj in d.p]:
        return False
    return True


def sum_identity_holds(d: StdFormDecomp, nabla: LaurentPoly) -> bool:
    """sum_j p_j == z^(n-1) nabla."""
    total = Z0
    for pj in d.p:
        total = total + pj
    return total == nabla.shift(d.n - 1)


def words_report(b: BraidWord) -> dict:
    """Everything the ``invariants`` command prints for one braid word."""
    P = homflypt(b)
    n, w = b.strands, writhe(b)
    d = decompose(P, n, w)
    return {
        "n": n,
        "w": w,
        "mu": component_count(b),
        "P": P,
        "decomp": d,
        "h": laurent_coeffs(d),
        "conway": specialize(P, "conway"),
        "jones": specialize(P, "jones"),
        "alexander": specialize(P, "alexander"),
    }
