"""
Conway polynomials C_p of the two-strand torus links and their identities.

``C_p`` is the Conway polynomial of the closure of sigma_1^p in B_2. The
production value comes from the recursion ``C_{p+1} = z*C_p + C_{p-1}``
(memoized); :func:`conway_closed_form` is the binomial sum, kept as an
independent check.
"""

from __future__ import annotations

import threading
from math import comb, gcd as igcd
from typing import Dict

from .laurent import BiLaurent, InexactDivision, LaurentPoly, exact_div, gcd

__all__ = [
    "conway_torus",
    "conway_closed_form",
    "eps",
    "check_sum_rel",
    "check_prod_rel",
    "check_diff_prod",
    "check_zm_expansion",
    "check_gcd_props",
    "fibonacci_value",
    "torus_homflypt",
    "trivial_link_homflypt",
]

_memo: Dict[int, LaurentPoly] = {0: LaurentPoly.zero("z"), 1: LaurentPoly.one("z")}
_memo_top = 1
_lock = threading.Lock()


def eps(x: int) -> int:
    """(-1)**x for any integer x."""
    return -1 if x % 2 else 1


def conway_torus(p: int) -> LaurentPoly:
    """C_p(z) for any integer p.

    >>> str(conway_torus(4))
    'z^3 + 2*z'
    """
    global _memo_top
    if p < 0:
        return conway_torus(-p) * eps(p + 1)
    if p > _memo_top:
        with _lock:
            z = LaurentPoly.var_("z")
            while _memo_top < p:
                k = _memo_top
                _memo[k + 1] = z * _memo[k] + _memo[k - 1]
                _memo_top = k + 1
    return _memo[p]


def conway_closed_form(p: int) -> LaurentPoly:
    """Binomial-sum expression for C_p, with the sign rule for p <= 0."""
    if p == 0:
        return LaurentPoly.zero("z")
    if p < 0:
        return conway_closed_form(-p) * eps(p + 1)
    return LaurentPoly({p - 2 * j - 1: comb(p - 1 - j, j) for j in range((p - 1) // 2 + 1)}, "z")


C = conway_torus


def check_sum_rel(x: int, y: int) -> bool:
    """C_{x+y} == C_x C_{y+1} + C_{x-1} C_y."""
    return C(x + y) == C(x) * C(y + 1) + C(x - 1) * C(y)


def check_prod_rel(x: int, k: int) -> bool:
    """C_x C_k == sum_{j<k} (-1)^j C_{x+k-1-2j}, for k > 0."""
    if k <= 0:
        raise ValueError("product relation needs k > 0")
    rhs = LaurentPoly.zero("z")
    for j in range(k):
        rhs = rhs + C(x + k - 1 - 2 * j) * eps(j)
    return C(x) * C(k) == rhs


def check_diff_prod(x: int, y: int, p: int, q: int, kappa: int) -> bool:
    """C_x C_y - C_p C_q == (-1)^kappa (C_{x-k} C_{y-k} - C_{p-k} C_{q-k}), given x+y == p+q."""
    if x + y != p + q:
        raise ValueError("difference-of-products relation needs x + y == p + q")
    k = kappa
    lhs = C(x) * C(y) - C(p) * C(q)
    rhs = (C(x - k) * C(y - k) - C(p - k) * C(q - k)) * eps(k)
    return lhs == rhs


def check_zm_expansion(m: int, p: int) -> bool:
    """z^m C_p == sum_j binom(m, j) (-1)^j C_{m+p-2j}, for m > 0."""
    if m <= 0:
        raise ValueError("z^m expansion needs m > 0")
    rhs = LaurentPoly.zero("z")
    for j in range(m + 1):
        rhs = rhs + C(m + p - 2 * j) * (comb(m, j) * eps(j))
    return C(p).shift(m) == rhs


def check_gcd_props(a: int, b: int) -> bool:
    """gcd(C_a, C_b) == +-C_{gcd(a,b)}, and C_a divides C_{ab} when a != 0."""
    g = igcd(a, b)
    if a == 0 and b == 0:
        return conway_torus(0).is_zero()
    got = gcd(C(a), C(b))
    want = C(g)
    if got != want and got != -want:
        return False
    if a != 0:
        try:
            exact_div(C(a * b), C(a))
        except InexactDivision:
            return False
    return True


def fibonacci_value(p: int) -> int:
    """C_p(1), the p-th Fibonacci number for p >= 1."""
    return sum(C(p).terms.values())


def torus_homflypt(p: int) -> BiLaurent:
    """Closed-form Homflypt of the closure of sigma_1^p: v^p (C_{p+1} - C_{p-1} v^2) / (vz)."""
    num = BiLaurent.from_z(C(p + 1), p) - BiLaurent.from_z(C(p - 1), p + 2)
    return num.shift(-1, -1)


def trivial_link_homflypt(n: int) -> BiLaurent:
    """delta^(n-1) with delta = (v^-1 - v)/z, the value on the n-component unlink."""
    delta = BiLaurent({(-1, -1): 1, (1, -1): -1})
    return delta ** (n - 1)
