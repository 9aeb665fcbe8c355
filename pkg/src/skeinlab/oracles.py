"""
Independent cross-checks for the Hecke engine.

* :func:`alexander_burau` -- det(I - reduced Burau(b)) * (1 - t) / (1 - t^n),
  the Alexander polynomial up to a unit +-s^k.
* :func:`jones_kauffman` -- Kauffman bracket state sum over all smoothings of
  the closure diagram, normalized to the Jones polynomial.

Both work in the variable ``s`` with t = s^2. Neither touches the Hecke
module, so agreement with the engine is a genuine second opinion.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .braid import BraidWord, writhe
from .laurent import LaurentPoly, exact_div

__all__ = [
    "CrossingBoundExceeded",
    "burau_matrix",
    "alexander_burau",
    "jones_kauffman",
    "bracket_state_counts",
    "unit_equal",
    "unit_normalize",
    "symmetric_normalize",
]

MAX_CROSSINGS = 24

_ZERO = LaurentPoly.zero("s")
_ONE = LaurentPoly.one("s")
_T = LaurentPoly.monomial(2, 1, "s")


class CrossingBoundExceeded(ValueError):
    pass


Matrix = List[List[LaurentPoly]]


def _eye(m: int) -> Matrix:
    return [[_ONE if i == j else _ZERO for j in range(m)] for i in range(m)]


def _gen_matrix(m: int, i: int, sign: int) -> Matrix:
    """Reduced Burau image of sigma_i^sign as an m x m matrix (m = n - 1)."""
    M = _eye(m)
    r = i - 1
    if sign > 0:
        M[r][r] = -_T
        if r > 0:
            M[r - 1][r] = _T
        if r < m - 1:
            M[r + 1][r] = _ONE
    else:
        tinv = LaurentPoly.monomial(-2, 1, "s")
        M[r][r] = -tinv
        if r > 0:
            M[r - 1][r] = _ONE
        if r < m - 1:
            M[r + 1][r] = tinv
    return M


def _matmul(A: Matrix, B: Matrix) -> Matrix:
    m = len(A)
    out = []
    for i in range(m):
        row = []
        for j in range(m):
            acc = _ZERO
            for k in range(m):
                if A[i][k] and B[k][j]:
                    acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def burau_matrix(b: BraidWord) -> Matrix:
    m = b.strands - 1
    M = _eye(m)
    for x in b.letters:
        M = _matmul(M, _gen_matrix(m, abs(x), 1 if x > 0 else -1))
    return M


def _det(M: Matrix) -> LaurentPoly:
    """Fraction-free (Bareiss) determinant with exact divisions."""
    m = len(M)
    if m == 0:
        return _ONE
    A = [row[:] for row in M]
    sign = 1
    prev = _ONE
    for k in range(m - 1):
        if A[k][k].is_zero():
            for r in range(k + 1, m):
                if not A[r][k].is_zero():
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return _ZERO
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                A[i][j] = exact_div(A[i][j] * A[k][k] - A[i][k] * A[k][j], prev)
        prev = A[k][k]
    return A[m - 1][m - 1] * sign


def alexander_burau(b: BraidWord) -> LaurentPoly:
    """Alexander polynomial of the closure, in s (t = s^2), defined up to +-s^k."""
    n = b.strands
    if n < 2:
        return _ONE
    M = burau_matrix(b)
    m = n - 1
    I_minus = [[(_ONE if i == j else _ZERO) - M[i][j] for j in range(m)] for i in range(m)]
    d = _det(I_minus)
    # (1 - t^n)/(1 - t) = 1 + t + ... + t^(n-1)
    geom = LaurentPoly({2 * k: 1 for k in range(n)}, "s")
    return exact_div(d, geom)


def unit_normalize(p: LaurentPoly) -> LaurentPoly:
    """Representative of p modulo units: lowest exponent 0, positive leading coefficient."""
    if p.is_zero():
        return p
    q = p.shift(-p.low_degree())
    return -q if q.leading_coeff() < 0 else q


def symmetric_normalize(p: LaurentPoly) -> LaurentPoly:
    """Shift so the exponents are centred on zero (requires even span)."""
    if p.is_zero():
        return p
    lo, hi = p.low_degree(), p.degree()
    if (lo + hi) % 2:
        raise ValueError("odd exponent span cannot be centred")
    return p.shift(-(lo + hi) // 2)


def unit_equal(x: LaurentPoly, y: LaurentPoly) -> bool:
    """Equality up to multiplication by +-s^k."""
    return unit_normalize(x) == unit_normalize(y)


def _closure_points(b: BraidWord):
    """Union-find skeleton of the closure diagram.

    Points are (level, position) with level taken mod the word length. Strands
    not involved in a crossing are merged once; each crossing then contributes
    four endpoints whose pairing depends on its smoothing.
    """
    n, L = b.strands, b.letters
    m = len(L)
    parent = list(range(m * n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def pid(level, pos):
        return (level % m) * n + (pos - 1)

    ends = []
    for k, x in enumerate(L):
        i = abs(x)
        for pos in range(1, n + 1):
            if pos != i and pos != i + 1:
                a, c = find(pid(k, pos)), find(pid(k + 1, pos))
                if a != c:
                    parent[a] = c
        ends.append((pid(k, i), pid(k, i + 1), pid(k + 1, i), pid(k + 1, i + 1)))
    roots = {}
    relabel = lambda a: roots.setdefault(find(a), len(roots))
    crossings = [tuple(relabel(e) for e in quad) for quad in ends]
    for p in range(m * n):
        relabel(p)
    return crossings, len(roots)


def bracket_state_counts(b: BraidWord) -> Dict[Tuple[int, int], int]:
    """Tally of states by (number of A-smoothings, loop count).

    For a positive crossing the A-smoothing joins top to bottom (the oriented
    smoothing); for a negative crossing it is the cup-cap one.
    """
    L = b.letters
    c = len(L)
    if c > MAX_CROSSINGS:
        raise CrossingBoundExceeded(f"{c} crossings exceeds the state-sum bound {MAX_CROSSINGS}")
    if c == 0:
        return {(0, b.strands): 1}
    crossings, K = _closure_points(b)
    signs = [x > 0 for x in L]
    counts: Dict[Tuple[int, int], int] = {}
    for state in range(1 << c):
        parent = list(range(K))
        comps = K
        nA = 0
        for k in range(c):
            tl, tr, bl, br = crossings[k]
            a_smooth = (state >> k) & 1
            nA += a_smooth
            vertical = a_smooth == signs[k]
            pairs = ((tl, bl), (tr, br)) if vertical else ((tl, tr), (bl, br))
            for u, v in pairs:
                while parent[u] != u:
                    u = parent[u]
                while parent[v] != v:
                    v = parent[v]
                if u != v:
                    parent[u] = v
                    comps -= 1
        key = (nA, comps)
        counts[key] = counts.get(key, 0) + 1
    return counts


def jones_kauffman(b: BraidWord) -> LaurentPoly:
    """Jones polynomial of the closure in s = t^(1/2), from the Kauffman bracket.

    <D> = sum over states of A^(#A - #B) d^(loops - 1), d = -A^2 - A^-2;
    V = (-A^3)^(-w) <D> with t = A^-4, so s = A^-2.
    """
    c = len(b.letters)
    counts = bracket_state_counts(b)
    d = LaurentPoly({2: -1, -2: -1}, "A")
    dpow = {}
    bracket = LaurentPoly.zero("A")
    for (nA, loops), cnt in counts.items():
        if loops not in dpow:
            dpow[loops] = d ** (loops - 1)
        bracket = bracket + dpow[loops].shift(nA - (c - nA)) * cnt
    w = writhe(b)
    V = bracket.shift(-3 * w) * (-1 if w % 2 else 1)
    out = {}
    for e, coeff in V.terms.items():
        if e % 2:
            raise ArithmeticError("odd power of A survived normalization")
        out[-e // 2] = coeff
    return LaurentPoly(out, "s")
