"""
Homflypt polynomial of braid closures via the Hecke algebra.

The braid word is sent into H_n (basis T_w, w in S_n, with T_i^2 = z T_i + 1)
by sigma_i -> v T_i and sigma_i^-1 -> v^-1 (T_i - z). The Ocneanu trace is
computed with a formal parameter tau and the result is normalized as

    P = delta^(n-1) * tr(rho(b)),   delta = (v^-1 - v)/z,  tau = z/(1 - v^2).

Permutations are tuples in one-line notation. Right multiplication by s_i
swaps the entries at positions i and i+1; it lengthens w exactly when
w[i-1] < w[i].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Dict, Tuple

from .braid import BraidWord, is_clustered, psi, syllables
from .conway import conway_torus, torus_homflypt
from .laurent import BiLaurent, exact_div

__all__ = [
    "HeckeElement",
    "TracePoly",
    "hecke_identity",
    "hecke_mul_gen",
    "hecke_of_word",
    "ocneanu_trace",
    "basis_trace",
    "normalize_trace",
    "homflypt",
    "homflypt_via_elements",
    "check_skein_triple",
    "check_reduction_formulas",
    "check_clustered_product",
]

Perm = Tuple[int, ...]
ZPoly = Dict[int, int]


@dataclass
class HeckeElement:
    """Linear combination of basis elements T_w with BiLaurent coefficients."""

    n: int
    terms: Dict[Perm, BiLaurent] = field(default_factory=dict)

    def __post_init__(self):
        for w in self.terms:
            if len(w) != self.n:
                raise ValueError(f"permutation {w} not in S_{self.n}")
        self.terms = {w: c for w, c in self.terms.items() if not c.is_zero()}

    def __eq__(self, other) -> bool:
        return isinstance(other, HeckeElement) and self.n == other.n and self.terms == other.terms


@dataclass
class TracePoly:
    """Polynomial in the formal trace parameter tau; ``coeffs[k]`` multiplies tau^k."""

    n: int
    coeffs: Dict[int, BiLaurent] = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {k: c for k, c in self.coeffs.items() if not c.is_zero()}
        if any(k < 0 or k > self.n - 1 for k in self.coeffs):
            raise ValueError("tau-degree exceeds n - 1")

    def __eq__(self, other) -> bool:
        return isinstance(other, TracePoly) and self.coeffs == other.coeffs


def _identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def _swap(w: Perm, i: int) -> Perm:
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def hecke_identity(n: int) -> HeckeElement:
    return HeckeElement(n, {_identity(n): BiLaurent.one()})


def hecke_mul_gen(x: HeckeElement, i: int, sign: int = 1) -> HeckeElement:
    """Right-multiply ``x`` by rho(sigma_i^sign)."""
    if not 1 <= i <= x.n - 1:
        raise ValueError(f"generator index {i} out of range for H_{x.n}")
    acc: Dict[Perm, BiLaurent] = {}

    def put(w, c):
        prev = acc.get(w)
        acc[w] = c if prev is None else prev + c

    for w, c in x.terms.items():
        ws = _swap(w, i)
        ascent = w[i - 1] < w[i]
        if sign > 0:
            c = c.shift(1, 0)
            if ascent:
                put(ws, c)
            else:
                put(w, c.shift(0, 1))
                put(ws, c)
        else:
            c = c.shift(-1, 0)
            # T_w (T_i - z): an ascent gives T_ws - z T_w, a descent collapses to T_ws
            put(ws, c)
            if ascent:
                put(w, -c.shift(0, 1))
    return HeckeElement(x.n, acc)


def hecke_of_word(b: BraidWord) -> HeckeElement:
    x = hecke_identity(b.strands)
    for letter in b.letters:
        x = hecke_mul_gen(x, abs(letter), 1 if letter > 0 else -1)
    return x


# Integer-coefficient machinery shared by the trace table and the fast path.

def _zp_add(acc: Dict[Perm, ZPoly], w: Perm, poly: ZPoly, shift: int = 0, scale: int = 1) -> None:
    target = acc.get(w)
    if target is None:
        target = acc[w] = {}
    for e, c in poly.items():
        k = e + shift
        r = target.get(k, 0) + scale * c
        if r:
            target[k] = r
        else:
            target.pop(k, None)
    if not target:
        del acc[w]


def _mul_T(elem: Dict[Perm, ZPoly], i: int, inverse: bool = False) -> Dict[Perm, ZPoly]:
    """Right-multiply by T_i, or by T_i - z when ``inverse``."""
    out: Dict[Perm, ZPoly] = {}
    for w, poly in elem.items():
        ws = _swap(w, i)
        ascent = w[i - 1] < w[i]
        if not inverse:
            _zp_add(out, ws, poly)
            if not ascent:
                _zp_add(out, w, poly, shift=1)
        else:
            _zp_add(out, ws, poly)
            if ascent:
                _zp_add(out, w, poly, shift=1, scale=-1)
    return out


_trace_memo: Dict[Perm, Dict[int, ZPoly]] = {}


def basis_trace(w: Perm) -> Dict[int, ZPoly]:
    """tr(T_w) as ``{tau_degree: {z_exp: coeff}}``. Memoized per permutation."""
    hit = _trace_memo.get(w)
    if hit is not None:
        return hit
    n = len(w)
    if n == 1:
        result = {0: {0: 1}}
    elif w[-1] == n:
        result = basis_trace(w[:-1])
    else:
        # w = u * s_{n-1} s_{n-2} ... s_j, with n sitting at position j of w
        j = w.index(n) + 1
        u = w[: j - 1] + w[j:]
        elem: Dict[Perm, ZPoly] = {u: {0: 1}}
        for k in range(n - 2, j - 1, -1):
            elem = _mul_T(elem, k)
        result = {}
        for y, poly in elem.items():
            for deg, tpoly in basis_trace(y).items():
                slot = result.setdefault(deg + 1, {})
                for e1, c1 in poly.items():
                    for e2, c2 in tpoly.items():
                        slot[e1 + e2] = slot.get(e1 + e2, 0) + c1 * c2
        result = {d: {e: c for e, c in p.items() if c} for d, p in result.items()}
        result = {d: p for d, p in result.items() if p}
    _trace_memo[w] = result
    return result


def ocneanu_trace(x: HeckeElement) -> TracePoly:
    acc: Dict[int, BiLaurent] = {}
    for w, c in x.terms.items():
        for deg, tpoly in basis_trace(w).items():
            term = c * BiLaurent({(0, e): k for e, k in tpoly.items()})
            acc[deg] = acc[deg] + term if deg in acc else term
    return TracePoly(x.n, acc)


def normalize_trace(tr: TracePoly) -> BiLaurent:
    """delta^(n-1) * tr with tau = z/(1-v^2), by clearing denominators and dividing exactly."""
    n = tr.n
    K = max(tr.coeffs, default=0)
    one_minus_v2 = BiLaurent({(0, 0): 1, (2, 0): -1})
    delta_num = BiLaurent({(-1, 0): 1, (1, 0): -1})
    num = BiLaurent.zero()
    for k, c in tr.coeffs.items():
        num = num + c.shift(0, k) * one_minus_v2 ** (K - k)
    num = num * delta_num ** (n - 1)
    den = BiLaurent.monomial(0, n - 1) * one_minus_v2**K
    return exact_div(num, den)


def homflypt_via_elements(b: BraidWord) -> BiLaurent:
    """Reference route through :class:`HeckeElement` and :func:`normalize_trace`."""
    return normalize_trace(ocneanu_trace(hecke_of_word(b)))


def homflypt(b: BraidWord) -> BiLaurent:
    """Homflypt polynomial P(v, z) of the closure of ``b``.

    Production path: rho(b) = v^w X with X over Z[z], so the product and trace
    run on integer polynomials and v enters only at the end. Because every
    tau-degree is at most n - 1, delta^(n-1) tau^k reduces to
    v^(1-n) z^(k+1-n) (1 - v^2)^(n-1-k) with no division left.

    >>> homflypt(BraidWord(2, (1, 1, 1))) == BiLaurent({(2, 2): 1, (2, 0): 2, (4, 0): -1})
    True
    """
    n = b.strands
    elem: Dict[Perm, ZPoly] = {_identity(n): {0: 1}}
    w = 0
    for letter in b.letters:
        if letter > 0:
            elem = _mul_T(elem, letter)
            w += 1
        else:
            elem = _mul_T(elem, -letter, inverse=True)
            w -= 1
    traced: Dict[int, ZPoly] = {}
    for perm, poly in elem.items():
        for deg, tpoly in basis_trace(perm).items():
            slot = traced.setdefault(deg, {})
            for e1, c1 in poly.items():
                for e2, c2 in tpoly.items():
                    slot[e1 + e2] = slot.get(e1 + e2, 0) + c1 * c2
    out: Dict[Tuple[int, int], int] = {}
    for k, poly in traced.items():
        m = n - 1 - k
        binoms = [(2 * i, comb(m, i) * (-1 if i % 2 else 1)) for i in range(m + 1)]
        for e, c in poly.items():
            if not c:
                continue
            ze = e + k - n + 1
            for dv, bc in binoms:
                key = (w - n + 1 + dv, ze)
                out[key] = out.get(key, 0) + c * bc
    return BiLaurent({k: c for k, c in out.items() if c})


def check_skein_triple(b: BraidWord, position: int) -> bool:
    """P(D+) == v z P(D0) + v^2 P(D-) at the crossing ``position``."""
    if not 0 <= position < len(b.letters):
        raise IndexError(f"position {position} outside word of length {len(b.letters)}")
    L = list(b.letters)
    i = abs(L[position])
    plus = BraidWord(b.strands, tuple(L[:position] + [i] + L[position + 1:]))
    minus = BraidWord(b.strands, tuple(L[:position] + [-i] + L[position + 1:]))
    zero = BraidWord(b.strands, tuple(L[:position] + L[position + 1:]))
    return homflypt(plus) == homflypt(zero).shift(1, 1) + homflypt(minus).shift(2, 0)


def _append(b: BraidWord, i: int, e: int) -> BraidWord:
    letter = i if e > 0 else -i
    return BraidWord(b.strands, b.letters + (letter,) * abs(e))


def check_clustered_product(b: BraidWord, i: int) -> bool:
    """P(b) == P(Psi(i, n, b)) * P(T_e) * P(Psi(0, i, b)) for a clustered sigma_i^e."""
    if not is_clustered(b, i):
        raise ValueError(f"generator {i} is not clustered in {b}")
    (e,) = [s.exponent for s in syllables(b) if s.index == i]
    n = b.strands
    rhs = homflypt(psi(i, n, b)) * torus_homflypt(e) * homflypt(psi(0, i, b))
    return homflypt(b) == rhs


def check_reduction_formulas(b: BraidWord, i: int, e: int) -> bool:
    """Conway and Homflypt reduction formulas for appending sigma_i^e to ``b``.

    Checks, with beta = b:
      nabla(beta s^e) = C_e nabla(beta s^{+-1}) + C_{e-+1} nabla(beta)   (both signs)
      P(beta s^e) = v^(e-1) C_e P(beta s) + v^e C_(e-1) P(beta)
      P(beta s^e) = v^(e+1) C_e P(beta s^-1) + v^e C_(e+1) P(beta)
    and the clustered product formula on beta s^e whenever sigma_i is clustered there.
    """
    C = conway_torus
    target = _append(b, i, e)
    P_e = homflypt(target)
    P_b = homflypt(b)
    P_p = homflypt(_append(b, i, 1))
    P_m = homflypt(_append(b, i, -1))
    nab_e, nab_b, nab_p, nab_m = (p.at_v1() for p in (P_e, P_b, P_p, P_m))
    ok = nab_e == C(e) * nab_p + C(e - 1) * nab_b
    ok &= nab_e == C(e) * nab_m + C(e + 1) * nab_b
    Ce = BiLaurent.from_z(C(e))
    ok &= P_e == (Ce * P_p).shift(e - 1, 0) + (BiLaurent.from_z(C(e - 1)) * P_b).shift(e, 0)
    ok &= P_e == (Ce * P_m).shift(e + 1, 0) + (BiLaurent.from_z(C(e + 1)) * P_b).shift(e, 0)
    if is_clustered(target, i):
        ok &= check_clustered_product(target, i)
    return bool(ok)
