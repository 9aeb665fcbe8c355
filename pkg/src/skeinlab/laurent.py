"""
Exact sparse Laurent polynomials over the integers.

:class:`LaurentPoly` is a polynomial in one variable with possibly negative
exponents; :class:`BiLaurent` is the two-variable analogue in ``(v, z)`` that
holds Homflypt values. Coefficients are Python ints, so nothing overflows.

Both types are immutable by convention. Arithmetic between polynomials with
different variable tags raises :class:`VariableMismatch`.
"""

from __future__ import annotations

import json
from math import comb
from typing import Callable, Dict, Iterable, Mapping, Tuple

__all__ = [
    "LaurentPoly",
    "BiLaurent",
    "InexactDivision",
    "NonInvertibleSubstitution",
    "VariableMismatch",
    "exact_div",
    "gcd",
    "substitute",
]


class InexactDivision(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


class NonInvertibleSubstitution(ArithmeticError):
    """Raised when a negative power of a non-unit would be needed."""


class VariableMismatch(ValueError):
    pass


def _clean(terms: Iterable[Tuple[object, int]]) -> Dict:
    out: Dict = {}
    for e, c in terms:
        if c:
            out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def _add_into(acc: Dict, terms: Mapping, scale: int = 1) -> None:
    for e, c in terms.items():
        r = acc.get(e, 0) + scale * c
        if r:
            acc[e] = r
        else:
            acc.pop(e, None)


class _Sparse:
    """Shared machinery for the one- and two-variable types."""

    __slots__ = ("terms", "_hash")

    def _new(self, terms: Dict):
        raise NotImplementedError

    def _check(self, other) -> "_Sparse":
        raise NotImplementedError

    @staticmethod
    def _kadd(a, b):
        raise NotImplementedError

    @staticmethod
    def _ksub(a, b):
        raise NotImplementedError

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        other = self._check(other)
        acc = dict(self.terms)
        _add_into(acc, other.terms)
        return self._new(acc)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        acc = dict(self.terms)
        _add_into(acc, other.terms, -1)
        return self._new(acc)

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self._new({})
            return self._new({e: c * other for e, c in self.terms.items()})
        other = self._check(other)
        if len(other.terms) < len(self.terms):
            small, big = other.terms, self.terms
        else:
            small, big = self.terms, other.terms
        acc: Dict = {}
        kadd = self._kadd
        for e1, c1 in small.items():
            for e2, c2 in big.items():
                k = kadd(e1, e2)
                acc[k] = acc.get(k, 0) + c1 * c2
        return self._new({e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise NonInvertibleSubstitution("negative power of a non-monomial")
            ((e, c),) = self.terms.items()
            if c not in (1, -1):
                raise NonInvertibleSubstitution("negative power of a non-unit monomial")
            return self._new({self._kscale(e, k): c if k % 2 else 1})
        result = self._one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            if other == 0:
                return not self.terms
            return self.terms == {self._zero_key(): other}
        if type(other) is not type(self):
            return NotImplemented
        return self._tag() == other._tag() and self.terms == other.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self._tag(), frozenset(self.terms.items())))
            self._hash = h
        return h

    def leading_key(self):
        return max(self.terms)

    def trailing_key(self):
        return min(self.terms)


class LaurentPoly(_Sparse):
    """Sparse Laurent polynomial in one variable.

    >>> z = LaurentPoly.var_("z")
    >>> (z + 1) * (z - 1)
    LaurentPoly('z', {0: -1, 2: 1})
    """

    __slots__ = ("var",)

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "z"):
        self.terms = _clean((terms or {}).items())
        self.var = var
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[int, int], var: str) -> "LaurentPoly":
        p = object.__new__(cls)
        p.terms = terms
        p.var = var
        p._hash = None
        return p

    def _new(self, terms):
        return LaurentPoly._raw(terms, self.var)

    def _tag(self):
        return self.var

    def _one(self):
        return LaurentPoly._raw({0: 1}, self.var)

    @staticmethod
    def _zero_key():
        return 0

    @staticmethod
    def _kadd(a, b):
        return a + b

    @staticmethod
    def _ksub(a, b):
        return a - b

    @staticmethod
    def _kscale(a, k):
        return a * k

    def _check(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly._raw({0: other} if other else {}, self.var)
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")
        if other.var != self.var:
            raise VariableMismatch(f"variable {self.var!r} vs {other.var!r}")
        return other

    # constructors

    @classmethod
    def var_(cls, var: str = "z") -> "LaurentPoly":
        return cls._raw({1: 1}, var)

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1, var: str = "z") -> "LaurentPoly":
        return cls._raw({exp: coeff} if coeff else {}, var)

    @classmethod
    def const(cls, c: int, var: str = "z") -> "LaurentPoly":
        return cls._raw({0: c} if c else {}, var)

    @classmethod
    def zero(cls, var: str = "z") -> "LaurentPoly":
        return cls._raw({}, var)

    @classmethod
    def one(cls, var: str = "z") -> "LaurentPoly":
        return cls._raw({0: 1}, var)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0, var: str = "z") -> "LaurentPoly":
        """Build from a dense coefficient list starting at exponent ``low``."""
        return cls({low + i: c for i, c in enumerate(coeffs)}, var)

    # queries

    def degree(self) -> int:
        """Highest exponent. Raises ``ValueError`` on the zero polynomial."""
        if not self.terms:
            raise ValueError("degree of zero polynomial")
        return max(self.terms)

    def low_degree(self) -> int:
        if not self.terms:
            raise ValueError("low degree of zero polynomial")
        return min(self.terms)

    def coeff(self, exp: int) -> int:
        return self.terms.get(exp, 0)

    def leading_coeff(self) -> int:
        return self.terms[self.degree()]

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit(self) -> bool:
        return len(self.terms) == 1 and next(iter(self.terms.values())) in (1, -1)

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self.terms)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``var**k``."""
        if k == 0:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self.terms.items()}, self.var)

    def reflect(self) -> "LaurentPoly":
        """Substitute ``var -> 1/var``."""
        return LaurentPoly._raw({-e: c for e, c in self.terms.items()}, self.var)

    def negate_var(self) -> "LaurentPoly":
        """Substitute ``var -> -var``."""
        return LaurentPoly._raw(
            {e: (-c if e % 2 else c) for e, c in self.terms.items()}, self.var
        )

    def retag(self, var: str) -> "LaurentPoly":
        return LaurentPoly._raw(dict(self.terms), var)

    def evaluate(self, x):
        """Evaluate at a number. Negative exponents need an invertible ``x``."""
        total = 0
        for e, c in self.terms.items():
            total += c * (x**e if e >= 0 else 1 / x ** (-e))
        return total

    def compose(self, value: "LaurentPoly") -> "LaurentPoly":
        """Substitute ``var -> value`` (value a Laurent polynomial in another variable)."""
        result = LaurentPoly.zero(value.var)
        for e, c in self.terms.items():
            result = result + (value**e) * c
        return result

    def sorted_terms(self):
        return sorted(self.terms.items())

    def content(self) -> int:
        from math import gcd as igcd

        g = 0
        for c in self.terms.values():
            g = igcd(g, c)
        return g

    # serialization

    def to_json(self) -> dict:
        return {"var": self.var, "terms": [[e, str(c)] for e, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({int(e): int(c) for e, c in data["terms"]}, data["var"])

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.var!r}, {dict(self.sorted_terms())})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            if e == 0:
                mono = str(abs(c))
            else:
                mono = self.var if e == 1 else f"{self.var}^{e}"
                if abs(c) != 1:
                    mono = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out


class BiLaurent(_Sparse):
    """Sparse Laurent polynomial in ``(v, z)``; keys are ``(v_exp, z_exp)``."""

    __slots__ = ()
    vars = ("v", "z")

    def __init__(self, terms: Mapping[Tuple[int, int], int] | None = None):
        self.terms = _clean(((tuple(k), c) for k, c in (terms or {}).items()))
        self._hash = None

    @classmethod
    def _raw(cls, terms) -> "BiLaurent":
        p = object.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    def _new(self, terms):
        return BiLaurent._raw(terms)

    def _tag(self):
        return self.vars

    def _one(self):
        return BiLaurent._raw({(0, 0): 1})

    @staticmethod
    def _zero_key():
        return (0, 0)

    @staticmethod
    def _kadd(a, b):
        return (a[0] + b[0], a[1] + b[1])

    @staticmethod
    def _ksub(a, b):
        return (a[0] - b[0], a[1] - b[1])

    @staticmethod
    def _kscale(a, k):
        return (a[0] * k, a[1] * k)

    def _check(self, other) -> "BiLaurent":
        if isinstance(other, int):
            return BiLaurent._raw({(0, 0): other} if other else {})
        if isinstance(other, LaurentPoly):
            return BiLaurent.from_z(other) if other.var == "z" else BiLaurent.from_v(other)
        if not isinstance(other, BiLaurent):
            raise TypeError(f"cannot combine BiLaurent with {type(other).__name__}")
        return other

    @classmethod
    def monomial(cls, vexp: int, zexp: int, coeff: int = 1) -> "BiLaurent":
        return cls._raw({(vexp, zexp): coeff} if coeff else {})

    @classmethod
    def zero(cls) -> "BiLaurent":
        return cls._raw({})

    @classmethod
    def one(cls) -> "BiLaurent":
        return cls._raw({(0, 0): 1})

    @classmethod
    def v(cls) -> "BiLaurent":
        return cls._raw({(1, 0): 1})

    @classmethod
    def z(cls) -> "BiLaurent":
        return cls._raw({(0, 1): 1})

    @classmethod
    def from_z(cls, p: LaurentPoly, vexp: int = 0) -> "BiLaurent":
        """Embed a polynomial in z, optionally times ``v**vexp``."""
        return cls._raw({(vexp, e): c for e, c in p.terms.items()})

    @classmethod
    def from_v(cls, p: LaurentPoly, zexp: int = 0) -> "BiLaurent":
        return cls._raw({(e, zexp): c for e, c in p.terms.items()})

    def shift(self, dv: int = 0, dz: int = 0) -> "BiLaurent":
        """Multiply by the monomial ``v**dv * z**dz``."""
        if dv == 0 and dz == 0:
            return self
        return BiLaurent._raw({(a + dv, b + dz): c for (a, b), c in self.terms.items()})

    def v_coeff(self, vexp: int) -> LaurentPoly:
        """Coefficient of ``v**vexp`` as a polynomial in z."""
        return LaurentPoly._raw({b: c for (a, b), c in self.terms.items() if a == vexp}, "z")

    def v_exponents(self):
        return sorted({a for a, _ in self.terms})

    def z_exponents(self):
        return sorted({b for _, b in self.terms})

    def at_v1(self) -> LaurentPoly:
        """Set ``v = 1``."""
        acc: Dict[int, int] = {}
        for (_, b), c in self.terms.items():
            acc[b] = acc.get(b, 0) + c
        return LaurentPoly({b: c for b, c in acc.items()}, "z")

    def swap_mirror(self) -> "BiLaurent":
        """Substitute ``v -> 1/v, z -> -z``."""
        return BiLaurent._raw(
            {(-a, b): (-c if b % 2 else c) for (a, b), c in self.terms.items()}
        )

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_json(self) -> dict:
        return {"vars": ["v", "z"], "terms": [[a, b, str(c)] for (a, b), c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data) -> "BiLaurent":
        if isinstance(data, str):
            data = json.loads(data)
        if list(data.get("vars", ["v", "z"])) != ["v", "z"]:
            raise VariableMismatch(f"expected vars ['v','z'], got {data['vars']}")
        return cls({(int(a), int(b)): int(c) for a, b, c in data["terms"]})

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def __repr__(self) -> str:
        return f"BiLaurent({dict(self.sorted_terms())})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for a in sorted(self.v_exponents()):
            zp = self.v_coeff(a)
            vm = "" if a == 0 else ("v" if a == 1 else f"v^{a}")
            if not vm:
                chunks.append(f"({zp})")
            else:
                chunks.append(f"({zp})*{vm}")
        return " + ".join(chunks)


def _long_div(num: Dict, den: Dict, ksub: Callable, kadd: Callable):
    """Exact division of sparse Laurent polynomials under a total group order.

    Keys are compared with ``<`` (ints, or tuples lexicographically). The quotient of an exact division has its
    lowest key at ``low(num) - low(den)``; any quotient term below that proves
    a remainder, so the loop always terminates.
    """
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    if not num:
        return {}
    dlead = max(den)
    dc = den[dlead]
    floor = ksub(min(num), min(den))
    rem = dict(num)
    quot: Dict = {}
    while rem:
        rlead = max(rem)
        qk = ksub(rlead, dlead)
        if qk < floor:
            raise InexactDivision("nonzero remainder")
        rc = rem[rlead]
        if rc % dc:
            raise InexactDivision("leading coefficient not divisible over Z")
        qc = rc // dc
        quot[qk] = qc
        for dk, c in den.items():
            k = kadd(dk, qk)
            r = rem.get(k, 0) - qc * c
            if r:
                rem[k] = r
            else:
                rem.pop(k, None)
    return quot


def _nonnegative(p) -> bool:
    return all(min(k) >= 0 if isinstance(k, tuple) else k >= 0 for k in p.terms)


def exact_div(num, den, polynomial: bool = False):
    """Return ``q`` with ``q * den == num`` exactly, or raise :class:`InexactDivision`.

    Works for both :class:`LaurentPoly` and :class:`BiLaurent`. Integers are
    accepted as the divisor. Division happens in the Laurent ring, where
    monomials are units; with ``polynomial=True`` both operands must be
    ordinary polynomials and so must the quotient.
    """
    den = num._check(den)
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if polynomial and not (_nonnegative(num) and _nonnegative(den)):
        raise ValueError("polynomial division needs non-negative exponents")
    q = num._new(_long_div(num.terms, den.terms, num._ksub, num._kadd))
    if polynomial and not _nonnegative(q):
        raise InexactDivision("quotient is not a polynomial")
    return q


def _poly_part(p: LaurentPoly) -> list:
    """Dense coefficients (low to high) after stripping the monomial factor."""
    lo, hi = p.low_degree(), p.degree()
    return [p.terms.get(e, 0) for e in range(lo, hi + 1)]


def _prem(a: list, b: list) -> list:
    """Pseudo-remainder of dense integer polynomials (low-to-high lists)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        la = a[-1]
        a = [lb * c for c in a]
        shift = da - db
        for i, c in enumerate(b):
            a[i + shift] -= la * c
        while a and a[-1] == 0:
            a.pop()
    return a


def _primitive(a: list) -> list:
    from math import gcd as igcd

    g = 0
    for c in a:
        g = igcd(g, c)
    a = [c // g for c in a]
    if a[-1] < 0:
        a = [-c for c in a]
    return a


def gcd(x: LaurentPoly, y: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor over Q, normalized primitive with positive leading coefficient.

    The monomial factor kept is ``var^min(low x, low y)``, so for ordinary
    polynomials this is the usual gcd in Q[var]; for Laurent inputs it is one
    associate among many.
    """
    y = x._check(y)
    if x.is_zero() and y.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if x.is_zero():
        x, y = y, x
    if y.is_zero():
        lo = x.low_degree()
        return LaurentPoly(dict(enumerate(_primitive(_poly_part(x)))), x.var).shift(lo)
    lo = min(x.low_degree(), y.low_degree())
    a, b = _primitive(_poly_part(x)), _primitive(_poly_part(y))
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = _prem(a, b)
        if not r:
            break
        a, b = b, _primitive(r)
    if len(b) == 1:
        return LaurentPoly.monomial(lo, 1, x.var)
    return LaurentPoly(dict(enumerate(_primitive(b))), x.var).shift(lo)


def substitute(p: BiLaurent, v_value: LaurentPoly, z_value: LaurentPoly) -> LaurentPoly:
    """Evaluate ``p`` at ``v = v_value``, ``z = z_value``.

    Negative exponents are allowed only for unit monomials; otherwise
    :class:`NonInvertibleSubstitution` is raised and the caller must clear
    denominators first.
    """
    if v_value.var != z_value.var:
        raise VariableMismatch("substituted values must share a variable")
    var = v_value.var
    vcache: Dict[int, LaurentPoly] = {}
    zcache: Dict[int, LaurentPoly] = {}
    acc: Dict[int, int] = {}
    for (a, b), c in p.terms.items():
        if a not in vcache:
            vcache[a] = v_value**a
        if b not in zcache:
            zcache[b] = z_value**b
        _add_into(acc, (vcache[a] * zcache[b]).terms, c)
    return LaurentPoly._raw(acc, var)


def binomial_poly(n: int, var: str = "z", sign: int = 1, step: int = 1) -> LaurentPoly:
    """``(1 + sign * var**step)**n`` for ``n >= 0``."""
    return LaurentPoly({step * i: comb(n, i) * sign**i for i in range(n + 1)}, var)
