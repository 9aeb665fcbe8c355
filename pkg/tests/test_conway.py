import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from skeinlab.conway import (
    check_diff_prod,
    check_gcd_props,
    check_prod_rel,
    check_sum_rel,
    check_zm_expansion,
    conway_closed_form,
    conway_torus as C,
    eps,
    fibonacci_value,
    torus_homflypt,
    trivial_link_homflypt,
)
from skeinlab.laurent import BiLaurent, LaurentPoly, gcd

Z = LaurentPoly.var_("z")


def test_values():
    assert C(3) == Z**2 + 1
    assert C(4) == Z**3 + 2 * Z
    assert C(-2) == -Z
    assert C(0).is_zero()
    assert C(-1) == 1


def test_against_sympy_chebyshev_like_recurrence():
    # independent oracle: C_p = (a^p - b^p)/(a - b) with a, b roots of x^2 - z x - 1
    z, x = sympy.symbols("z x")
    a = (z + sympy.sqrt(z**2 + 4)) / 2
    b = (z - sympy.sqrt(z**2 + 4)) / 2
    for p in range(1, 15):
        ref = sympy.Poly(sympy.simplify((a**p - b**p) / (a - b)), z)
        mine = {e: c for e, c in C(p).terms.items()}
        assert {m[0]: int(c) for m, c in ref.terms()} == mine


def test_sum_relation_examples():
    assert check_sum_rel(2, 2)
    assert check_sum_rel(0, 5)
    assert check_sum_rel(-1, 3)


def test_product_relation_examples():
    assert check_prod_rel(2, 2)
    assert check_prod_rel(1, 1)
    assert check_prod_rel(3, 3)
    assert C(3) * C(3) == Z**4 + 2 * Z**2 + 1
    with pytest.raises(ValueError):
        check_prod_rel(2, 0)


def test_difference_of_products_examples():
    assert check_diff_prod(2, 1, 3, 0, 0)
    assert check_diff_prod(2, 1, 3, 0, 1)
    assert check_diff_prod(1, 1, 2, 0, 2)
    with pytest.raises(ValueError):
        check_diff_prod(1, 1, 1, 0, 1)


def test_zm_expansion_examples():
    assert check_zm_expansion(1, 1)
    assert check_zm_expansion(2, 1)
    assert check_zm_expansion(1, 2)
    with pytest.raises(ValueError):
        check_zm_expansion(0, 1)


def test_gcd_examples():
    assert gcd(C(2), C(4)) == Z
    assert gcd(C(3), C(5)) == 1
    assert check_gcd_props(2, 4)
    assert check_gcd_props(3, 5)
    assert check_gcd_props(2, 3)


def test_fibonacci_examples():
    assert [fibonacci_value(p) for p in (1, 2, 6, 10)] == [1, 1, 8, 55]


def test_torus_homflypt_examples():
    assert torus_homflypt(1) == 1
    assert torus_homflypt(3) == BiLaurent({(2, 0): 2, (2, 2): 1, (4, 0): -1})
    assert torus_homflypt(2) == BiLaurent({(1, 1): 1, (1, -1): 1, (3, -1): -1})
    assert torus_homflypt(0) == trivial_link_homflypt(2)
    assert trivial_link_homflypt(1) == 1


@given(st.integers(-64, 64))
def test_closed_form_matches_recursion(p):
    assert C(p) == conway_closed_form(p)


@given(st.integers(-64, 64))
def test_negation_sign_rule(p):
    assert C(-p) == C(p) * eps(p + 1)


@given(st.integers(-30, 30))
def test_recursion(p):
    assert C(p + 1) == Z * C(p) + C(p - 1)


@given(st.integers(-32, 32))
def test_consecutive_coprime(p):
    assert gcd(C(p), C(p + 1)) == 1


@given(st.integers(-15, 15), st.integers(-15, 15))
def test_sum_relation(x, y):
    assert check_sum_rel(x, y)


@given(st.integers(-12, 12), st.integers(1, 12))
def test_product_relation(x, k):
    assert check_prod_rel(x, k)


@given(st.integers(-8, 8), st.integers(-8, 8), st.integers(-8, 8), st.integers(-6, 6))
def test_difference_of_products(x, y, p, kappa):
    assert check_diff_prod(x, y, p, x + y - p, kappa)


@given(st.integers(1, 6), st.integers(-10, 10))
def test_zm_expansion(m, p):
    assert check_zm_expansion(m, p)


@given(st.integers(-12, 12), st.integers(-12, 12))
def test_gcd_divisibility(a, b):
    assert check_gcd_props(a, b)
