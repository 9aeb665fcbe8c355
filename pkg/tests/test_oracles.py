import pytest
from hypothesis import given, settings

from skeinlab.braid import BraidWord, component_count
from skeinlab.coeffs import alexander, jones
from skeinlab.laurent import LaurentPoly
from skeinlab.oracles import (
    CrossingBoundExceeded,
    alexander_burau,
    jones_kauffman,
    symmetric_normalize,
    unit_equal,
    unit_normalize,
)
from strategies import braids

S = LaurentPoly.var_("s")
TREFOIL = BraidWord(2, (1, 1, 1))
O2 = BraidWord(2, ())


def invert(p):
    return LaurentPoly({-e: c for e, c in p.terms.items()}, p.var)


def test_burau_examples():
    assert unit_equal(alexander_burau(TREFOIL), S**2 - 1 + S**-2)
    assert unit_equal(alexander_burau(BraidWord(2, (1,))), LaurentPoly.one("s"))
    assert alexander_burau(O2).is_zero()


def test_kauffman_examples():
    assert jones_kauffman(TREFOIL) == S**2 + S**6 - S**8
    assert jones_kauffman(O2) == -S - S**-1
    assert jones_kauffman(BraidWord(2, (1,))) == 1


def test_figure_eight():
    b = BraidWord(3, (1, -2, 1, -2))
    assert jones_kauffman(b) == S**4 - S**2 + 1 - S**-2 + S**-4
    assert unit_equal(alexander_burau(b), -S**2 + 3 - S**-2)


def test_crossing_bound():
    with pytest.raises(CrossingBoundExceeded):
        jones_kauffman(BraidWord(2, (1,) * 25))


def test_unit_helpers():
    p = -(S**3) * (S**2 + 1)
    assert unit_normalize(p) == S**2 + 1
    assert symmetric_normalize(S**4 + S**2 + 1) == S**2 + 1 + S**-2
    with pytest.raises(ValueError):
        symmetric_normalize(S + 1)


@settings(max_examples=80, deadline=None)
@given(braids(min_strands=2, max_strands=5, max_len=10))
def test_burau_matches_engine_up_to_unit(b):
    assert unit_equal(alexander_burau(b), alexander(b))


@settings(max_examples=80, deadline=None)
@given(braids(min_strands=1, max_strands=5, max_len=10))
def test_kauffman_matches_engine_exactly(b):
    assert jones_kauffman(b) == jones(b)


@settings(max_examples=60, deadline=None)
@given(braids(min_strands=2, max_strands=5, max_len=10))
def test_alexander_reciprocity(b):
    d = alexander_burau(b)
    if d.is_zero():
        return
    d = symmetric_normalize(d)
    sign = -1 if (component_count(b) - 1) % 2 else 1
    assert invert(d) == d * sign


@settings(max_examples=60, deadline=None)
@given(braids(min_strands=1, max_strands=5, max_len=10))
def test_jones_at_one(b):
    V = jones_kauffman(b)
    assert sum(V.terms.values()) == (-2) ** (component_count(b) - 1)
