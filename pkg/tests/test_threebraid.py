import itertools

import pytest
from hypothesis import given, settings

from skeinlab.braid import BraidWord, cyclic_shift, free_reduce, writhe
from skeinlab.coeffs import alexander, conway, decompose_word, jones
from skeinlab.conway import conway_torus as C, trivial_link_homflypt
from skeinlab.hecke import homflypt
from skeinlab.laurent import LaurentPoly
from skeinlab.oracles import alexander_burau, unit_equal
from skeinlab.threebraid import (
    OmegaClass,
    augmented_identities,
    enumerate_b3,
    equal_p_decision,
    eta_conway_checks,
    example1_instance,
    jones3,
    landscape_check,
    lemma2_predicted_deltas,
    no_valley,
    omega_alexander,
    omega_check,
    omega_grid,
    omega_rep,
    p3_closed,
    p3_lemma1,
    survey_equal_v,
)
from strategies import b3_words

Z = LaurentPoly.var_("z")
S = LaurentPoly.var_("s")
ONE_Z = LaurentPoly.one("z")
UNKNOT = BraidWord(3, (1, 2))
TREFOIL = BraidWord(3, (1, 1, 1, 2))
O3 = BraidWord(3, ())


def test_p3_closed_examples():
    assert p3_closed(UNKNOT, ONE_Z).p == (Z**2, 0 * Z, 0 * Z)
    assert p3_closed(TREFOIL, Z**2 + 1).p == (Z**4 + 2 * Z**2, -(Z**2), 0 * Z)
    assert p3_closed(O3, LaurentPoly.zero("z")).p == (ONE_Z, -2 * ONE_Z, ONE_Z)
    with pytest.raises(ValueError):
        p3_closed(BraidWord(2, (1,)), ONE_Z)


def test_lemma1_examples():
    assert p3_lemma1(UNKNOT) == 1
    assert p3_lemma1(O3) == trivial_link_homflypt(3)
    with pytest.raises(ValueError):
        p3_lemma1(BraidWord(4, ()))


def test_jones3_examples():
    assert jones3(UNKNOT) == 1
    assert jones3(TREFOIL) == S**2 + S**6 - S**8
    assert jones3(BraidWord(3, (-1, -2))) == 1


def test_equal_p_examples():
    assert equal_p_decision(UNKNOT, BraidWord(3, (2, 1))) == (True, "i")
    assert equal_p_decision(UNKNOT, BraidWord(3, (-1, -2))) == (True, "iii")
    # w = 4 trefoil against the w = 2 trefoil closure sigma_1^3 sigma_2^-1
    ok, case = equal_p_decision(TREFOIL, BraidWord(3, (1, 1, 1, -2)))
    assert ok and case == "ii"
    assert equal_p_decision(TREFOIL, UNKNOT)[0] is False


def test_landscape_examples():
    assert no_valley([2, None, None])
    assert no_valley([0, 0, 0])
    assert not no_valley([7, 1, 3])
    assert landscape_check(decompose_word(UNKNOT))
    assert landscape_check(decompose_word(O3))


def test_landscape_counterexample():
    # a genuine valley: the middle coefficient drops below both neighbours
    b = BraidWord(3, (-1, 2, 1, 1, 2, 2, 1, 1, 2))
    d = decompose_word(b)
    assert [p.degree() for p in d.p] == [7, 1, 3]
    assert not landscape_check(d)


def test_omega_examples():
    assert omega_rep(OmegaClass(1, 0)) == BraidWord(3, (2, 1))
    assert omega_rep(OmegaClass(0, 1)) == BraidWord(3, (2, 1) * 3)
    assert omega_rep(OmegaClass(4, 1, e=1)) == BraidWord(3, (2, 1) * 3 + (-2,))
    assert omega_alexander(OmegaClass(1, 0)) == 1
    t = S**2
    expected = (t - 1) ** 2 * (t**2 + t + 1) * t**-2
    assert omega_alexander(OmegaClass(0, 1)) == expected
    r = omega_check(OmegaClass(4, 1, e=1))
    assert r.unit_equal and not r.division_failed


def test_omega_class_validation():
    for bad in ({"index": 7, "d": 0}, {"index": 4, "d": 1}, {"index": 5, "d": 1},
                {"index": 6, "d": 1}, {"index": 6, "d": 1, "pairs": ((0, 1),)}):
        with pytest.raises(ValueError):
            OmegaClass(**bad)
    assert OmegaClass(6, 1, pairs=((1, 2),)).label() == "Omega6(d=1,pairs=1:2)"


def test_omega_closed_forms_on_small_grid():
    points = list(omega_grid(range(0, 3), e_max=2, r_max=1, ek_max=2))
    for c in points:
        r = omega_check(c)
        assert not r.division_failed and r.unit_equal, c.label()


def test_augmented_examples():
    assert conway(BraidWord(3, (2, 1) * 3)) == C(5) - C(1)
    assert augmented_identities(1, O3)
    assert augmented_identities(1, BraidWord(3, (1,)))
    assert augmented_identities(2, UNKNOT)
    with pytest.raises(ValueError):
        augmented_identities(0, O3)
    checks = eta_conway_checks(((1, 1), (1, 1)))
    assert checks["r2_product"] is True


def test_example1_examples():
    b, g = example1_instance(3, 1)
    tail = (-2,) * 13 + (1,)
    assert b == BraidWord(3, (2, 1) * 9 + tail)
    assert g == BraidWord(3, (2, 1) * 3 + tail)
    b, g = example1_instance(4, 2)
    assert conway(b) == conway(g) and not conway(b).is_zero()
    assert homflypt(b) != homflypt(g)
    with pytest.raises(ValueError):
        example1_instance(2, 1)
    with pytest.raises(ValueError):
        example1_instance(1, 1)


def test_lemma2_examples():
    one = LaurentPoly.one("s")
    assert lemma2_predicted_deltas(2, 0, 1) == (one, one)
    hi, lo = lemma2_predicted_deltas(2, 1, 1)
    # knots have Delta(1) = +-1, links of two components Delta(1) = 0
    assert abs(sum(hi.terms.values())) == 1 and abs(sum(lo.terms.values())) == 1
    hi, lo = lemma2_predicted_deltas(3, 1, 2)
    assert sum(hi.terms.values()) == 0 and sum(lo.terms.values()) == 0
    with pytest.raises(ValueError):
        lemma2_predicted_deltas(1, 1, 2)
    with pytest.raises(ValueError):
        lemma2_predicted_deltas(3, 1, 1)


def test_enumeration_counts():
    counts = [sum(1 for _ in enumerate_b3(L)) for L in (4, 6)]
    assert counts == [51, 235]


def test_enumeration_has_no_conjugate_duplicates():
    words = [b.letters for b in enumerate_b3(6)]
    canon = {min(w[r:] + w[:r] for r in range(len(w))) if w else w for w in words}
    assert len(canon) == len(words)


def test_enumeration_covers_every_closure():
    # brute force: every word of length <= 5 has an enumerated representative
    listed = {homflypt(b) for b in enumerate_b3(5)}
    for L in range(6):
        for w in itertools.product((-2, -1, 1, 2), repeat=L):
            assert homflypt(BraidWord(3, w)) in listed


def test_survey_small():
    rep = survey_equal_v(4)
    assert rep.ok and rep.summary()["words"] == 51
    unknot_bucket = [r for r in rep.rows if r.V == 1]
    assert len({r.P for r in unknot_bucket}) == 1


@settings(max_examples=80, deadline=None)
@given(b3_words())
def test_closed_forms_match_engine(b):
    nabla = conway(b)
    assert p3_closed(b, nabla) == decompose_word(b)
    assert p3_lemma1(b) == homflypt(b)
    assert jones3(b) == jones(b)


@settings(max_examples=60, deadline=None)
@given(b3_words(), b3_words())
def test_equal_p_prediction(b, c):
    predicted, _ = equal_p_decision(b, c)
    assert predicted == (homflypt(b) == homflypt(c))


@settings(max_examples=60, deadline=None)
@given(b3_words())
def test_jones3_with_burau_input(b):
    # the Burau determinant only fixes Delta up to a unit, so compare up to one
    assert unit_equal(alexander_burau(b), alexander(b))
    assert jones3(b, alexander(b)) == jones(b)
