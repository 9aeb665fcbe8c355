"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from skeinlab.braid import BraidWord
from skeinlab.laurent import BiLaurent, LaurentPoly

coeff = st.integers(-30, 30)


def laurent(var="z", lo=-4, hi=6, max_terms=5):
    return st.dictionaries(st.integers(lo, hi), coeff, max_size=max_terms).map(
        lambda d: LaurentPoly(d, var)
    )


def polys(var="z", hi=6, max_terms=5):
    return laurent(var, 0, hi, max_terms)


def bilaurent(max_terms=5):
    return st.dictionaries(
        st.tuples(st.integers(-4, 4), st.integers(-3, 3)), coeff, max_size=max_terms
    ).map(BiLaurent)


@st.composite
def braids(draw, min_strands=1, max_strands=4, max_len=8):
    n = draw(st.integers(min_strands, max_strands))
    if n == 1:
        return BraidWord(1, ())
    letters = draw(
        st.lists(
            st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))),
            max_size=max_len,
        )
    )
    return BraidWord(n, tuple(letters))


def b3_words(max_len=8):
    return braids(3, 3, max_len)
