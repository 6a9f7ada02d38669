import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geocodes.grid import CodeParams, Macrobond, Point, canonicalize, flip, translate

from conftest import macrobonds

vectors = st.tuples(st.integers(-30, 30), st.integers(-30, 30))


def test_translate_examples():
    m = Macrobond(5, [(0, 0), (1, 1)])
    assert translate(m, (0, 0)) == {(0, 0), (1, 1)}
    assert translate(m, (2, -1)) == {(2, -1), (3, 0)}
    assert translate(Macrobond(5, [(4, 4)]), (1, 0)) == {(5, 4)}


def test_flip_examples(m_x2):
    assert set(flip(m_x2)) == {(4, 4), (3, 3), (2, 0), (1, 0), (0, 3)}
    assert flip(Macrobond(3, [(1, 1)])) == Macrobond(3, [(1, 1)])


def test_canonicalize_examples():
    assert canonicalize({(2, 3), (4, 5)}) == {(0, 0), (2, 2)}
    assert canonicalize({(1, 2), (3, 1)}) == {(0, 1), (2, 0)}
    s = {(0, 0), (3, 1), (2, 7)}
    assert canonicalize(s) == s
    with pytest.raises(ValueError):
        canonicalize(set())


def test_macrobond_rejects_bad_patches():
    with pytest.raises(ValueError, match="outside"):
        Macrobond(3, [(3, 0)])
    with pytest.raises(ValueError, match="duplicate"):
        Macrobond(3, [(1, 1), (1, 1)])


def test_macrobond_set_semantics():
    a = Macrobond(4, [(3, 1), (0, 2), (1, 1)])
    b = Macrobond(4, [(1, 1), (3, 1), (0, 2)])
    assert a == b and hash(a) == hash(b)
    assert a.patches == (Point(0, 2), Point(1, 1), Point(3, 1))
    assert (1, 1) in a and (1, 2) not in a and (-1, 0) not in a and (4, 0) not in a


@pytest.mark.parametrize("n,w,lam", [(5, 1, 0), (2, 5, 1), (5, 5, 5), (5, 5, 0)])
def test_code_params_ranges(n, w, lam):
    with pytest.raises(ValueError):
        CodeParams(n, w, lam)


@settings(max_examples=1000)
@given(macrobonds(), vectors, vectors)
def test_translate_composes(m, v1, v2):
    both = (v1[0] + v2[0], v1[1] + v2[1])
    assert translate(m, both) == translate(translate(m, v1), v2)
    assert len(translate(m, v1)) == len(m)


@settings(max_examples=1000)
@given(macrobonds())
def test_flip_involution(m):
    assert flip(flip(m)) == m


@settings(max_examples=1000)
@given(macrobonds(min_w=1), vectors)
def test_canonicalize_invariant_and_idempotent(m, v):
    c = canonicalize(m)
    assert canonicalize(translate(m, v)) == c
    assert canonicalize(c) == c
    assert min(p.x for p in c) == 0 and min(p.y for p in c) == 0
