import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geocodes.codefile import write_code
from geocodes.construction import (
    PolynomialCodeword,
    build_code,
    build_flipping_code,
    code_size,
    codeword_to_macrobond,
    codewords,
    complement,
    eval_poly,
    flipping_code_size,
    is_prime,
    is_self_complementary,
    self_complementary_count,
)
from geocodes.correlation import max_flip_correlation, max_flip_correlation_sweep, verify_code
from geocodes.grid import Code, Macrobond


def sieve(limit):
    flags = [True] * (limit + 1)
    flags[0] = flags[1] = False
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i::i] = [False] * len(flags[i * i::i])
    return flags


def P(n, *coeffs):
    return PolynomialCodeword(n, tuple(coeffs))


def test_is_prime_examples():
    assert is_prime(7)
    assert not is_prime(1)
    assert is_prime(7919)


def test_is_prime_against_sieve():
    flags = sieve(10_000)
    assert [is_prime(k) for k in range(1, 10_001)] == flags[1:]


def test_codeword_invariants():
    with pytest.raises(ValueError):
        P(5, 1, 0, 1)  # a_0 != 0
    with pytest.raises(ValueError):
        P(5, 0, 0, 0)  # a_lam == 0
    with pytest.raises(ValueError):
        P(5, 0, 0, 2, 1)  # a_(lam-1) != 0
    with pytest.raises(ValueError):
        P(5, 0, 0, 5)


def test_eval_poly_examples():
    assert eval_poly(P(5, 0, 0, 1), 3) == 4
    assert eval_poly(P(5, 0, 0, 2), 4) == 2
    assert eval_poly(P(7, 0, 3, 0, 1), 0) == 0


@settings(max_examples=300)
@given(st.sampled_from([3, 5, 7, 11, 13, 101]), st.data())
def test_eval_poly_direct_sum(n, data):
    lam = data.draw(st.integers(2, min(n - 1, 8)))
    mid = data.draw(st.lists(st.integers(0, n - 1), min_size=lam - 2, max_size=lam - 2))
    p = PolynomialCodeword(n, (0, *mid, 0, data.draw(st.integers(1, n - 1))))
    x = data.draw(st.integers(0, n - 1))
    assert eval_poly(p, x) == sum(a * x**i for i, a in enumerate(p.coeffs)) % n


def test_codeword_to_macrobond():
    assert codeword_to_macrobond(P(5, 0, 0, 1)) == Macrobond(5, [(0, 0), (1, 1), (2, 4), (3, 4), (4, 1)])
    assert codeword_to_macrobond(P(5, 0, 0, 2)) == Macrobond(5, [(0, 0), (1, 2), (2, 3), (3, 3), (4, 2)])


def test_build_code_52():
    code = build_code(5, 2)
    assert len(code) == 4
    assert list(code) == [codeword_to_macrobond(P(5, 0, 0, a)) for a in (1, 2, 3, 4)]


def test_enumeration_order():
    polys = [p.coeffs for p in build_code(5, 4).polynomials()]
    # a_4 outermost, then a_2, then a_1
    assert polys[:3] == [(0, 0, 0, 0, 1), (0, 1, 0, 0, 1), (0, 2, 0, 0, 1)]
    assert polys[5] == (0, 0, 1, 0, 1)
    assert polys[25] == (0, 0, 0, 0, 2)


@pytest.mark.parametrize("n,lam,size", [(5, 2, 4), (7, 3, 42), (5, 4, 100), (3, 2, 2), (11, 3, 110)])
def test_build_code_sizes(n, lam, size):
    code = build_code(n, lam)
    ms = list(code)
    assert len(code) == code_size(n, lam) == size == len(ms)
    assert len(set(ms)) == size
    for m in ms:
        assert len(m) == n
        assert sorted(p.x for p in m) == list(range(n))


@pytest.mark.parametrize("n,lam", [(5, 2), (5, 3), (5, 4), (7, 2), (7, 3), (7, 4), (11, 2), (11, 3), (13, 2), (13, 3)])
def test_build_code_verifies(n, lam):
    code = build_code(n, lam)
    rep = verify_code(Code(code.params, code))
    assert rep.ok
    assert rep.max_auto <= lam and rep.max_cross <= lam


def test_build_code_limit_prefix():
    full = list(build_code(7, 3))
    pre = build_code(7, 3, limit=10)
    assert len(pre) == 10 and pre.declared == 42
    assert list(pre) == full[:10]
    assert verify_code(Code(pre.params, pre)).ok


@pytest.mark.parametrize("n,lam", [(6, 2), (1, 2), (5, 1), (5, 5)])
def test_build_code_rejects(n, lam):
    with pytest.raises(ValueError):
        build_code(n, lam)


def test_complement_examples():
    assert complement(P(5, 0, 0, 1)) == P(5, 0, 0, 4)
    assert complement(P(5, 0, 0, 0, 1)) == P(5, 0, 0, 0, 1)
    assert complement(P(7, 0, 2, 0, 1)) == P(7, 0, 2, 0, 1)
    assert is_self_complementary(P(5, 0, 0, 0, 1))
    assert not is_self_complementary(P(5, 0, 0, 1))


@pytest.mark.parametrize("n", [3, 5, 7, 11])
def test_complement_is_negated_reflection(n):
    for lam in range(2, min(n, 5)):
        for p in codewords(n, lam):
            q = complement(p)
            assert all(eval_poly(q, x) == (-eval_poly(p, (-x) % n)) % n for x in range(n))


@settings(max_examples=1000)
@given(st.sampled_from([3, 5, 7, 11, 13]), st.data())
def test_complement_involution(n, data):
    lam = data.draw(st.integers(2, n - 1))
    mid = data.draw(st.lists(st.integers(0, n - 1), min_size=lam - 2, max_size=lam - 2))
    p = PolynomialCodeword(n, (0, *mid, 0, data.draw(st.integers(1, n - 1))))
    q = complement(p)
    assert complement(q) == p
    assert is_self_complementary(p) == (q == p) == all(a == 0 for a in p.coeffs[::2])


@pytest.mark.parametrize("n,lam", [(3, 2), (5, 2), (5, 3), (5, 4), (7, 2), (7, 3), (7, 4), (7, 5), (11, 3)])
def test_self_complementary_count_by_enumeration(n, lam):
    s = sum(is_self_complementary(p) for p in codewords(n, lam))
    assert s == self_complementary_count(n, lam)
    if (n, lam) == (5, 3):
        assert s == 20


def test_flipping_52():
    code = build_flipping_code(5, 2)
    assert len(code) == 2
    assert [p.coeffs for p in code.polynomials()] == [(0, 0, 1), (0, 0, 2)]


def test_flipping_53_is_empty():
    code = build_flipping_code(5, 3)
    assert len(code) == 0 and list(code) == []


@pytest.mark.parametrize("n,lam", [(3, 2), (5, 2), (5, 3), (7, 2), (7, 3), (11, 2), (11, 3)])
def test_flipping_code_verifies(n, lam):
    code = build_flipping_code(n, lam)
    ms = list(code)
    N, S = code_size(n, lam), self_complementary_count(n, lam)
    assert len(ms) == len(code) == flipping_code_size(n, lam) == (N - S) // 2
    if ms:
        rep = verify_code(Code(code.params, ms), flipping=True)
        assert rep.ok and rep.max_flip <= lam


@pytest.mark.parametrize("n", [5, 7])
def test_complementary_pairs_overlap_under_flip(n):
    # the aligning shift is (1, 1), which pushes the x = 0 patch off the grid
    for p in codewords(n, 2):
        q = complement(p)
        a, b = codeword_to_macrobond(p), codeword_to_macrobond(q)
        val = max_flip_correlation(a, b)[0]
        assert val == max_flip_correlation_sweep(a, b)[0] == n - 1
        assert val > 2


def test_flipping_rejects_even():
    with pytest.raises(ValueError):
        build_flipping_code(2, 2)


def test_enumeration_deterministic():
    def dump():
        buf = io.StringIO()
        code = build_flipping_code(7, 2)
        write_code(buf, code.params, code, len(code))
        return buf.getvalue()

    assert dump() == dump()
