import pytest
from hypothesis import given
from hypothesis import strategies as st

from palincf.errors import KTooSmall
from palincf.fibpoly import FibParams, fib, mmm_construct, mmm_k_min
from palincf.palindromes import Palindrome, construct
from palincf.surd import expand, root_of_monic

from oracles import fib_backward

idx = st.integers(-40, 40)
ms = st.integers(1, 20)


def test_small_values():
    assert [fib(h, 2) for h in range(6)] == [0, 1, 2, 5, 12, 29]
    assert fib(0, 7) == 0 and fib(1, 7) == 1


@pytest.mark.parametrize("m", [1, 2, 5, 13])
def test_negative_index(m):
    assert fib(-3, m) == fib(3, m) == m * m + 1
    assert fib(-2, m) == -m


@given(idx, ms)
def test_matches_bidirectional_recurrence(h, m):
    assert fib(h, m) == fib_backward(h, m)


@given(idx, idx, ms)
def test_addition_law(i, j, m):
    assert fib(j - 1, m) * fib(i, m) + fib(j, m) * fib(i + 1, m) == fib(i + j, m)


@given(st.integers(-30, 30), ms)
def test_cassini(n, m):
    assert fib(n + 1, m) * fib(n - 1, m) - fib(n, m) ** 2 == (-1) ** n


class TestKMin:
    def test_n2_m2(self):
        assert mmm_k_min(2, 2) == 1

    def test_n1_uses_negative_index(self):
        assert mmm_k_min(1, 2) == 2

    def test_n4_m1(self):
        assert mmm_k_min(4, 1) == 0
        s, _ = mmm_construct(FibParams(4, 1, 0))
        assert s > 1

    @given(st.integers(1, 12), st.integers(1, 12))
    def test_one_below_gives_s_equal_m(self, n, m):
        k = mmm_k_min(n, m) - 1
        p = Palindrome((m,) * n)
        assert p.s_of(k) == m


class TestConstruct:
    def test_sleeper(self):
        s, t = mmm_construct(FibParams(2, 2, 2))
        assert (s, t) == (12, -5)
        assert s * s - 4 * t == 164

    def test_n1(self):
        s, t = mmm_construct(FibParams(1, 2, 2))
        assert (s, t) == (4, -2)
        assert s * s - 4 * t == 24

    def test_pell_parameters(self):
        assert mmm_construct(FibParams(2, 2, 3)) == (17, -7)

    def test_bound(self):
        with pytest.raises(KTooSmall):
            mmm_construct(FibParams(2, 2, 0))

    @given(st.integers(1, 10), st.integers(1, 10), st.integers(0, 50))
    def test_agrees_with_palindrome_construction(self, n, m, dk):
        params = FibParams(n, m, mmm_k_min(n, m) + dk)
        r = construct((m,) * n, params.k)
        assert mmm_construct(params) == (r.s, r.t)
        p = Palindrome((m,) * n)
        assert p.conv.A == tuple(fib(h + 1, m) for h in range(n + 1))
        assert p.conv.B == tuple(fib(h, m) for h in range(n + 1))

    @given(st.integers(1, 8), st.integers(1, 8), st.integers(0, 30))
    def test_period_is_n_plus_one(self, n, m, dk):
        s, t = mmm_construct(FibParams(n, m, mmm_k_min(n, m) + dk))
        cf = expand(root_of_monic(s, t))
        assert cf.period == (m,) * n + (s,)


def test_period_at_s_equal_m_is_reported():
    # at k = bound - 1 the trace equals m; the period then collapses to (m)
    for n in range(1, 7):
        for m in range(1, 6):
            k = mmm_k_min(n, m) - 1
            p = Palindrome((m,) * n)
            alpha = root_of_monic(p.s_of(k), p.t_of(k))
            assert expand(alpha).period == (m,)
