import itertools
from fractions import Fraction as F
from math import comb, factorial, prod

import pytest

from chernpol.exactcore import UniPoly
from chernpol.specialization import (M_plain, M_tilde, aug_monomial_bruteforce,
                                     aug_monomial_power_sums, eulerian_second,
                                     faulhaber, stirling_first,
                                     stirling_second)
from chernpol.symfunc import enumerate_partitions


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------

def _esym_bruteforce(h, values):
    return sum(prod(c) for c in itertools.combinations(values, h))


def _hsym_bruteforce(h, values):
    return sum(prod(c) for c in
               itertools.combinations_with_replacement(values, h))


def test_stirling_first_is_elementary_symmetric():
    # c(n, n-h) = e_h(1, 2, ..., n-1)
    for n in range(1, 10):
        for h in range(0, n):
            assert stirling_first(n, n - h) == _esym_bruteforce(h, range(1, n))
    assert stirling_first(4, 2) == 11
    assert stirling_first(0, 0) == 1
    assert stirling_first(3, 0) == 0


def test_stirling_second_is_complete_homogeneous():
    # S(n, n-h) = h_h(1, 2, ..., n-h)
    for n in range(1, 10):
        for h in range(0, n):
            assert stirling_second(n, n - h) == \
                _hsym_bruteforce(h, range(1, n - h + 1))
    assert stirling_second(4, 2) == 7


def _eulerian2_bruteforce(n, k):
    # second-order Eulerian recursion cross-checked against the closed
    # summation identity below, so build them from scratch here
    if n == 0:
        return 1 if k == 0 else 0
    if k < 0 or k > n - 1:
        return 0
    return (k + 1) * _eulerian2_bruteforce(n - 1, k) + \
        (2 * n - 1 - k) * _eulerian2_bruteforce(n - 1, k - 1)


def test_eulerian_second_values():
    assert [eulerian_second(2, j) for j in (1, 2)] == [1, 2]
    assert [eulerian_second(3, j) for j in (1, 2, 3)] == [1, 8, 6]
    for h in range(1, 7):
        for j in range(1, h + 1):
            assert eulerian_second(h, j) == _eulerian2_bruteforce(h, j - 1)


def test_eulerian_stirling_binomial_identity():
    # c(d+1, d+1-h) = sum_j E2(h, j) * binom(d + j, 2h)  (j = 1..h)
    for d in range(0, 13):
        for h in range(1, 6):
            rhs = sum(eulerian_second(h, j) * comb(d + j, 2 * h)
                      for j in range(1, h + 1))
            assert stirling_first(d + 1, d + 1 - h) == rhs, (d, h)


def test_faulhaber():
    for q in range(0, 7):
        p = faulhaber(q)
        for v in range(0, 10):
            assert p(v) == sum(F(t) ** q for t in range(v + 1)), (q, v)
        assert p(-1) == 0


# ---------------------------------------------------------------------------
# augmented monomial specializations
# ---------------------------------------------------------------------------

def test_aug_monomial_bruteforce_small():
    # m~_(1,1)(0..2) = sum over ordered distinct pairs from {0,1,2}
    assert aug_monomial_bruteforce((1, 1), 2) == 0 * 1 + 0 * 2 + 1 * 2 + \
        1 * 0 + 2 * 0 + 2 * 1
    # one zero part: injective maps hitting exponent 0 once
    assert aug_monomial_bruteforce((1, 0), 2) == F(6)  # (a^1 b^0) over pairs


def test_power_sum_merge_matches_bruteforce():
    for w in range(1, 6):
        for lam in enumerate_partitions(w, max_length=4):
            expansion = aug_monomial_power_sums(lam)
            for v in range(0, 7):
                direct = sum(c * prod(faulhaber(q)(v) for q in mu)
                             for mu, c in expansion.items())
                assert direct == aug_monomial_bruteforce(lam, v), (lam, v)


def _weak_partitions(weight_max, length_max):
    for w in range(0, weight_max + 1):
        for lam in enumerate_partitions(w, max_length=length_max):
            for zeros in range(0, length_max - len(lam) + 1):
                out = tuple(lam) + (0,) * zeros
                if out:
                    yield out


def test_M_tilde_matches_bruteforce():
    for lam in _weak_partitions(5, 4):
        p = M_tilde(lam)
        for v in range(-1, 7):
            assert p(v) == aug_monomial_bruteforce(lam, v), (lam, v)


def test_M_tilde_vanishing_and_divisibility():
    for lam in _weak_partitions(5, 4):
        p = M_tilde(lam)
        assert p(-1) == 0, lam
        # divisible by (v+1) v (v-1) ... (v - (len(lam) - 2))
        factor = UniPoly.from_roots(range(-1, len(lam) - 1))
        assert p.divisible_by(factor), lam


def test_M_tilde_quintic_example():
    # m~_(2,0,0)(0..v) = (1/6)(v+1) v^2 (v-1) (2v+1)
    p = M_tilde((2, 0, 0))
    expected = UniPoly.from_roots([-1, 0, 0, 1]) * UniPoly({1: F(2), 0: F(1)})
    assert p == expected.scale(F(1, 6))


def test_M_tilde_leading_term():
    for lam in [(1,), (2,), (2, 1), (3, 1, 1), (2, 2)]:
        p = M_tilde(lam)
        deg = sum(q + 1 for q in lam)
        assert p.degree() == deg
        assert p.coeff(deg) == prod(F(1, q + 1) for q in lam)


def test_M_plain():
    # plain monomial sums: divide out the multiplicity factorials
    assert M_plain((0, 0)) == M_tilde((0, 0)).scale(F(1, 2))
    for v in range(0, 6):
        # m_(0^k)(0..v) = binom(v+1, k)
        for k in range(1, 4):
            assert M_plain((0,) * k)(v) == comb(v + 1, k)
        assert M_plain((1, 1))(v) == aug_monomial_bruteforce((1, 1), v) / 2


def test_single_row_is_faulhaber():
    for q in range(0, 6):
        assert M_tilde((q,)) == faulhaber(q)
