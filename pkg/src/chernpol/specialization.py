"""Arithmetic specializations: Stirling numbers of both kinds, second-order
Eulerian numbers, Faulhaber power-sum polynomials, the power-sum expansion of
augmented monomial symmetric polynomials, and the polynomials M_tilde(v)
giving their values at (0, 1, ..., v) -- including weak partitions with
zero parts.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exactcore import UniPoly, interpolate


@lru_cache(maxsize=None)
def stirling_first(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind [n, k]."""
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0 or k > n:
        return 0
    return stirling_first(n - 1, k - 1) + (n - 1) * stirling_first(n - 1, k)


@lru_cache(maxsize=None)
def stirling_second(n: int, k: int) -> int:
    """Stirling number of the second kind {n, k}."""
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0 or k > n:
        return 0
    return stirling_second(n - 1, k - 1) + k * stirling_second(n - 1, k)


@lru_cache(maxsize=None)
def _eulerian2(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k < 0 or k >= n:
        return 0
    return (k + 1) * _eulerian2(n - 1, k) + (2 * n - 1 - k) * _eulerian2(n - 1, k - 1)


def eulerian_second(h: int, j: int) -> int:
    """Second-order Eulerian number E2(h, j), indexed so that

        [d+1, d+1-h] = sum_{j=1..h} E2(h, j) * binom(d+j, 2h).

    This binomial identity is the defining property; the classical triangle
    recurrence realizes it with the shift j -> j-1.
    """
    if h < 1 or j < 1 or j > h:
        return 0
    return _eulerian2(h, j - 1)


@lru_cache(maxsize=None)
def faulhaber(q: int) -> UniPoly:
    """The polynomial in v equal to 0^q + 1^q + ... + v^q for all v >= -1.

    Degree q+1, leading term v^(q+1)/(q+1); value 0 at v = -1.
    """
    if q < 0:
        raise ValueError("q must be non-negative")
    pts = []
    total = 0
    pts.append((-1, Fraction(0)))
    for v in range(0, q + 3):
        total += v ** q
        pts.append((v, Fraction(total)))
    return interpolate(pts, q + 1, var="v")


# ---------------------------------------------------------------------------
# augmented monomial symmetric polynomials in power sums
# ---------------------------------------------------------------------------

def _sorted_partition(parts) -> tuple:
    return tuple(sorted(parts, reverse=True))


@lru_cache(maxsize=None)
def aug_monomial_power_sums(lam: tuple) -> dict:
    """Integer expansion of the augmented monomial m~_lambda in power sums,
    via the merge recursion

        m~_{lambda u (a)} = p_a * m~_lambda - sum_i m~_{lambda with lambda_i += a}.

    Only proper (zero-free) partitions are accepted; the coefficient of
    p_lambda itself is 1.
    """
    lam = _sorted_partition(lam)
    if any(p <= 0 for p in lam):
        raise ValueError("zero parts are not allowed here; use M_tilde")
    if not lam:
        return {(): 1}
    if len(lam) == 1:
        return {lam: 1}
    a, rest = lam[0], lam[1:]
    base = aug_monomial_power_sums(rest)
    out: dict[tuple, int] = {}
    for mu, c in base.items():
        key = _sorted_partition(mu + (a,))
        out[key] = out.get(key, 0) + c
    for i in range(len(rest)):
        merged = rest[:i] + (rest[i] + a,) + rest[i + 1:]
        for mu, c in aug_monomial_power_sums(_sorted_partition(merged)).items():
            out[mu] = out.get(mu, 0) - c
    return {mu: c for mu, c in out.items() if c}


# ---------------------------------------------------------------------------
# M_tilde / M_plain
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def M_tilde(lam: tuple) -> UniPoly:
    """Polynomial in v with M_tilde(lam)(v) = m~_lam(0, 1, ..., v) for v >= -1.

    Zero parts are handled by the binomial prefactor
    binom(v+1-(m1+...), m0) * m0! times the zero-free specialization.
    """
    lam = _sorted_partition(int(p) for p in lam)
    if any(p < 0 for p in lam):
        raise ValueError("weak partition parts must be non-negative")
    m0 = sum(1 for p in lam if p == 0)
    star = tuple(p for p in lam if p > 0)
    if m0:
        # binom(v+1-len(star), m0) * m0! as a polynomial in v
        prefactor = UniPoly.const(1, var="v")
        for i in range(m0):
            prefactor = prefactor * UniPoly(
                {1: Fraction(1), 0: Fraction(1 - len(star) - i)}, var="v")
        return prefactor * M_tilde(star)
    if not lam:
        return UniPoly.const(1, var="v")
    out = UniPoly({}, var="v")
    for mu, c in aug_monomial_power_sums(lam).items():
        term = UniPoly.const(c, var="v")
        for q in mu:
            term = term * faulhaber(q)
        out = out + term
    return out


def M_plain(lam: tuple) -> UniPoly:
    """M_tilde divided by mult(lambda)!, i.e. the specialization of the plain
    monomial symmetric polynomial."""
    lam = _sorted_partition(int(p) for p in lam)
    mult_fact = 1
    counts: dict[int, int] = {}
    for p in lam:
        counts[p] = counts.get(p, 0) + 1
    for m in counts.values():
        mult_fact *= factorial(m)
    return M_tilde(lam).scale(Fraction(1, mult_fact))


def aug_monomial_bruteforce(lam: tuple, v: int) -> Fraction:
    """Direct sum over injective maps {1..l} -> {0..v}; the oracle for
    M_tilde on small inputs."""
    from itertools import permutations
    lam = tuple(lam)
    total = Fraction(0)
    for values in permutations(range(v + 1), len(lam)):
        term = 1
        for y, p in zip(values, lam):
            term *= y ** p
        total += term
    if not lam:
        return Fraction(1)
    return total
