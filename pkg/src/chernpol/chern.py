"""Total Chern class of the space of degree-d forms in n variables: the
direct product over the weight simplex, exact interpolation of the c_k
coefficients as polynomials in d in any symmetric-function basis, the closed
Stirling-number formula for the n=2 Euler class, the odd-d grouped
elementary-basis coefficients, and leading-term predictions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .exactcore import MultiPoly, TruncationPolicy, UniPoly, interpolate
from .rising import RisingProductSpec, stirling_coefficient
from .specialization import stirling_first
from .symfunc import (BASES, check_partition, conjugate, enumerate_partitions,
                      convert_expansion, expand_in_basis, syt_count,
                      validate_basis_index)

FORMAT_VERSION = "chernpol-cache-1"


class OutOfDomainError(ValueError):
    pass


def _xvars(n: int) -> tuple:
    return tuple(f"x{i+1}" for i in range(n))


def weight_vectors(n: int, d: int):
    """Lattice points of the d-dilated standard simplex in N^n (odometer)."""
    if n == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in weight_vectors(n - 1, d - first):
            yield (first,) + rest


_direct_cache: dict = {}


def chern_direct(n: int, d: int, policy: TruncationPolicy) -> MultiPoly:
    """prod over (d_1..d_n) with sum d of (1 + d_1 x_1 + ... + d_n x_n),
    truncated.  d = -1 gives 1 (empty product); d = 0 gives 1."""
    if d < -1:
        raise OutOfDomainError("d must be >= -1")
    key = (n, d, policy.max_total_degree)
    if key in _direct_cache:
        return _direct_cache[key]
    xs = _xvars(n)
    out = MultiPoly.const(1, xs)
    if d >= 1:
        for weights in weight_vectors(n, d):
            terms = {(0,) * n: Fraction(1)}
            for i, w in enumerate(weights):
                if w:
                    ev = tuple(1 if j == i else 0 for j in range(n))
                    terms[ev] = Fraction(w)
            out = out.mul_truncated(MultiPoly(xs, terms),
                                    policy.max_total_degree)
    _direct_cache[key] = out
    return out


@dataclass
class ChernPolynomial:
    """Coefficients of c_k as polynomials in d, in one basis."""
    n: int
    k: int
    basis: str
    terms: dict = field(default_factory=dict)  # partition -> UniPoly in d
    degree_bound: int = 0
    samples: list = field(default_factory=list)

    def evaluate(self, d) -> dict:
        """{partition: Fraction} at a concrete d."""
        return {lam: p(Fraction(d)) for lam, p in self.terms.items()}

    def in_basis(self, basis: str) -> "ChernPolynomial":
        if basis == self.basis:
            return self
        terms = convert_expansion(self.terms, self.basis, basis, self.n)
        return ChernPolynomial(self.n, self.k, basis, terms,
                               self.degree_bound, list(self.samples))

    def divisibility_factor(self) -> UniPoly:
        """(d+1)d(d-1)...(d-(d0(k)-1)) with d0(k) minimal such that the
        weight simplex has at least k points; c_1 additionally gets d."""
        if self.k == 0:
            return UniPoly.const(1, var="d")
        d0 = 0
        while comb(d0 + self.n - 1, self.n - 1) < self.k:
            d0 += 1
        roots = list(range(-1, d0))
        if self.k == 1 and 0 not in roots:
            roots.append(0)
        return UniPoly.from_roots(roots, var="d")

    def divisibility_ok(self) -> bool:
        div = self.divisibility_factor()
        return all(p.divisible_by(div) for p in self.terms.values())

    def to_json(self) -> dict:
        return {
            "format": FORMAT_VERSION,
            "n": self.n, "k": self.k, "basis": self.basis,
            "degree_bound": self.degree_bound,
            "samples": list(self.samples),
            "terms": [[list(lam), p.to_json()]
                      for lam, p in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ChernPolynomial":
        if data.get("format") != FORMAT_VERSION:
            raise ValueError("stale cache format")
        terms = {tuple(lam): UniPoly.from_json(p, var="d")
                 for lam, p in data["terms"]}
        return cls(data["n"], data["k"], data["basis"], terms,
                   data["degree_bound"], list(data["samples"]))


def chern_interpolated(n: int, k: int, basis: str = "monomial") -> ChernPolynomial:
    """Interpolate every monomial coefficient of c_k(d) from samples
    d = -1..n*k (degree bound n*k; the last sample is a consistency guard),
    then convert exactly to the requested basis."""
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    bound = n * k
    samples = list(range(-1, bound + 1))
    policy = TruncationPolicy(k)
    data = {}
    for d in samples:
        f = chern_direct(n, d, policy).homogeneous_component(k)
        data[d] = expand_in_basis(f, "monomial")
    terms = {}
    for mu in enumerate_partitions(k, max_length=n):
        pts = [(d, data[d].get(mu, Fraction(0))) for d in samples]
        poly = interpolate(pts, bound, var="d")
        if not poly.is_zero():
            terms[mu] = poly
    result = ChernPolynomial(n, k, "monomial", terms, bound, samples)
    return result.in_basis(basis)


# ---------------------------------------------------------------------------
# closed formulas for n = 2
# ---------------------------------------------------------------------------

def euler_c2_closed(d: int) -> list:
    """Schur coefficients e^d_j of the top class c_{d+1} for n = 2:
    the two-sum formula in unsigned Stirling numbers of the first kind,
    for j = 0..floor((d+1)/2)."""
    if d < 1:
        raise OutOfDomainError("d must be >= 1")
    out = []
    for j in range((d + 1) // 2 + 1):
        if j == 0:
            out.append((0, 0))
            continue
        total = 0
        for k in range(j - 1, d - j + 1):
            total += ((-1) ** (k + j - 1) * comb(k, j - 1)
                      * stirling_first(d, d - k) * d ** (d + 1 - k))
        for k in range(d - j + 1, d):
            c = ((-1) ** (k + j - 1) * comb(k, j - 1)
                 - (-1) ** (d + 1 + k - j) * comb(k, d - j + 1))
            total += c * stirling_first(d, d - k) * d ** (d + 1 - k)
        out.append((j, total))
    return out


def euler_coefficient(d: int, j: int) -> int:
    """e^d_j, i.e. coef(s_{d+1-j,j}, c_{d+1}) for n = 2; 0 out of range."""
    if j < 0 or j > (d + 1) // 2:
        return 0
    return dict(euler_c2_closed(d))[j]


def odd_spec() -> RisingProductSpec:
    """The rising product in delta = (d-1)/2 obtained by pairing opposite
    weight factors of the n = 2 product at odd d, written in e_1, e_2."""
    D = lambda coeffs: UniPoly(coeffs, var="delta")
    table = {
        ((1, 0), 0): D({1: Fraction(2), 0: Fraction(1)}),
        ((2, 0), 1): D({1: Fraction(2), 0: Fraction(1)}),
        ((2, 0), 2): D({0: Fraction(-1)}),
        ((0, 1), 0): D({2: Fraction(4), 1: Fraction(4), 0: Fraction(1)}),
        ((0, 1), 1): D({1: Fraction(-8), 0: Fraction(-4)}),
        ((0, 1), 2): D({0: Fraction(4)}),
    }
    return RisingProductSpec.single("delta", table, UniPoly.x("delta"), 2)


def odd_grouped_coefficient(H) -> UniPoly:
    """Coefficient of e_1^{H_1} e_2^{H_2} in c(Pol^{2*delta+1}(C^2)) as a
    polynomial in delta."""
    p = stirling_coefficient(odd_spec(), tuple(H))
    return UniPoly({ev[0]: c for ev, c in p.terms.items()}, var="delta")


def odd_grouped_in_d(H) -> UniPoly:
    """The same coefficient re-parameterized by d = 2*delta + 1; a polynomial
    in d that matches the elementary-basis coefficient g at every odd d."""
    half = UniPoly({1: Fraction(1, 2), 0: Fraction(-1, 2)}, var="d")
    return odd_grouped_coefficient(H)(half)


# ---------------------------------------------------------------------------
# leading terms
# ---------------------------------------------------------------------------

def leading_term(basis: str, lam, n: int):
    """Predicted (coefficient, d-exponent, conjectural-flag) for the leading
    term of the coefficient of the basis element indexed by lam in c_k.

    Monomial and Schur predictions are exact; elementary predictions are
    proved for lam = (1^k) for all n and for all lam at n = 2, and flagged
    as conjectural otherwise.
    """
    lam = check_partition(lam) if lam else ()
    validate_basis_index(basis, lam, n)
    k = sum(lam)
    if basis == "monomial":
        coeff = Fraction(1)
        for p in lam:
            coeff /= factorial(p)
        return coeff * Fraction(1, factorial(n)) ** k, n * k, False
    if basis == "schur":
        coeff = (Fraction(syt_count(lam), factorial(k))
                 * Fraction(1, factorial(n)) ** k)
        return coeff, n * k, False
    if basis == "elementary":
        H = [0] * n
        for p in lam:
            H[p - 1] += 1
        coeff = Fraction(1)
        exponent = 0
        for i in range(1, n + 1):
            h = H[i - 1]
            coeff *= (Fraction(factorial(i - 1), factorial(n + i - 1)) ** h
                      / factorial(h))
            exponent += (n + i - 1) * h
        proved = (set(lam) <= {1}) or n == 2
        return coeff, exponent, not proved
    raise ValueError(f"no leading-term formula in basis {basis!r}")


def elementary_degree_bound(lam, n: int) -> int:
    """n*H_1 + (n+1)*H_2 + ... + (2n-1)*H_n for lam = (1^H_1,...,n^H_n)."""
    lam = check_partition(lam) if lam else ()
    return sum(n + p - 1 for p in lam)


# ---------------------------------------------------------------------------
# conjecture reports (observed vs predicted; never asserted)
# ---------------------------------------------------------------------------

def conjecture_report() -> str:
    """Non-asserting observations: the conjectural elementary-basis leading
    terms beyond the proved cases, and the apparent polynomiality of c_k
    coefficients in n at fixed k and d."""
    lines = ["conjectural elementary-basis leading terms (n=3):"]
    cp = chern_interpolated(3, 3, "elementary")
    for lam, g in sorted(cp.terms.items()):
        coeff, expo, conj = leading_term("elementary", lam, 3)
        if not conj:
            continue
        obs_deg = g.degree()
        obs_lead = g.leading_coeff()
        lines.append(
            f"  nu={lam}: observed {obs_lead}*d^{obs_deg}, "
            f"predicted {coeff}*d^{expo}, "
            f"{'match' if (obs_deg, obs_lead) == (expo, coeff) else 'MISMATCH'}")
    lines.append("n-dependence of coef(e_2, c_2) at fixed d=3 for n=2..6 "
                 "(binomial form predicts comb(3+n, n+1)):")
    for n in range(2, 7):
        cp2 = chern_interpolated(n, 2, "elementary")
        obs = cp2.terms.get((2,), UniPoly.const(0, "d"))(Fraction(3))
        lines.append(f"  n={n}: observed {obs}, predicted {comb(3 + n, n + 1)}")
    return "\n".join(lines)
