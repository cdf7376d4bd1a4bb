"""Partitions and the classical bases of symmetric polynomials in n
variables: monomial, elementary, Schur and power-sum, with exact basis
conversion, standard Young tableau counts and Catalan triangle numbers.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exactcore import MultiPoly, TruncationPolicy, rat_to_str, rat_from_str

BASES = ("monomial", "elementary", "schur", "power")


class InvalidIndexError(ValueError):
    """Partition does not index a basis element in this many variables."""


class NotSymmetricError(ValueError):
    pass


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def check_partition(parts) -> tuple:
    parts = tuple(int(p) for p in parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    return parts


def weight(parts) -> int:
    return sum(parts)


def conjugate(parts) -> tuple:
    parts = tuple(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))


def multiplicities(parts) -> dict:
    """Value -> multiplicity (includes zeros if present)."""
    out: dict[int, int] = {}
    for p in parts:
        out[p] = out.get(p, 0) + 1
    return out


def enumerate_partitions(weight: int, max_length: int | None = None,
                         max_part: int | None = None) -> list[tuple]:
    """All partitions of ``weight`` under the constraints, lexicographically
    decreasing first part first."""
    if weight < 0:
        raise ValueError("weight must be non-negative")

    def rec(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    cap = weight if max_part is None else min(max_part, weight)
    slots = weight if max_length is None else max_length
    if weight == 0:
        return [()]
    return sorted(rec(weight, cap, slots), reverse=True)


def dominance_key(parts) -> tuple:
    """Graded-lex key: sort descending to pick the pivot among maximal terms."""
    return (sum(parts), tuple(parts))


# ---------------------------------------------------------------------------
# expansions into the x-variables
# ---------------------------------------------------------------------------

def _xvars(n: int) -> tuple:
    return tuple(f"x{i+1}" for i in range(n))


def _monomial_x(lam: tuple, n: int) -> MultiPoly:
    xs = _xvars(n)
    terms = {}
    padded = tuple(lam) + (0,) * (n - len(lam))
    for perm in set(itertools.permutations(padded)):
        terms[perm] = Fraction(1)
    return MultiPoly(xs, terms)


@lru_cache(maxsize=None)
def _elementary_one_x(k: int, n: int) -> MultiPoly:
    xs = _xvars(n)
    terms = {}
    for combo in itertools.combinations(range(n), k):
        ev = tuple(1 if i in combo else 0 for i in range(n))
        terms[ev] = Fraction(1)
    return MultiPoly(xs, terms)


def _elementary_x(nu: tuple, n: int) -> MultiPoly:
    out = MultiPoly.const(1, _xvars(n))
    for part in nu:
        out = out * _elementary_one_x(part, n)
    return out


def _power_one_x(k: int, n: int) -> MultiPoly:
    xs = _xvars(n)
    terms = {tuple(k if j == i else 0 for j in range(n)): Fraction(1)
             for i in range(n)}
    return MultiPoly(xs, terms)


def _power_x(lam: tuple, n: int) -> MultiPoly:
    out = MultiPoly.const(1, _xvars(n))
    for part in lam:
        out = out * _power_one_x(part, n)
    return out


@lru_cache(maxsize=None)
def _complete_one_x(k: int, n: int) -> MultiPoly:
    xs = _xvars(n)
    terms = {}
    for combo in itertools.combinations_with_replacement(range(n), k):
        ev = [0] * n
        for i in combo:
            ev[i] += 1
        terms[tuple(ev)] = Fraction(1)
    return MultiPoly(xs, terms)


@lru_cache(maxsize=None)
def _schur_x(lam: tuple, n: int) -> MultiPoly:
    # Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}), division-free;
    # the matrix size is len(lambda) <= n
    m = len(lam)
    if m == 0:
        return MultiPoly.const(1, _xvars(n))

    def h(k):
        if k < 0:
            return MultiPoly.const(0, _xvars(n))
        return _complete_one_x(k, n)

    mat = [[h(lam[i] - i + j) for j in range(m)] for i in range(m)]
    return _det(mat, _xvars(n))


def _det(mat, xs) -> MultiPoly:
    m = len(mat)
    if m == 1:
        return mat[0][0]
    out = MultiPoly.const(0, xs)
    # expansion along the first column; matrices here are tiny
    for i in range(m):
        minor = [row[:0] + row[1:] for j, row in enumerate(mat) if j != i]
        term = mat[i][0] * _det(minor, xs)
        out = out + term if i % 2 == 0 else out - term
    return out


def validate_basis_index(basis: str, lam: tuple, n: int) -> None:
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    check_partition(lam)
    if basis in ("monomial", "schur") and len(lam) > n:
        raise InvalidIndexError(
            f"{basis} index {lam} has length > {n} variables")
    if basis == "elementary" and any(p > n for p in lam):
        raise InvalidIndexError(
            f"elementary index {lam} has a part > {n} variables")


def to_x_expansion(basis: str, lam: tuple, n: int,
                   policy: TruncationPolicy | None = None) -> MultiPoly:
    """The basis element as a polynomial in x1..xn."""
    lam = tuple(lam)
    validate_basis_index(basis, lam, n)
    if basis == "monomial":
        f = _monomial_x(lam, n)
    elif basis == "elementary":
        f = _elementary_x(lam, n)
    elif basis == "schur":
        f = _schur_x(lam, n)
    else:
        f = _power_x(lam, n)
    if policy is not None:
        f = f.truncate(policy)
    return f


# ---------------------------------------------------------------------------
# expansions of symmetric polynomials in a basis
# ---------------------------------------------------------------------------

def _monomial_support(f: MultiPoly) -> dict:
    """Partition -> coefficient of m_lambda (reads off sorted exponents)."""
    out = {}
    for ev, c in f.terms.items():
        lam = tuple(sorted((e for e in ev if e), reverse=True))
        if tuple(sorted(ev, reverse=True)) == lam + (0,) * (len(ev) - len(lam)):
            out[lam] = c
    return out


def expand_in_basis(f: MultiPoly, basis: str) -> dict:
    """Exact expansion of a symmetric polynomial; returns {partition: coeff}.

    Schur/elementary/power expansions peel off the graded-lex maximal
    (resp. minimal, for power sums) remaining term; unitriangularity of the
    transition matrices makes this terminate with the exact answer.
    """
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    if not f.is_symmetric():
        raise NotSymmetricError("input is not symmetric in its variables")
    n = len(f.vars)
    if basis == "monomial":
        return {lam: c for lam, c in _monomial_support(f).items() if c}

    out: dict[tuple, Fraction] = {}
    rem = f
    while not rem.is_zero():
        support = {lam: c for lam, c in _monomial_support(rem).items() if c}
        if not support:
            raise NotSymmetricError("symmetric reduction failed")
        if basis == "power":
            lam = min(support, key=dominance_key)
            mult_fact = 1
            for m in multiplicities(lam).values():
                mult_fact *= factorial(m)
            c = support[lam] / mult_fact
            piv = _power_x(lam, n)
        elif basis == "schur":
            lam = max(support, key=dominance_key)
            c = support[lam]
            piv = _schur_x(lam, n)
        else:  # elementary: pivot on the conjugate of the lex-max partition
            lam_mono = max(support, key=dominance_key)
            lam = conjugate(lam_mono)
            c = support[lam_mono]
            piv = _elementary_x(lam, n)
        out[lam] = out.get(lam, Fraction(0)) + c
        rem = rem - piv * c
    return {lam: c for lam, c in out.items() if c}


def convert_expansion(terms: dict, src_basis: str, dst_basis: str, n: int) -> dict:
    """Convert {partition: coeff} between bases; coeffs may be any ring
    elements that support +,* (Fractions or polynomials in d)."""
    if src_basis == dst_basis:
        return dict(terms)
    out: dict[tuple, object] = {}
    for lam, c in terms.items():
        x = to_x_expansion(src_basis, lam, n)
        for mu, k in expand_in_basis(x, dst_basis).items():
            cur = out.get(mu)
            add = c * k
            out[mu] = add if cur is None else cur + add
    return {mu: c for mu, c in out.items() if not _is_zero_coeff(c)}


def _is_zero_coeff(c) -> bool:
    if isinstance(c, Fraction) or isinstance(c, int):
        return c == 0
    return c.is_zero()


# ---------------------------------------------------------------------------
# counts
# ---------------------------------------------------------------------------

def syt_count(lam: tuple) -> int:
    """Number of standard Young tableaux of shape lambda
    (Frobenius determinant-free product formula)."""
    lam = check_partition(lam) if lam else ()
    if not lam:
        return 1
    k = sum(lam)
    l = len(lam)
    num = factorial(k)
    for i in range(l):
        for j in range(i + 1, l):
            num *= lam[i] - lam[j] + j - i
    den = 1
    for i in range(l):
        den *= factorial(lam[i] + l - 1 - i)
    assert num % den == 0
    return num // den


def catalan_triangle(delta: int, j: int) -> int:
    """C(delta-j, j) = binom(delta,j) - binom(delta,j-1); 0 out of range."""
    if delta < 0 or j < 0 or 2 * j > delta + 1:
        return 0
    return comb(delta, j) - (comb(delta, j - 1) if j >= 1 else 0)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def expansion_to_json(basis: str, n: int, terms: dict) -> dict:
    def coeff_json(c):
        if isinstance(c, (int, Fraction)):
            return rat_to_str(Fraction(c))
        return c.to_json()
    return {"basis": basis, "n": n,
            "terms": [[list(lam), coeff_json(c)]
                      for lam, c in sorted(terms.items())]}


def expansion_from_json(data: dict) -> tuple:
    from .exactcore import UniPoly
    terms = {}
    for lam, c in data["terms"]:
        lam = check_partition(lam) if lam else ()
        if isinstance(c, str):
            terms[lam] = rat_from_str(c)
        else:
            terms[lam] = UniPoly.from_json(c)
    return data["basis"], data["n"], terms
