"""Exact rational polynomial arithmetic: univariate and sparse multivariate
polynomials over Q, truncated power-series operations, and exact Lagrange
interpolation.

All coefficients are ``fractions.Fraction``; nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class DuplicateAbscissaError(ValueError):
    pass


class InconsistentDataError(ValueError):
    """Extra interpolation points do not lie on the fitted polynomial."""


class NotInvertibleError(ValueError):
    """Series division by something without constant term 1."""


def rat(x) -> Fraction:
    """Coerce ints / strings / Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def rat_to_str(q: Fraction) -> str:
    q = rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rat_from_str(s: str) -> Fraction:
    return Fraction(s)


class TruncationPolicy:
    """Discard every term of total degree strictly above ``max_total_degree``."""

    __slots__ = ("max_total_degree",)

    def __init__(self, max_total_degree: int):
        if max_total_degree < 0:
            raise ValueError("max_total_degree must be non-negative")
        self.max_total_degree = int(max_total_degree)

    def __repr__(self):
        return f"TruncationPolicy({self.max_total_degree})"


class UniPoly:
    """Univariate polynomial over Q, sparse dict {exponent: coefficient}.

    The zero polynomial has ``degree() is None`` (a sentinel distinct from
    any integer, so it cannot collide with evaluation points like -1).
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs: Mapping[int, Fraction] | None = None, var: str = "d"):
        self.var = var
        self.coeffs = {}
        if coeffs:
            for e, c in coeffs.items():
                c = rat(c)
                if c != 0:
                    self.coeffs[int(e)] = c

    # -- constructors ---------------------------------------------------
    @classmethod
    def const(cls, c, var: str = "d") -> "UniPoly":
        return cls({0: rat(c)}, var=var)

    @classmethod
    def x(cls, var: str = "d") -> "UniPoly":
        return cls({1: Fraction(1)}, var=var)

    @classmethod
    def from_roots(cls, roots: Iterable, var: str = "d") -> "UniPoly":
        p = cls.const(1, var=var)
        for r in roots:
            p = p * cls({1: Fraction(1), 0: -rat(r)}, var=var)
        return p

    # -- basics ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self):
        if not self.coeffs:
            return None
        return max(self.coeffs)

    def coeff(self, e: int) -> Fraction:
        return self.coeffs.get(e, Fraction(0))

    def leading_coeff(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[max(self.coeffs)]

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly.const(other, var=self.var)
        return NotImplemented

    def __hash__(self):
        return hash((self.var, tuple(sorted(self.coeffs.items()))))

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly.const(other, var=self.var)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return UniPoly(out, var=self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly({e: -c for e, c in self.coeffs.items()}, var=self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return UniPoly(out, var=self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = UniPoly.const(1, var=self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "UniPoly":
        c = rat(c)
        return UniPoly({e: v * c for e, v in self.coeffs.items()}, var=self.var)

    def divmod(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = UniPoly({}, var=self.var)
        r = self
        dother = other.degree()
        lc = other.leading_coeff()
        while not r.is_zero() and r.degree() >= dother:
            shift = r.degree() - dother
            factor = UniPoly({shift: r.leading_coeff() / lc}, var=self.var)
            q = q + factor
            r = r - factor * other
        return q, r

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("not exactly divisible")
        return q

    def divisible_by(self, other: "UniPoly") -> bool:
        return self.divmod(other)[1].is_zero()

    def derivative(self) -> "UniPoly":
        return UniPoly({e - 1: c * e for e, c in self.coeffs.items() if e > 0},
                       var=self.var)

    # -- evaluation / composition ---------------------------------------
    def __call__(self, value):
        """Horner evaluation; ``value`` may be a Fraction, int, UniPoly or
        MultiPoly (polynomial composition)."""
        if isinstance(value, (UniPoly, MultiPoly)):
            acc = value * 0
        else:
            acc = Fraction(0)
            value = rat(value)
        result = None
        prev_e = None
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if result is None:
                result = acc + c
                prev_e = e
            else:
                for _ in range(prev_e - e):
                    result = result * value
                result = result + c
                prev_e = e
        if result is None:
            return acc
        for _ in range(prev_e):
            result = result * value
        return result

    # -- io ---------------------------------------------------------------
    def to_json(self) -> list:
        return [[e, rat_to_str(c)] for e, c in sorted(self.coeffs.items())]

    @classmethod
    def from_json(cls, data: Sequence, var: str = "d") -> "UniPoly":
        return cls({int(e): rat_from_str(c) for e, c in data}, var=var)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            cs = rat_to_str(c)
            if e == 0:
                parts.append(cs)
            else:
                head = "" if c == 1 else ("-" if c == -1 else f"{cs}*")
                xs = self.var if e == 1 else f"{self.var}^{e}"
                parts.append(f"{head}{xs}")
        return " + ".join(parts).replace("+ -", "- ")


class MultiPoly:
    """Sparse multivariate polynomial over Q: {exponent tuple: Fraction}."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple, Fraction] | None = None):
        self.vars = tuple(vars)
        self.terms = {}
        if terms:
            n = len(self.vars)
            for ev, c in terms.items():
                if len(ev) != n:
                    raise ValueError("exponent vector length mismatch")
                c = rat(c)
                if c != 0:
                    self.terms[tuple(int(e) for e in ev)] = c

    @classmethod
    def const(cls, c, vars: Sequence[str]) -> "MultiPoly":
        return cls(vars, {(0,) * len(vars): rat(c)})

    @classmethod
    def var(cls, name: str, vars: Sequence[str]) -> "MultiPoly":
        vars = tuple(vars)
        i = vars.index(name)
        ev = tuple(1 if j == i else 0 for j in range(len(vars)))
        return cls(vars, {ev: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, ev: tuple) -> Fraction:
        return self.terms.get(tuple(ev), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def total_degree(self):
        if not self.terms:
            return None
        return max(sum(ev) for ev in self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.const(other, self.vars)
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError("variable mismatch")
            return other
        return MultiPoly.const(other, self.vars)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for ev, c in other.terms.items():
            s = out.get(ev, Fraction(0)) + c
            if s:
                out[ev] = s
            else:
                out.pop(ev, None)
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {ev: -c for ev, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = rat(other)
            return MultiPoly(self.vars, {ev: v * c for ev, v in self.terms.items()})
        other = self._coerce(other)
        return self.mul_truncated(other, None)

    __rmul__ = __mul__

    def mul_truncated(self, other: "MultiPoly", max_degree: int | None) -> "MultiPoly":
        """Product, dropping result terms of total degree > max_degree."""
        out: dict[tuple, Fraction] = {}
        for ev1, c1 in self.terms.items():
            d1 = sum(ev1)
            for ev2, c2 in other.terms.items():
                if max_degree is not None and d1 + sum(ev2) > max_degree:
                    continue
                ev = tuple(a + b for a, b in zip(ev1, ev2))
                s = out.get(ev, Fraction(0)) + c1 * c2
                if s:
                    out[ev] = s
                else:
                    out.pop(ev, None)
        return MultiPoly(self.vars, out)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def truncate(self, policy: TruncationPolicy | int) -> "MultiPoly":
        m = policy.max_total_degree if isinstance(policy, TruncationPolicy) else policy
        return MultiPoly(self.vars,
                         {ev: c for ev, c in self.terms.items() if sum(ev) <= m})

    def filter_terms(self, keep) -> "MultiPoly":
        return MultiPoly(self.vars,
                         {ev: c for ev, c in self.terms.items() if keep(ev)})

    def homogeneous_component(self, k: int) -> "MultiPoly":
        return self.filter_terms(lambda ev: sum(ev) == k)

    def evaluate(self, values: Mapping[str, Fraction]):
        """Full evaluation at rational values for every variable."""
        total = Fraction(0)
        vals = [rat(values[v]) for v in self.vars]
        for ev, c in self.terms.items():
            term = c
            for v, e in zip(vals, ev):
                if e:
                    term *= v ** e
            total += term
        return total

    def substitute(self, values: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute polynomials (sharing one variable set) for variables."""
        some = next(iter(values.values()))
        out = MultiPoly.const(0, some.vars)
        for ev, c in self.terms.items():
            term = MultiPoly.const(c, some.vars)
            for v, e in zip(self.vars, ev):
                if e:
                    term = term * values[v] ** e
            out = out + term
        return out

    def is_symmetric(self) -> bool:
        """Invariance under all adjacent transpositions of the variables."""
        n = len(self.vars)
        for i in range(n - 1):
            for ev, c in self.terms.items():
                swapped = list(ev)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                if self.terms.get(tuple(swapped), Fraction(0)) != c:
                    return False
        return True

    def to_json(self) -> list:
        return [[list(ev), rat_to_str(c)]
                for ev, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data: Sequence, vars: Sequence[str]) -> "MultiPoly":
        return cls(vars, {tuple(ev): rat_from_str(c) for ev, c in data})

    def __repr__(self):
        if not self.terms:
            return "0"
        def key(ev):
            return (sum(ev), ev)
        parts = []
        for ev in sorted(self.terms, key=key):
            c = self.terms[ev]
            mono = "*".join(
                (v if e == 1 else f"{v}^{e}")
                for v, e in zip(self.vars, ev) if e)
            cs = rat_to_str(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# Lagrange interpolation
# ---------------------------------------------------------------------------

def interpolate(points, degree_bound: int, var: str = "d") -> UniPoly:
    """Unique polynomial of degree <= degree_bound through the first
    degree_bound+1 points; any extra points act as consistency guards.

    Raises DuplicateAbscissaError on repeated abscissas and
    InconsistentDataError when a guard point misses the curve (which signals
    a wrong degree bound upstream).
    """
    pts = [(int(a), rat(v)) for a, v in points]
    if len({a for a, _ in pts}) != len(pts):
        raise DuplicateAbscissaError("duplicate interpolation abscissas")
    if len(pts) < degree_bound + 1:
        raise ValueError("need at least degree_bound+1 points")
    base = pts[: degree_bound + 1]
    # Newton's divided differences, exact.
    xs = [a for a, _ in base]
    coef = [v for _, v in base]
    for j in range(1, len(base)):
        for i in range(len(base) - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = UniPoly({}, var=var)
    basis = UniPoly.const(1, var=var)
    for i, c in enumerate(coef):
        poly = poly + basis.scale(c)
        if i < len(coef) - 1:
            basis = basis * UniPoly({1: Fraction(1), 0: -Fraction(xs[i])}, var=var)
    for a, v in pts[degree_bound + 1:]:
        if poly(a) != v:
            raise InconsistentDataError(
                f"guard point ({a}, {v}) not on interpolated polynomial")
    return poly


# ---------------------------------------------------------------------------
# Truncated power series operations
# ---------------------------------------------------------------------------

def series_multiply(operands: Sequence[MultiPoly], policy: TruncationPolicy) -> MultiPoly:
    if not operands:
        raise ValueError("need at least one operand")
    out = operands[0].truncate(policy)
    for f in operands[1:]:
        out = out.mul_truncated(f.truncate(policy), policy.max_total_degree)
    return out


def series_invert(f: MultiPoly, policy: TruncationPolicy) -> MultiPoly:
    """Multiplicative inverse of a series with constant term 1, truncated."""
    if f.constant_term() != 1:
        raise NotInvertibleError("series inversion needs constant term 1")
    m = policy.max_total_degree
    g = f.truncate(policy)
    h = MultiPoly.const(1, f.vars) - g      # no constant term
    # 1/(1-h) = 1 + h + h^2 + ...  (h nilpotent up to truncation degree)
    out = MultiPoly.const(1, f.vars)
    power = MultiPoly.const(1, f.vars)
    for _ in range(m):
        power = power.mul_truncated(h, m)
        if power.is_zero():
            break
        out = out + power
    return out


def series_divide(f: MultiPoly, g: MultiPoly, policy: TruncationPolicy) -> MultiPoly:
    return f.truncate(policy).mul_truncated(series_invert(g, policy),
                                            policy.max_total_degree)


def series_arith(op: str, operands: Sequence[MultiPoly], policy: TruncationPolicy) -> MultiPoly:
    if op == "multiply":
        return series_multiply(operands, policy)
    if op == "invert":
        (f,) = operands
        return series_invert(f, policy)
    if op == "divide":
        f, g = operands
        return series_divide(f, g, policy)
    raise ValueError(f"unknown series operation {op!r}")
