from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from chernpol.exactcore import (DuplicateAbscissaError, InconsistentDataError,
                                MultiPoly, NotInvertibleError,
                                TruncationPolicy, UniPoly, interpolate,
                                series_divide, series_invert, series_multiply)


def test_unipoly_basics():
    p = UniPoly({2: F(1), 0: F(-3)})
    q = UniPoly.x() + 1
    assert (p + q).coeff(1) == 1
    assert (p * q).degree() == 3
    assert p.degree() == 2
    assert p(2) == 1
    assert (p - p).is_zero()
    assert UniPoly({}).degree() is None   # zero-degree sentinel


def test_unipoly_from_roots_and_division():
    p = UniPoly.from_roots([1, 2, 3])
    assert p(1) == p(2) == p(3) == 0
    assert p(0) == -6
    lin = UniPoly.from_roots([2])
    q, r = p.divmod(lin)
    assert r.is_zero()
    assert q * lin == p
    assert p.exact_div(lin) == q
    assert not p.divisible_by(UniPoly.from_roots([5]))
    with pytest.raises(ValueError):
        p.exact_div(UniPoly.from_roots([5]))


def test_unipoly_composition():
    p = UniPoly({2: F(1), 1: F(1)})          # d^2 + d
    inner = UniPoly({1: F(2), 0: F(1)})      # 2d + 1
    composed = p(inner)
    for v in range(-3, 4):
        assert composed(v) == p(inner(v))


def test_unipoly_composition_multipoly():
    p = UniPoly({2: F(1)})
    m = MultiPoly(("a", "b"), {(1, 0): F(1), (0, 1): F(1)})
    out = p(m)
    assert out.coeff((1, 1)) == 2


def test_unipoly_json_roundtrip():
    p = UniPoly({3: F(1, 2), 0: F(-7)})
    assert UniPoly.from_json(p.to_json()) == p


def test_unipoly_pow_derivative_scale():
    p = (UniPoly.x() + 1) ** 3
    assert p.coeff(1) == 3
    assert p.derivative() == (UniPoly.x() + 1).scale(3) * (UniPoly.x() + 1)


@settings(max_examples=30)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5),
       st.lists(st.integers(-5, 5), min_size=1, max_size=5),
       st.integers(-4, 4))
def test_unipoly_arith_is_pointwise(a, b, v):
    pa = UniPoly(dict(enumerate(a)))
    pb = UniPoly(dict(enumerate(b)))
    assert (pa + pb)(v) == pa(v) + pb(v)
    assert (pa * pb)(v) == pa(v) * pb(v)
    assert (pa - pb)(v) == pa(v) - pb(v)


def test_multipoly_basics():
    xs = ("x1", "x2")
    f = MultiPoly(xs, {(1, 0): F(1), (0, 1): F(1)})
    g = f * f
    assert g.coeff((1, 1)) == 2
    assert g.total_degree() == 2
    assert g.homogeneous_component(2) == g
    assert f.is_symmetric()
    assert not (f + MultiPoly.var("x1", xs)).is_symmetric()
    assert f.evaluate({"x1": 2, "x2": 3}) == 5


def test_multipoly_truncation():
    xs = ("x1",)
    f = MultiPoly(xs, {(0,): F(1), (1,): F(1)})
    p = f ** 5
    assert p.truncate(2) == f.mul_truncated(f, 2).mul_truncated(f, 2) \
        .mul_truncated(f, 2).mul_truncated(f, 2)
    assert p.truncate(TruncationPolicy(0)) == 1


def test_multipoly_substitute_and_json():
    xs = ("x1", "x2")
    f = MultiPoly(xs, {(2, 0): F(1), (0, 1): F(3)})
    e = MultiPoly(("e1",), {(1,): F(1)})
    sub = f.substitute({"x1": e, "x2": e * e})
    assert sub.coeff((2,)) == 4
    assert MultiPoly.from_json(f.to_json(), xs) == f


def test_interpolate_exact():
    p = UniPoly({4: F(3, 7), 2: F(-1), 0: F(5)})
    pts = [(a, p(a)) for a in range(-1, 7)]
    assert interpolate(pts, 4) == p


def test_interpolate_guard_fires_on_wrong_bound():
    pts = [(a, F(a) ** 3) for a in range(5)]
    with pytest.raises(InconsistentDataError):
        interpolate(pts, 2)


def test_interpolate_duplicate_abscissa():
    with pytest.raises(DuplicateAbscissaError):
        interpolate([(0, F(1)), (0, F(2))], 1)


def test_series_invert():
    xs = ("x1", "x2")
    one = MultiPoly.const(1, xs)
    f = one + MultiPoly.var("x1", xs) + MultiPoly.var("x2", xs)
    policy = TruncationPolicy(4)
    inv = series_invert(f, policy)
    assert f.mul_truncated(inv, 4) == one
    assert series_divide(f * f, f, policy) == f.truncate(policy)
    with pytest.raises(NotInvertibleError):
        series_invert(f * 2, policy)


def test_series_multiply():
    xs = ("x1",)
    x = MultiPoly.var("x1", xs)
    f = MultiPoly.const(1, xs) + x
    assert series_multiply([f, f, f], TruncationPolicy(2)).coeff((2,)) == 3
