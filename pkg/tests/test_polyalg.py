from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from toricproj.errors import InputError
from toricproj.linalg import IntMat, kernel_basis
from toricproj.poly import (
    Binomial,
    MonomialMap,
    Poly,
    a_degree_check,
    apply_map,
    binomial_from_vector,
    format_poly,
    parse_poly,
    power,
)
from toricproj.presets import ex55_certificate, ex55_data


def polys(nvars, max_terms=4, max_exp=3):
    term = st.tuples(st.lists(st.integers(0, max_exp), min_size=nvars, max_size=nvars), st.integers(-9, 9))
    return st.lists(term, max_size=max_terms).map(lambda ts: Poly(nvars, [(tuple(e), c) for e, c in ts]))


def test_zero_coefficients_dropped():
    p = Poly(2, [((1, 0), 3), ((1, 0), -3), ((0, 1), 0)])
    assert not p and len(p) == 0


def test_arithmetic_basics():
    x, y = Poly.var(0, 2), Poly.var(1, 2)
    assert (x + y) * (x - y) == x * x - y * y
    assert 1 - x == Poly.constant(1, 2) - x
    assert x**0 == Poly.constant(1, 2)


def test_mismatched_vars_rejected():
    with pytest.raises(InputError):
        Poly.var(0, 2) + Poly.var(0, 3)


def test_binomial_from_vector():
    assert binomial_from_vector([0, 0]).is_zero()
    b = binomial_from_vector([3, 0, 4, 0, -7])
    assert b.plus == (3, 0, 4, 0, 0) and b.minus == (0, 0, 0, 0, 7)
    b = binomial_from_vector([9, -4])
    assert b.to_poly() == parse_poly("x1^9 - x2^4")


def test_power_small_cases():
    t = Poly.var(0, 2) - Poly.var(1, 2)
    assert power(t, 0) == Poly.constant(1, 2)
    assert power(t, 1) == t
    assert power(t, 2) == parse_poly("x1^2 - 2 x1 x2 + x2^2")


def test_power_curve_binomial():
    p = power(parse_poly("x1^13 - x2^4"), 5)
    want = {(13 * (5 - i), 4 * i): (-1) ** i * comb(5, i) for i in range(6)}
    assert dict(p.terms) == want


def test_power_negative_exponent_rejected():
    with pytest.raises(InputError):
        power(Poly.var(0, 1), -1)


def test_apply_map_zero():
    phi = MonomialMap.from_matrix(IntMat.from_rows([[5, 3, 2, 0], [0, 2, 3, 5]]))
    assert apply_map(phi, Poly.zero(4)) == Poly.zero(2)


def test_apply_map_d7():
    phi = MonomialMap.from_matrix(IntMat.from_rows([[5, 3, 2, 0], [0, 2, 3, 5]]))
    assert apply_map(phi, parse_poly("x1^9 - x4^4", 4)) == parse_poly("x1^45 - x2^20", 2)


def test_apply_map_ex55():
    d = ex55_data()
    phi = MonomialMap.from_matrix(IntMat.from_json(d["N"]))
    f1 = ex55_certificate().deltas[0]
    lhs = power(parse_poly("x4^7 - x1^5 x2^3", 5), 3)
    assert apply_map(phi, f1) == lhs


def test_monomial_map_rejects_negative_unless_laurent():
    m = IntMat.from_rows([[1, -1]])
    with pytest.raises(InputError):
        MonomialMap.from_matrix(m)
    phi = MonomialMap.from_matrix(m, laurent=True)
    assert apply_map(phi, parse_poly("x2")) == Poly.monomial([-1])


def test_monomial_map_rejects_zero_column():
    with pytest.raises(InputError):
        MonomialMap.from_matrix(IntMat.from_rows([[1, 0]]))


def test_a_degree_examples():
    assert a_degree_check(IntMat.from_rows([[1, 2]]), parse_poly("x1^3 x2")) == (5,)
    assert a_degree_check(IntMat.from_rows([[1, 2]]), parse_poly("x1 - x2")) is None
    assert a_degree_check(IntMat.from_rows([[4, 6, 7, 9]]), parse_poly("x1 x4 - x2 x3")) == (13,)


def test_parse_and_format():
    p = parse_poly("3 x1^2 x3 - x2 + 7", 3)
    assert p == 3 * Poly.monomial([2, 0, 1]) - Poly.var(1, 3) + Poly.constant(7, 3)
    assert parse_poly(format_poly(p), 3) == p
    with pytest.raises(InputError):
        parse_poly("x1 + y2")
    with pytest.raises(InputError):
        parse_poly("x4", 2)


def test_poly_json_round_trip():
    p = parse_poly("123456789012345678901234567890 x1 x2^3 - 5 x3", 3)
    obj = p.to_json()
    assert obj["vars"] == "3"
    assert Poly.from_json(obj) == p


def test_binomial_json_round_trip():
    b = Binomial((1, 0, 2), (0, 3, 0))
    assert Binomial.from_json(b.to_json()) == b


@given(polys(3), polys(3), polys(3))
def test_ring_axioms(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p


@given(st.data())
def test_apply_map_is_homomorphism(data):
    n_src = data.draw(st.integers(1, 4))
    n_tgt = data.draw(st.integers(1, 3))
    cols = data.draw(st.lists(st.lists(st.integers(0, 3), min_size=n_tgt, max_size=n_tgt).filter(any),
                              min_size=n_src, max_size=n_src))
    phi = MonomialMap(tuple(map(tuple, cols)), n_tgt)
    p, q = data.draw(polys(n_src)), data.draw(polys(n_src))
    assert apply_map(phi, p * q) == apply_map(phi, p) * apply_map(phi, q)
    assert apply_map(phi, p + q) == apply_map(phi, p) + apply_map(phi, q)


@given(polys(2, max_terms=3, max_exp=2), st.integers(0, 4))
def test_power_step(p, e):
    assert power(p, e) * p == power(p, e + 1)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6))
def test_binomial_from_vector_reconstructs(z):
    b = binomial_from_vector(z)
    assert tuple(x - y for x, y in zip(b.plus, b.minus)) == tuple(z)
    assert all(x == 0 or y == 0 for x, y in zip(b.plus, b.minus))
    assert b.vector == tuple(z)


@given(st.data())
def test_kernel_binomials_are_homogeneous(data):
    cols = data.draw(st.integers(2, 5))
    rows = data.draw(st.lists(st.lists(st.integers(-4, 4), min_size=cols, max_size=cols), min_size=1, max_size=3))
    a = IntMat.from_rows(rows, cols)
    for u in kernel_basis(a).basis:
        assert a_degree_check(a, binomial_from_vector(u).to_poly()) is not None


@given(polys(3), polys(3), st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_evaluate_is_multiplicative(p, q, pt):
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
