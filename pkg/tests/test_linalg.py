from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from toricproj.errors import InputError
from toricproj.linalg import (
    IntMat,
    RatMat,
    bareiss_det,
    elementary_divisors,
    gcd_maximal_minors,
    hnf,
    kernel_basis,
    rank,
    solve_right_factor,
    xgcd,
)
from toricproj.presets import ex55_data


@st.composite
def matrices(draw, max_rows=5, max_cols=7, lo=-5, hi=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r))
    return IntMat.from_rows(rows, c)


def unimodular(draw, n):
    # product of random elementary row operations
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(draw(st.integers(0, 6))):
        i = draw(st.integers(0, n - 1))
        j = draw(st.integers(0, n - 1))
        if i == j:
            u[i] = [-x for x in u[i]]
        else:
            k = draw(st.integers(-3, 3))
            u[i] = [x + k * y for x, y in zip(u[i], u[j])]
    return IntMat.from_rows(u, n)


def test_xgcd():
    for a, b in [(12, 18), (-7, 3), (0, 5), (0, 0), (5, 0)]:
        g, x, y = xgcd(a, b)
        assert g >= 0 and a * x + b * y == g


def test_intmat_shape_checked():
    with pytest.raises(InputError):
        IntMat(2, 2, (1, 2, 3))
    with pytest.raises(InputError):
        IntMat.from_rows([[1, 2], [3]])


def test_intmat_json_round_trip():
    m = IntMat.from_rows([[10**30, -1], [0, 7]])
    obj = m.to_json()
    assert all(isinstance(x, str) for r in obj["entries"] for x in r)
    assert IntMat.from_json(obj) == m


def test_ratmat_lowest_terms():
    r = RatMat.from_rows([[Fraction(2, 4), Fraction(3, -6)]])
    assert r.to_rows() == [[Fraction(1, 2), Fraction(-1, 2)]]
    assert RatMat.from_json(r.to_json()) == r


def test_hnf_identity():
    assert hnf(IntMat.identity(2)) == IntMat.identity(2)


def test_hnf_zero_matrix():
    h = hnf(IntMat.zeros(2, 3))
    assert (h.rows, h.cols) == (0, 3)


def test_hnf_small_example_matches_textbook():
    rows = [[2, 4, 4], [0, 6, 12]]
    assert hnf(IntMat.from_rows(rows)).to_rows() == oracles.textbook_hnf(rows, 3)


def test_hnf_reduces_above_pivots():
    h = hnf(IntMat.from_rows([[1, 7], [0, 3]])).to_rows()
    assert h == [[1, 1], [0, 3]]


def test_kernel_ex55():
    d = ex55_data()
    kn = kernel_basis(IntMat.from_json(d["N"]))
    km = kernel_basis(IntMat.from_json(d["M"]))
    from toricproj.lattice import Lattice
    assert kn == Lattice.span([[1, 0, 0, 1, -3, 0, 0], [0, 0, 1, 0, 0, 2, -5]], 7)
    assert km == Lattice.span([[int(x) for x in v] for v in d["kernel_M"]], 7)
    assert km.rank == 4


def test_kernel_of_identity_is_zero():
    assert kernel_basis(IntMat.identity(2)).rank == 0


def test_kernel_of_empty_rows_is_everything():
    k = kernel_basis(IntMat.zeros(0, 3))
    assert k.rank == 3


def test_solve_self():
    n = IntMat.from_rows([[1, 2, 3], [0, 1, 4]])
    d = solve_right_factor(n, n)
    assert d.to_rows() == [[1, 0], [0, 1]]


def test_solve_d7():
    n = IntMat.from_rows([[5, 3, 2, 0], [0, 2, 3, 5]])
    m = IntMat.from_rows([[4, 6, 7, 9]])
    d = solve_right_factor(n, m)
    assert d.to_rows() == [[Fraction(4, 5), Fraction(9, 5)]]
    assert (d @ n).equals_int(m)


def test_solve_infeasible():
    assert solve_right_factor(IntMat.from_rows([[2, 3]]), IntMat.from_rows([[1, 1]])) is None


def test_solve_dimension_mismatch():
    with pytest.raises(InputError):
        solve_right_factor(IntMat.identity(2), IntMat.identity(3))


def test_minors_examples():
    assert gcd_maximal_minors(IntMat.from_rows([[5, 1, 4, 0], [0, 2, 3, 5]])) == 5
    assert gcd_maximal_minors(IntMat.from_rows([[2, 1, 0], [0, 1, 2]])) == 2
    assert gcd_maximal_minors(IntMat.identity(4)) == 1
    assert gcd_maximal_minors(IntMat.from_rows([[1, 2], [2, 4]])) == 0


def test_minors_rejects_tall():
    with pytest.raises(InputError):
        gcd_maximal_minors(IntMat.from_rows([[1], [2]]))


def test_elementary_divisors_small():
    assert elementary_divisors(IntMat.from_rows([[2, 0], [0, 6]])) == [2, 6]
    assert elementary_divisors(IntMat.from_rows([[2, 4], [6, 8]])) == [2, 4]


@given(matrices())
def test_hnf_matches_textbook(m):
    assert hnf(m).to_rows() == oracles.textbook_hnf(m.to_rows(), m.cols)


@given(matrices())
def test_hnf_idempotent(m):
    assert hnf(hnf(m)) == hnf(m)


@given(st.data())
def test_hnf_depends_only_on_row_space(data):
    m = data.draw(matrices())
    u = unimodular(data.draw, m.rows)
    assert hnf(u @ m) == hnf(m)


@given(matrices())
def test_kernel_vectors_are_annihilated(m):
    k = kernel_basis(m)
    for b in k.basis:
        assert not any(m.apply(b))
    assert k.rank + rank(m) == m.cols
    assert rank(m) == oracles.rank(m.to_rows(), m.cols)


@settings(max_examples=40)
@given(matrices(max_rows=4, max_cols=5, lo=-3, hi=3))
def test_kernel_contains_small_solutions(m):
    k = kernel_basis(m)
    for v in oracles.small_kernel_vectors(m.to_rows(), m.cols, 2):
        assert v in k


@given(matrices())
def test_kernel_is_saturated(m):
    k = kernel_basis(m)
    assert oracles.is_saturated([list(b) for b in k.basis], m.cols)


@given(matrices())
def test_elementary_divisors_match_determinantal(m):
    assert elementary_divisors(m) == oracles.determinantal_divisors(m.to_rows())


@given(st.data())
def test_minors_invariant_under_row_ops(data):
    m = data.draw(matrices(max_rows=3, max_cols=5))
    if m.rows > m.cols:
        return
    u = unimodular(data.draw, m.rows)
    assert gcd_maximal_minors(u @ m) == gcd_maximal_minors(m) == oracles.minors_gcd(m.to_rows(), m.rows)


@given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_matches_fraction_det(rows):
    assert bareiss_det(rows) == oracles.det(rows)


@given(st.data())
def test_solve_right_factor_exact(data):
    n = data.draw(matrices(max_rows=3, max_cols=5))
    d = data.draw(st.lists(st.lists(st.integers(-3, 3), min_size=n.rows, max_size=n.rows),
                           min_size=1, max_size=3))
    m = IntMat.from_rows(d, n.rows) @ n
    sol = solve_right_factor(n, m)
    assert sol is not None
    assert (sol @ n).equals_int(m)


@given(matrices(max_rows=3, max_cols=4), matrices(max_rows=3, max_cols=4))
def test_solve_none_means_kernel_not_contained(n, m):
    if n.cols != m.cols:
        return
    sol = solve_right_factor(n, m)
    kn = kernel_basis(n)
    contained = all(not any(m.apply(b)) for b in kn.basis)
    assert (sol is not None) == contained
