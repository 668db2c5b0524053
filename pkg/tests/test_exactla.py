from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from findim import exactla as la
from oracles import sympy_nullity, sympy_rank

entries = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def _sym(rows):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows])


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_sympy(rows):
    assert la.rank(la.mat(rows)) == sympy_rank(rows)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_matches_sympy(rows):
    r, piv = la.rref(la.mat(rows))
    sr, spiv = _sym(rows).rref()
    assert tuple(piv) == spiv
    for i in range(len(piv)):
        assert [Fraction(int(x.numerator), int(x.denominator)) for x in r[i]] == [
            Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in sr.row(i)
        ]


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_basis_is_a_basis_of_the_kernel(rows):
    m = la.mat(rows)
    k = la.kernel_basis(m)
    assert k.shape[0] == sympy_nullity(rows)
    for v in k:
        assert la.is_zero(la.matmul(m, v))
    if k.shape[0]:
        assert la.rank(k) == k.shape[0]


@settings(max_examples=50, deadline=None)
@given(matrices(4, 4), st.lists(entries, min_size=4, max_size=4))
def test_solve_linear_consistent(rows, xs):
    a = la.mat(rows)
    x0 = la.vec(xs[: a.shape[1]])
    b = la.matmul(a, x0)
    x = la.solve_linear(a, b)
    assert x is not None
    assert np.all(la.matmul(a, x) == b)


def test_solve_linear_inconsistent():
    assert la.solve_linear(la.mat([[1, 1], [1, 1]]), la.vec([1, 2])) is None


@settings(max_examples=50, deadline=None)
@given(matrices(3, 4), matrices(3, 4))
def test_intersection_dimension_formula(u, v):
    u, v = la.mat(u), la.mat(v)
    if u.shape[1] != v.shape[1]:
        return
    inter, _ = la.intersect(u, v)
    total, _ = la.span_sum(u, v)
    assert inter.shape[0] == la.rank(u) + la.rank(v) - total.shape[0]
    bu, pu = la.row_basis(u)
    bv, pv = la.row_basis(v)
    for w in inter:
        assert la.in_span(bu, pu, w) and la.in_span(bv, pv, w)


@settings(max_examples=40, deadline=None)
@given(matrices(4, 4))
def test_inverse_when_square_and_full_rank(rows):
    m = la.mat(rows)
    if m.shape[0] != m.shape[1]:
        with pytest.raises(ValueError):
            la.inverse(m)
        return
    inv = la.inverse(m)
    if la.rank(m) < m.shape[0]:
        assert inv is None
    else:
        assert np.all(la.matmul(m, inv) == la.eye(m.shape[0]))


@given(st.fractions(max_denominator=50))
def test_format_parse_round_trip(q):
    assert la.parse_rat(la.format_rat(la.rat(q))) == la.rat(q)


def test_rat_rejects_floats():
    with pytest.raises(TypeError):
        la.rat(0.5)


def test_quotient_projection_kills_subspace():
    basis, piv = la.row_basis(la.mat([[1, 1, 0], [0, 0, 1]]))
    proj = la.quotient_projection(basis, piv, 3)
    assert la.is_zero(la.matmul(basis, proj))
    assert proj.shape == (3, 1)


def test_kron_and_block_diag_shapes():
    a, b = la.mat([[1, 2]]), la.mat([[0], [1]])
    assert la.kron(a, b).shape == (2, 2)
    assert la.block_diag(a, b).shape == (3, 3)
