from fractions import Fraction

import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from fano_instanton.linalg import PRIME, SparseMatrix, cokernel_dim, left_kernel_dim, rank, solve

entries = st.integers(-4, 4)


@st.composite
def matrices(draw, max_dim=7):
    n = draw(st.integers(0, max_dim))
    m = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(entries, min_size=m, max_size=m), min_size=n, max_size=n))
    return rows, m


def _sparse(rows, ncols):
    if not rows:
        return SparseMatrix(0, ncols, [])
    return SparseMatrix.from_dense(rows)


@given(matrices())
def test_rank_matches_sympy(data):
    rows, ncols = data
    m = _sparse(rows, ncols)
    expected = sp.Matrix(rows).rank() if rows else 0
    assert rank(m) == expected
    assert left_kernel_dim(m) == len(rows) - expected
    assert cokernel_dim(m) == ncols - expected


@given(matrices())
def test_modular_rank_is_lower_bound(data):
    rows, ncols = data
    m = _sparse(rows, ncols)
    assert rank(m, PRIME) <= rank(m)


@given(matrices(), st.lists(entries, min_size=7, max_size=7))
def test_solve(data, x):
    rows, ncols = data
    if not rows:
        return
    m = _sparse(rows, ncols)
    x = x[:ncols]
    rhs = {i: sum(a * b for a, b in zip(r, x)) for i, r in enumerate(rows)}
    sol = solve(m, rhs)
    assert sol is not None
    for i, r in enumerate(rows):
        assert sum(Fraction(a) * sol.get(j, 0) for j, a in enumerate(r)) == rhs[i]


def test_solve_inconsistent():
    m = SparseMatrix.from_dense([[1, 1], [2, 2]])
    assert solve(m, {0: 1, 1: 3}) is None


@given(matrices(4), matrices(4))
def test_matmul(a, b):
    (ra, ca), (rb, cb) = a, b
    if not ra or len(rb) != ca:
        return
    prod = _sparse(ra, ca).matmul(_sparse(rb, cb)).to_dense()
    assert sp.Matrix(prod) == sp.Matrix(ra) * sp.Matrix(rb)


def test_vstack_and_shape():
    a = SparseMatrix.from_dense([[1, 0]])
    b = SparseMatrix.from_dense([[0, 1], [1, 1]])
    assert a.vstack(b).shape == (3, 2)
    assert rank(a.vstack(b)) == 2
