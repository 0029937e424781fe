from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hpairs.linalg import Subspace, complement_basis, nullspace, rank, rref, solve, span_contains, unit_vector

F = Fraction

matrices = st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=5))


def mat_vec(M, v):
    return tuple(sum(F(a) * b for a, b in zip(row, v)) for row in M)


def test_rank_examples():
    assert rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[1, 2], [2, 4]]) == 1


def test_nullspace_examples():
    assert nullspace([[1, 0], [0, 1]]).dim == 0
    assert nullspace([[1, 1]]).basis == ((F(-1), F(1)),)
    assert nullspace([], 3).dim == 3


def test_nullspace_example_53_system():
    # columns z_(3,0), z_(2,1), z_(0,2)
    M = [[0, 1, 1], [1, 0, 0]]
    K = nullspace(M)
    assert K.dim == 1
    assert K.same_span(Subspace.span([(0, 1, -1)], 3))


def test_nullspace_sparse_rows():
    K = nullspace([{0: F(1), 2: F(-1)}], 3)
    assert K.dim == 2 and all(v[0] == v[2] for v in K.basis)


def test_span_contains_examples():
    S = Subspace.span([(1, 0)], 2)
    assert span_contains(S, (0, 0))
    assert not span_contains(S, (0, 1))
    T = Subspace.span([(1, 1), (1, -1)], 2)
    assert span_contains(T, (3, 5))
    # 3,5 = 4*(1,1) - 1*(1,-1)
    assert solve([[1, 1], [1, -1]], [3, 5]) == (F(4), F(-1))
    with pytest.raises(ValueError):
        span_contains(S, (1, 0, 0))


def test_complement_examples():
    W = Subspace.full(2)
    assert complement_basis(Subspace.zero(2), W).same_span(W)
    assert complement_basis(W, W).dim == 0
    C = complement_basis(Subspace.span([(1, 1)], 2), W)
    assert C.basis == (unit_vector(2, 0),)
    assert rank([(1, 1), C.basis[0]]) == 2


def test_complement_requires_containment():
    with pytest.raises(ValueError):
        complement_basis(Subspace.span([(1, 0, 0)], 3), Subspace.span([(0, 1, 0)], 3))


def test_complement_inside_proper_subspace():
    W = Subspace.span([(1, 1, 0), (0, 0, 1)], 3)
    S = Subspace.span([(0, 0, 1)], 3)
    C = complement_basis(S, W)
    assert C.dim == 1 and W.contains_subspace(C)
    assert S.sum(C).same_span(W)


@given(matrices)
def test_rank_nullity(M):
    cols = len(M[0])
    K = nullspace(M)
    assert rank(M) + K.dim == cols
    for v in K.basis:
        assert not any(mat_vec(M, v))


@given(matrices)
def test_rref_is_idempotent_and_deterministic(M):
    R, piv = rref(M)
    assert rref(R, len(M[0])) == (R, piv)
    assert rref(M) == (R, piv)


@given(matrices, st.integers(1, 5))
def test_complement_direct_sum(M, extra):
    n = len(M[0])
    S = Subspace.span(M, n)
    C = complement_basis(S, Subspace.full(n))
    assert S.dim + C.dim == n
    assert rank(list(S.basis) + list(C.basis)) == n
    assert all(sum(1 for x in v if x) == 1 for v in C.basis)


@given(matrices)
def test_span_membership_of_combinations(M):
    n = len(M[0])
    S = Subspace.span(M, n)
    v = tuple(sum(F(i + 1) * F(row[j]) for i, row in enumerate(M)) for j in range(n))
    assert S.contains(v)
    assert S.canonical_basis() == Subspace.span(list(reversed(M)), n).canonical_basis()
