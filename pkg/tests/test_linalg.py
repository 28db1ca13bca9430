from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from coring_lab import linalg as la

PRIMES = st.sampled_from([2, 3, 5])


@st.composite
def small_matrix(draw, max_rows=3, max_cols=4):
    p = draw(PRIMES)
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n), min_size=m, max_size=m))
    return p, rows


@given(small_matrix())
@settings(max_examples=60, deadline=None)
def test_rank_matches_span_size(data):
    p, M = data
    assert la.rank(M, p) == oracles.rank_by_span(M, p, len(M[0]))


@given(small_matrix())
@settings(max_examples=60, deadline=None)
def test_rref_spans_same_space(data):
    p, M = data
    R, pivots = la.rref(M, p)
    n = len(M[0])
    assert oracles.span(R.tolist(), p, n) == oracles.span(M, p, n)
    for r, c in enumerate(pivots):
        assert R[r, c] == 1 and np.count_nonzero(R[:, c]) == 1


@given(small_matrix())
@settings(max_examples=60, deadline=None)
def test_nullspace_is_the_kernel(data):
    p, M = data
    n = len(M[0])
    N = la.nullspace(M, p)
    assert oracles.span(N.tolist(), p, n) == oracles.kernel_set(M, p, n)


@given(small_matrix(), st.data())
@settings(max_examples=60, deadline=None)
def test_solve_agrees_with_enumeration(data, draw):
    p, M = data
    b = draw.draw(st.lists(st.integers(0, p - 1), min_size=len(M), max_size=len(M)))
    x = la.solve(M, b, p)
    n = len(M[0])
    exists = any(
        all(sum(r[j] * v[j] for j in range(n)) % p == bi for r, bi in zip(M, b))
        for v in itertools.product(range(p), repeat=n)
    )
    if x is None:
        assert not exists
    else:
        assert not np.any((np.asarray(M) @ x - np.asarray(b)) % p)


@given(small_matrix(max_rows=4, max_cols=4), st.data())
@settings(max_examples=60, deadline=None)
def test_dot_matches_schoolbook(data, draw):
    p, A = data
    k = len(A[0])
    B = draw.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=2, max_size=2), min_size=k, max_size=k))
    assert la.dot(A, B, p).tolist() == oracles.matmul_mod(A, B, p)


@pytest.mark.parametrize("p", [100000007, 2147483647])
def test_dot_large_prime_is_exact(p):
    rng = np.random.default_rng(1)
    A = rng.integers(0, p, (5, 7))
    B = rng.integers(0, p, (7, 3))
    assert la.dot(A, B, p).tolist() == oracles.matmul_mod(A.tolist(), B.tolist(), p)


@given(PRIMES, st.integers(1, 4), st.data())
@settings(max_examples=40, deadline=None)
def test_inverse_round_trip(p, n, draw):
    M = np.array(draw.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n), min_size=n, max_size=n)))
    if la.is_invertible(M, p):
        assert np.array_equal(la.dot(M, la.inverse(M, p), p), np.eye(n, dtype=np.int64))
    else:
        with pytest.raises(np.linalg.LinAlgError):
            la.inverse(M, p)


def test_iter_affine_enumerates_coset():
    K = np.array([[1, 0, 1]])
    x0 = np.array([0, 1, 0])
    pts = np.vstack(list(la.iter_affine(x0, K, 3)))
    assert sorted(map(tuple, pts.tolist())) == [(0, 1, 0), (1, 1, 1), (2, 1, 2)]
