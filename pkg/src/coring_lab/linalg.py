"""Dense linear algebra over a prime field F_p.

Matrices are numpy int64 arrays with entries reduced to ``0..p-1``.
Everything here is exact; float64 appears only as a carrier for BLAS
products whose integer results stay below 2**52.
"""

from __future__ import annotations

import numpy as np


def asmat(M, p: int) -> np.ndarray:
    return np.asarray(M, dtype=np.int64) % p


def inv_mod(x: int, p: int) -> int:
    return pow(int(x) % p, -1, p)


_EXACT = float(1 << 52)


def dot(A, B, p: int) -> np.ndarray:
    """``A @ B mod p``; routed through float64 BLAS whenever that is exact."""
    A = np.asarray(A)
    B = np.asarray(B)
    inner = A.shape[-1] if A.ndim else 1
    if (p - 1) ** 2 * max(inner, 1) < _EXACT:
        out = np.matmul(A.astype(np.float64), B.astype(np.float64))
        return np.rint(out).astype(np.int64) % p
    if (p - 1) ** 2 * max(inner, 1) < 1 << 63:
        return np.matmul(A.astype(np.int64) % p, B.astype(np.int64) % p) % p
    # python ints: slow but cannot overflow
    out = np.matmul(A.astype(object) % p, B.astype(object) % p) % p
    return out.astype(np.int64)


def matmul(*mats, p: int) -> np.ndarray:
    out = np.asarray(mats[0]) % p
    for M in mats[1:]:
        out = dot(out, M, p)
    return out


def rref(M, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``M`` over F_p.

    Returns ``(R, pivots)`` where ``R`` holds only the ``len(pivots)`` nonzero
    rows.  The result is unique for the row space, so two matrices span the
    same subspace iff their ``R`` agree.
    """
    R = asmat(M, p).copy()
    if R.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    m, n = R.shape
    if p == 2:
        return _rref_gf2(R.astype(np.uint8))
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.flatnonzero(R[row:, col])
        if nz.size == 0:
            continue
        piv = row + nz[0]
        if piv != row:
            R[[row, piv]] = R[[piv, row]]
        R[row] = (R[row] * inv_mod(R[row, col], p)) % p
        factors = R[:, col].copy()
        factors[row] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            R[hit] = (R[hit] - np.outer(factors[hit], R[row])) % p
        pivots.append(col)
        row += 1
    return R[:row], pivots


def _rref_gf2(R: np.ndarray) -> tuple[np.ndarray, list[int]]:
    m, n = R.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.flatnonzero(R[row:, col])
        if nz.size == 0:
            continue
        piv = row + nz[0]
        if piv != row:
            R[[row, piv]] = R[[piv, row]]
        hit = np.flatnonzero(R[:, col])
        hit = hit[hit != row]
        if hit.size:
            R[hit] ^= R[row]
        pivots.append(col)
        row += 1
    return R[:row].astype(np.int64), pivots


def rank(M, p: int) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(M, p)[1])


def row_basis(vectors, p: int, width: int | None = None) -> np.ndarray:
    """Canonical (reduced echelon) basis of the span of the given rows."""
    V = np.asarray(vectors, dtype=np.int64)
    if V.size == 0:
        return np.zeros((0, width if width is not None else V.shape[-1]), dtype=np.int64)
    return rref(V.reshape(-1, V.shape[-1]), p)[0]


def nullspace(M, p: int) -> np.ndarray:
    """Basis (as rows) of ``{x : M x = 0}``; canonical given ``M``'s row space."""
    M = asmat(M, p)
    n = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = rref(M, p)
    free = [c for c in range(n) if c not in set(pivots)]
    N = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        N[k, f] = 1
        for r, c in enumerate(pivots):
            N[k, c] = (-R[r, f]) % p
    return N


def solve(M, b, p: int) -> np.ndarray | None:
    """One solution of ``M x = b`` (free variables set to zero), or None."""
    M = asmat(M, p)
    b = asmat(b, p).reshape(-1, 1)
    n = M.shape[1]
    R, pivots = rref(np.hstack([M, b]), p)
    if pivots and pivots[-1] == n:
        return None
    x = np.zeros(n, dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = R[r, n]
    return x


def affine_solutions(M, b, p: int) -> tuple[np.ndarray, np.ndarray] | None:
    """``(x0, K)`` with solution set ``x0 + rowspan(K)``, or None if inconsistent."""
    x0 = solve(M, b, p)
    if x0 is None:
        return None
    return x0, nullspace(M, p)


def inverse(M, p: int) -> np.ndarray:
    M = asmat(M, p)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    R, pivots = rref(np.hstack([M, np.eye(n, dtype=np.int64)]), p)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise np.linalg.LinAlgError("matrix is singular mod %d" % p)
    return R[:n, n:]


def is_invertible(M, p: int) -> bool:
    M = np.asarray(M)
    return M.shape[0] == M.shape[1] and rank(M, p) == M.shape[0]


def in_span(basis: np.ndarray, v, p: int) -> bool:
    if basis.shape[0] == 0:
        return not np.any(asmat(v, p))
    return rank(np.vstack([basis, asmat(v, p).reshape(1, -1)]), p) == rank(basis, p)


def coefficient_grid(p: int, k: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Rows ``start..stop`` of the lexicographic list of all vectors in F_p^k."""
    total = p**k
    stop = total if stop is None else min(stop, total)
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, k), dtype=np.int64)
    for j in range(k):
        out[:, j] = (idx // p ** (k - 1 - j)) % p
    return out


def iter_affine(x0: np.ndarray, K: np.ndarray, p: int, chunk: int = 1 << 14):
    """Yield chunks (as 2-d arrays) of every point of ``x0 + rowspan(K)``.

    Points come out in lexicographic order of their coordinates in ``K``.
    """
    k = K.shape[0]
    total = p**k
    for start in range(0, total, chunk):
        coeffs = coefficient_grid(p, k, start, start + chunk)
        yield (x0[None, :] + coeffs @ K) % p


def kron(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    return np.kron(A, B) % p
