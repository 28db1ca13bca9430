"""Bimodules over a finite algebra, balanced tensor products and bimodule maps.

A bimodule is an F_p-space with one matrix per algebra basis element for each
side.  ``M (x)_B N`` is materialised as an explicit quotient of the raw space
``M (x)_{F_p} N`` (raw index ``i * N.dim + j`` for ``m_i (x) n_j``): the
quotient basis is the set of non-pivot raw coordinates of the reduced
balancing subspace, so coordinates are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .algebra import FiniteAlgebra, Subring, whole_ring
from .errors import ActionsDoNotCommute, NotARepresentation, NotBilinear, NoUnit


@dataclass(frozen=True, eq=False)
class Bimodule:
    algebra: FiniteAlgebra
    dim: int
    lact: np.ndarray
    ract: np.ndarray
    origin: TensorModule | None = None

    def __repr__(self):
        return f"Bimodule(dim {self.dim} over {self.algebra!r})"

    @property
    def p(self) -> int:
        return self.algebra.p

    def left(self, a) -> np.ndarray:
        """Matrix of ``m -> a m``."""
        return np.tensordot(np.asarray(a, dtype=np.int64), self.lact, axes=1) % self.p

    def right(self, a) -> np.ndarray:
        """Matrix of ``m -> m a``."""
        return np.tensordot(np.asarray(a, dtype=np.int64), self.ract, axes=1) % self.p

    def act(self, a, m, b) -> np.ndarray:
        """``a m b``."""
        return (self.left(a) @ ((self.right(b) @ m) % self.p)) % self.p

    def basis(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v


def _check_bimodule(M: Bimodule) -> None:
    A, p = M.algebra, M.p
    eye = np.eye(M.dim, dtype=np.int64)
    if not np.array_equal(M.left(A.unit), eye):
        raise NoUnit("1 does not act as the identity on the left")
    if not np.array_equal(M.right(A.unit), eye):
        raise NoUnit("1 does not act as the identity on the right")
    L, R = M.lact, M.ract
    d, n = A.dim, M.dim
    # products of basis actions against actions of basis products
    LL = la.dot(L[:, None], L[None, :], p)
    Lprod = la.dot(A.sc.reshape(d * d, d), L.reshape(d, n * n), p).reshape(d, d, n, n)
    bad = np.argwhere(np.any(LL != Lprod, axis=(2, 3)))
    if bad.size:
        raise NotARepresentation("left action is not multiplicative", witness=("left", *map(int, bad[0])))
    RR = la.dot(R[None, :], R[:, None], p)  # m(e_i e_j) = (m e_i) e_j
    Rprod = la.dot(A.sc.reshape(d * d, d), R.reshape(d, n * n), p).reshape(d, d, n, n)
    bad = np.argwhere(np.any(RR != Rprod, axis=(2, 3)))
    if bad.size:
        raise NotARepresentation("right action is not multiplicative", witness=("right", *map(int, bad[0])))
    LR = la.dot(L[:, None], R[None, :], p)
    RL = la.dot(R[None, :], L[:, None], p)
    bad = np.argwhere(np.any(LR != RL, axis=(2, 3)))
    if bad.size:
        i, j = map(int, bad[0])
        raise ActionsDoNotCommute(f"(e{i} m) e{j} != e{i} (m e{j})", witness=(i, j))


def build_bimodule(A: FiniteAlgebra, dim: int, lact, ract) -> Bimodule:
    lact = la.asmat(lact, A.p).reshape(A.dim, dim, dim)
    ract = la.asmat(ract, A.p).reshape(A.dim, dim, dim)
    M = Bimodule(A, dim, lact, ract)
    _check_bimodule(M)
    return M


def regular_bimodule(A: FiniteAlgebra) -> Bimodule:
    cached = A.__dict__.get("_regular")
    if cached is None:
        cached = Bimodule(A, A.dim, A.left_basis_matrices, A.right_basis_matrices)
        object.__setattr__(A, "_regular", cached)
    return cached


# ---------------------------------------------------------------- tensors


@dataclass(frozen=True, eq=False)
class TensorModule:
    left: Bimodule
    right: Bimodule
    middle: Subring
    dim: int
    project: np.ndarray
    section: np.ndarray
    relations: np.ndarray
    bimodule: Bimodule | None = None

    def __repr__(self):
        return f"TensorModule({self.left.dim} (x)_{self.middle.dim} {self.right.dim} -> dim {self.dim})"

    @property
    def raw_dim(self) -> int:
        return self.left.dim * self.right.dim

    @property
    def p(self) -> int:
        return self.left.p


def tensor_over(M: Bimodule, B: Subring, N: Bimodule) -> TensorModule:
    """``M (x)_B N`` with its induced bimodule structure."""
    A = M.algebra
    if N.algebra is not A or B.algebra is not A:
        raise ValueError("modules and subring must live over the same algebra")
    p = A.p
    raw = M.dim * N.dim
    IM = np.eye(M.dim, dtype=np.int64)
    IN = np.eye(N.dim, dtype=np.int64)
    rel = np.zeros((0, raw), dtype=np.int64)
    for b in B.basis:
        # columns: m_i b (x) n_j - m_i (x) b n_j
        X = (np.kron(M.right(b), IN) - np.kron(IM, N.left(b))) % p
        rel = la.row_basis(np.vstack([rel, X.T]), p, raw)
    lead = [int(np.flatnonzero(r)[0]) for r in rel]
    free = sorted(set(range(raw)) - set(lead))
    project = np.zeros((len(free), raw), dtype=np.int64)
    for k, f in enumerate(free):
        project[k, f] = 1
        for r, c in enumerate(lead):
            project[k, c] = (-rel[r, f]) % p
    section = np.zeros((raw, len(free)), dtype=np.int64)
    section[free, range(len(free))] = 1
    T = TensorModule(M, N, B, len(free), project, section, rel)
    P3 = project.reshape(len(free), M.dim, N.dim)
    fi, fj = np.divmod(np.array(free, dtype=np.int64), N.dim)
    # (L (x) 1) and (1 (x) R) evaluated only on the quotient basis columns
    lact = np.array([np.einsum("qaj,ai->qij", P3, L)[:, fi, fj] for L in M.lact]) % p
    ract = np.array([np.einsum("qib,bj->qij", P3, R)[:, fi, fj] for R in N.ract]) % p
    induced = Bimodule(A, T.dim, lact, ract, origin=T)
    _check_bimodule(induced)
    object.__setattr__(T, "bimodule", induced)
    return T


def pure_tensor(T: TensorModule, m, n) -> np.ndarray:
    return (T.project @ np.kron(la.asmat(m, T.p), la.asmat(n, T.p))) % T.p


# ---------------------------------------------------------------- maps


@dataclass(frozen=True, eq=False)
class BimoduleMap:
    source: Bimodule
    target: Bimodule
    matrix: np.ndarray

    def __call__(self, v) -> np.ndarray:
        return (self.matrix @ np.asarray(v, dtype=np.int64)) % self.source.p

    def __repr__(self):
        return f"BimoduleMap({self.source.dim} -> {self.target.dim})"


def bilinearity_defect(M: Bimodule, N: Bimodule, F: np.ndarray):
    """First ``(side, algebra basis index, module basis index)`` where F fails, or None."""
    p = M.p
    for side, SA, TA in (("left", M.lact, N.lact), ("right", M.ract, N.ract)):
        diff = (np.einsum("ab,ibc->iac", F, SA) - np.einsum("iab,bc->iac", TA, F)) % p
        bad = np.argwhere(np.any(diff != 0, axis=1))
        if bad.size:
            return (side, int(bad[0][0]), int(bad[0][1]))
    return None


def build_map(M: Bimodule, N: Bimodule, matrix) -> BimoduleMap:
    F = la.asmat(matrix, M.p)
    if F.shape != (N.dim, M.dim):
        raise ValueError(f"map matrix must be {(N.dim, M.dim)}, got {F.shape}")
    bad = bilinearity_defect(M, N, F)
    if bad is not None:
        side, i, j = bad
        raise NotBilinear(f"not {side}-linear: algebra basis e{i} on module basis m{j}", witness=bad)
    return BimoduleMap(M, N, F)


def identity_map(M: Bimodule) -> BimoduleMap:
    return BimoduleMap(M, M, np.eye(M.dim, dtype=np.int64))


def kernel(f: BimoduleMap) -> np.ndarray:
    return la.nullspace(f.matrix, f.source.p)


def rank(f: BimoduleMap) -> int:
    return la.rank(f.matrix, f.source.p)


def is_bijective(f: BimoduleMap) -> bool:
    return f.source.dim == f.target.dim and rank(f) == f.source.dim


def compose(f: BimoduleMap, g: BimoduleMap) -> BimoduleMap:
    """``f o g`` (g applied first)."""
    if g.target.dim != f.source.dim:
        raise ValueError("maps do not compose")
    return BimoduleMap(g.source, f.target, (f.matrix @ g.matrix) % f.source.p)


def inverse_map(f: BimoduleMap) -> BimoduleMap:
    return BimoduleMap(f.target, f.source, la.inverse(f.matrix, f.source.p))


def tensor_matrix(F: np.ndarray, G: np.ndarray, src: TensorModule, tgt: TensorModule) -> np.ndarray:
    """Matrix of ``F (x) G : src -> tgt``; checks it respects the balancing."""
    p = src.p
    K = la.dot(tgt.project, np.kron(F, G) % p, p)
    if src.relations.size and np.any(la.dot(K, src.relations.T, p)):
        raise NotBilinear("F (x) G does not respect the balancing relations")
    return la.dot(K, src.section, p)


def assoc_iso(T1: TensorModule, T2: TensorModule) -> BimoduleMap:
    """Canonical ``(M (x) N) (x) P -> M (x) (N (x) P)`` in quotient coordinates."""
    MN, NP = T1.left.origin, T2.right.origin
    if MN is None or NP is None:
        raise ValueError("assoc_iso needs T1 = (M (x) N) (x) P and T2 = M (x) (N (x) P)")
    if MN.left is not T2.left or NP.right is not T1.right or MN.right is not NP.left:
        raise ValueError("tensor factors do not match")
    p = T1.p
    m, n, P = MN.left.dim, MN.right.dim, NP.right.dim
    S = MN.section.reshape(m, n, MN.dim)
    Q = NP.project.reshape(NP.dim, n, P)
    X = np.einsum("ijk,qjl->iqkl", S, Q, optimize=True).reshape(m * NP.dim, MN.dim * P) % p
    mat = la.matmul(T2.project, X, T1.section, p=p)
    return build_map(T1.bimodule, T2.bimodule, mat)


def right_unitor(T: TensorModule) -> np.ndarray:
    """``M (x) A -> M``, ``m (x) a -> m a``."""
    M = T.left
    U = M.ract.transpose(1, 2, 0).reshape(M.dim, -1)
    return la.dot(U, T.section, T.p)


def left_unitor(T: TensorModule) -> np.ndarray:
    """``A (x) M -> M``, ``a (x) m -> a m``."""
    M = T.right
    U = M.lact.transpose(1, 0, 2).reshape(M.dim, -1)
    return la.dot(U, T.section, T.p)


def self_tensor(M: Bimodule) -> TensorModule:
    """``M (x)_A M``, cached on the bimodule."""
    cached = M.__dict__.get("_self_tensor")
    if cached is None:
        cached = tensor_over(M, whole_ring(M.algebra), M)
        object.__setattr__(M, "_self_tensor", cached)
    return cached
