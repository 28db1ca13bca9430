"""Corings over a finite algebra A.

A coring is an A-bimodule C with a coassociative, counital comultiplication
``C -> C (x)_A C`` and counit ``C -> A``, both bimodule maps.  This module
finds the grouplike elements, their coinvariant subrings, the comodule hom
spaces between the induced comodules on A, the canonical maps and the group
of coring automorphisms.
"""

from __future__ import annotations

import itertools

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import linalg as la
from .algebra import (
    FiniteAlgebra,
    Subring,
    check_budget,
    key,
    subring_from_span,
    whole_ring,
)
from .errors import CounitFails, NotAGrouplike, NotBilinear, NotCoassociative, TooLarge
from .modules import (
    Bimodule,
    BimoduleMap,
    TensorModule,
    assoc_iso,
    bilinearity_defect,
    build_map,
    is_bijective,
    left_unitor,
    regular_bimodule,
    right_unitor,
    self_tensor,
    tensor_over,
)

#: Default ceiling on the number of candidate automorphisms visited.
AUT_BUDGET = 1 << 20


@dataclass(frozen=True, eq=False)
class Coring:
    carrier: Bimodule
    comul: BimoduleMap
    counit: BimoduleMap
    cc: TensorModule
    name: str = ""
    origin: object = None  # the data a constructed coring came from

    def __repr__(self):
        return f"Coring({self.name or 'dim ' + str(self.dim)} over {self.algebra!r})"

    @property
    def algebra(self) -> FiniteAlgebra:
        return self.carrier.algebra

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @property
    def cache(self) -> dict:
        c = self.__dict__.get("_cache")
        if c is None:
            c = {}
            object.__setattr__(self, "_cache", c)
        return c

    def square(self, g) -> np.ndarray:
        """``g (x)_A g`` in the coordinates of ``C (x)_A C``."""
        g = la.asmat(g, self.p)
        return la.dot(self.cc.project, np.kron(g, g), self.p)

    def is_grouplike(self, g) -> bool:
        g = la.asmat(g, self.p)
        return bool(
            np.array_equal(self.counit(g), self.algebra.unit)
            and np.array_equal(self.comul(g), self.square(g))
        )

    def conjugate(self, alpha, g) -> np.ndarray:
        """``alpha g alpha^-1``."""
        A = self.algebra
        return self.carrier.act(alpha, la.asmat(g, self.p), A.inverse(alpha))


@dataclass(frozen=True, order=True)
class Grouplike:
    coords: tuple[int, ...]
    coring: Coring = field(compare=False, repr=False)

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.coords, dtype=np.int64)

    def __str__(self):
        return ",".join(map(str, self.coords))


def as_grouplike(C: Coring, g) -> Grouplike:
    if isinstance(g, Grouplike):
        return g
    v = la.asmat(g, C.p)
    if not C.is_grouplike(v):
        raise NotAGrouplike(f"{key(v)} is not grouplike", witness=key(v))
    return Grouplike(key(v), C)


def _first_bad_column(X: np.ndarray, Y: np.ndarray):
    bad = np.flatnonzero(np.any(X != Y, axis=0))
    return int(bad[0]) if bad.size else None


def build_coring(carrier: Bimodule, comul, counit, name: str = "", origin=None) -> Coring:
    """Check the coring axioms exactly and return the coring.

    ``comul``/``counit`` are matrices (or BimoduleMaps) into ``C (x)_A C``
    and A.  Coassociativity is tested first, then the counit laws, then that
    both maps are bimodule maps.
    """
    A = carrier.algebra
    p = A.p
    CC = self_tensor(carrier)
    D = la.asmat(getattr(comul, "matrix", comul), p)
    E = la.asmat(getattr(counit, "matrix", counit), p)
    if D.shape != (CC.dim, carrier.dim):
        raise ValueError(f"comultiplication must be {(CC.dim, carrier.dim)}, got {D.shape}")
    if E.shape != (A.dim, carrier.dim):
        raise ValueError(f"counit must be {(A.dim, carrier.dim)}, got {E.shape}")
    Areg = regular_bimodule(A)
    I = np.eye(carrier.dim, dtype=np.int64)
    whole = whole_ring(A)

    T1 = tensor_over(CC.bimodule, whole, carrier)  # (C C) C
    T2 = tensor_over(carrier, whole, CC.bimodule)  # C (C C)
    lhs = la.matmul(T2.project, np.kron(I, D), CC.section, D, p=p)
    rhs = la.matmul(assoc_iso(T1, T2).matrix, T1.project, np.kron(D, I), CC.section, D, p=p)
    bad = _first_bad_column(lhs, rhs)
    if bad is not None:
        raise NotCoassociative(f"coassociativity fails on basis vector c{bad}", witness=bad)

    CA = tensor_over(carrier, whole, Areg)
    AC = tensor_over(Areg, whole, carrier)
    right = la.matmul(right_unitor(CA), CA.project, np.kron(I, E), CC.section, D, p=p)
    left = la.matmul(left_unitor(AC), AC.project, np.kron(E, I), CC.section, D, p=p)
    for side, X in (("right", right), ("left", left)):
        bad = _first_bad_column(X, I)
        if bad is not None:
            raise CounitFails(f"{side} counit law fails on basis vector c{bad}", witness=(side, bad))

    for what, tgt, F in (("comultiplication", CC.bimodule, D), ("counit", Areg, E)):
        bad = bilinearity_defect(carrier, tgt, F)
        if bad is not None:
            raise NotBilinear(f"{what} is not a bimodule map", witness=bad)
    return Coring(
        carrier, BimoduleMap(carrier, CC.bimodule, D), BimoduleMap(carrier, Areg, E), CC, name, origin
    )


def trivial_coring(A: FiniteAlgebra) -> Coring:
    """C = A with ``a -> a (x) 1`` and identity counit."""
    R = regular_bimodule(A)
    CC = self_tensor(R)
    D = np.array([la.dot(CC.project, np.kron(A.basis(i), A.unit), A.p) for i in range(A.dim)]).T
    return build_coring(R, D, np.eye(A.dim, dtype=np.int64), name=f"trivial {A.name}")


# ---------------------------------------------------------------- grouplikes


def _grouplike_filter(C: Coring, G: np.ndarray) -> np.ndarray:
    """Boolean mask of the rows of G (already counital) with ``D(g) = g (x) g``."""
    p = C.p
    n = C.dim
    lhs = la.dot(G, C.comul.matrix.T, p)
    outer = (G[:, :, None] * G[:, None, :]).reshape(len(G), n * n)
    rhs = la.dot(outer, C.cc.project.T, p)
    return np.all(lhs == rhs, axis=1)


def grouplikes(C: Coring, budget: int | None = None) -> list[Grouplike]:
    """All grouplikes, sorted by coordinates.

    Solves ``counit(g) = 1`` first (an affine space ``g0 + ker``) and only
    tests the quadratic condition on that space.
    """
    if "grouplikes" in C.cache:
        return C.cache["grouplikes"]
    p = C.p
    sol = la.affine_solutions(C.counit.matrix, C.algebra.unit, p)
    found: list[tuple[int, ...]] = []
    if sol is not None:
        x0, K = sol
        check_budget(p ** K.shape[0], budget, "grouplike search")
        for G in la.iter_affine(x0, K, p):
            found.extend(key(g) for g in G[_grouplike_filter(C, G)])
    out = [Grouplike(g, C) for g in sorted(found)]
    C.cache["grouplikes"] = out
    return out


def grouplikes_brute_force(C: Coring, budget: int | None = None) -> list[Grouplike]:
    """Reference search over every vector of C."""
    p, n = C.p, C.dim
    check_budget(p**n, budget, "brute-force grouplike search")
    found = []
    for G in la.iter_affine(np.zeros(n, dtype=np.int64), np.eye(n, dtype=np.int64), p):
        counital = np.all(la.dot(G, C.counit.matrix.T, p) == C.algebra.unit, axis=1)
        G = G[counital]
        found.extend(key(g) for g in G[_grouplike_filter(C, G)])
    return [Grouplike(g, C) for g in sorted(found)]


def coinvariants(C: Coring, g) -> Subring:
    """``A^g = {a : a g = g a}``."""
    g = as_grouplike(C, g)
    cache = C.cache.setdefault("coinvariants", {})
    if g.coords not in cache:
        M = C.carrier
        cols = la.dot(M.lact - M.ract, g.vector, C.p).T  # column i: (e_i g - g e_i)
        cache[g.coords] = subring_from_span(C.algebra, la.nullspace(cols, C.p))
    return cache[g.coords]


def comodule_homs(C: Coring, g, h, elements: bool = False, budget: int | None = None):
    """Basis of ``{a : a g = h a}``; with ``elements=True`` also every element."""
    g, h = as_grouplike(C, g), as_grouplike(C, h)
    M = C.carrier
    cols = (la.dot(M.lact, g.vector, C.p) - la.dot(M.ract, h.vector, C.p)).T % C.p
    basis = la.row_basis(la.nullspace(cols, C.p), C.p, C.algebra.dim)
    if not elements:
        return basis
    check_budget(C.p ** basis.shape[0], budget, "comodule hom enumeration")
    return basis, la.dot(la.coefficient_grid(C.p, basis.shape[0]), basis, C.p)


def conjugate_grouplike(C: Coring, alpha, g) -> Grouplike:
    """``alpha g alpha^-1``, re-validated as a grouplike."""
    g = as_grouplike(C, g)
    return as_grouplike(C, C.conjugate(C.algebra.elem(alpha), g.vector))


def sweedler_tensor(A: FiniteAlgebra, B: Subring) -> TensorModule:
    """``A (x)_B A``, cached per subring on the algebra."""
    cache = A.__dict__.get("_sweedler_tensors")
    if cache is None:
        cache = {}
        object.__setattr__(A, "_sweedler_tensors", cache)
    k = B.basis.tobytes()
    if k not in cache:
        R = regular_bimodule(A)
        cache[k] = tensor_over(R, B, R)
    return cache[k]


def canonical_map(C: Coring, g) -> BimoduleMap:
    """``A (x)_{A^g} A -> C``, ``a (x) a' -> a g a'``."""
    g = as_grouplike(C, g)
    cache = C.cache.setdefault("can", {})
    if g.coords not in cache:
        A, p = C.algebra, C.p
        T = sweedler_tensor(A, coinvariants(C, g))
        M = C.carrier
        # raw column (i, j) is e_i g e_j
        right = la.dot(M.ract, g.vector, p)  # (dA, n): g e_j
        raw = np.einsum("iab,jb->aij", M.lact, right).reshape(C.dim, A.dim * A.dim) % p
        if T.relations.size and np.any(la.dot(raw, T.relations.T, p)):
            raise NotBilinear("canonical map is not balanced over the coinvariants")
        cache[g.coords] = build_map(T.bimodule, M, la.dot(raw, T.section, p))
    return cache[g.coords]


def is_galois(C: Coring, g) -> bool:
    return is_bijective(canonical_map(C, g))


def galois_grouplikes(C: Coring, budget: int | None = None) -> list[Grouplike]:
    return [g for g in grouplikes(C, budget) if is_galois(C, g)]


def generates_as_bimodule(C: Coring, g) -> bool:
    """Whether the span of all ``a g b`` is C."""
    return la.rank(canonical_map(C, g).matrix, C.p) == C.dim


# ---------------------------------------------------------------- automorphisms


@dataclass(frozen=True, eq=False)
class CoringAut:
    coring: Coring
    matrix: np.ndarray

    def __call__(self, v) -> np.ndarray:
        return la.dot(self.matrix, np.asarray(v, dtype=np.int64), self.coring.p)

    @property
    def key(self) -> tuple[int, ...]:
        return key(self.matrix)


@dataclass(frozen=True, eq=False)
class AutGroup:
    """Aut(C) with its multiplication table (``table[i, j]`` is ``auts[i] o auts[j]``)."""

    coring: Coring
    auts: tuple[CoringAut, ...]
    table: np.ndarray
    inv: tuple[int, ...]
    identity: int
    index: dict = field(repr=False)

    def __len__(self):
        return len(self.auts)

    def __iter__(self):
        return iter(self.auts)

    def find(self, matrix) -> int:
        return self.index[key(la.asmat(matrix, self.coring.p))]

    def generators(self) -> list[int]:
        gens: list[int] = []
        span = {self.identity}
        for i in range(len(self)):
            if i not in span:
                gens.append(i)
                span = self._closure(gens)
        return gens

    def _closure(self, gens: Sequence[int]) -> set[int]:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            frontier = [int(self.table[u, g]) for u in frontier for g in gens if int(self.table[u, g]) not in seen]
            seen.update(frontier)
        return seen


def _aut_linear_system(C: Coring):
    """Bimodule-endomorphism and counit constraints on vec(Phi) (row-major)."""
    n, p = C.dim, C.p
    I = np.eye(n, dtype=np.int64)
    rows = []
    for X in (*C.carrier.lact, *C.carrier.ract):
        rows.append((np.kron(I, X.T) - np.kron(X, I)) % p)  # Phi X - X Phi
    E = C.counit.matrix
    rows.append(np.kron(E, I))
    rhs = np.concatenate([np.zeros(2 * C.algebra.dim * n * n, dtype=np.int64), E.reshape(-1)])
    return np.vstack(rows), rhs


def _comul_compatible(C: Coring, Phis: np.ndarray) -> np.ndarray:
    """Mask of ``Phi`` in the batch with ``D Phi = (Phi (x) Phi) D``."""
    p, n = C.p, C.dim
    D = C.comul.matrix
    lhs = la.dot(D[None], Phis, p)  # (N, q, n)
    Y = la.dot(C.cc.section, D, p).reshape(n, n, n)  # [i, j, c]
    W = la.dot(Phis, Y.reshape(n, n * n), p).reshape(-1, n, n, n)  # [N, a, j, c]
    Z = la.dot(Phis[:, None], W, p)  # [N, a, b, c] = sum_j Phi[b, j] W[a, j, c]
    rhs = la.dot(C.cc.project[None], Z.reshape(-1, n * n, n), p)
    return np.all(lhs == rhs, axis=(1, 2))


def _raw_generation_matrix(C: Coring, g) -> np.ndarray:
    """Columns ``e_i g e_j`` (column ``i * dim A + j``)."""
    M = C.carrier
    right = la.dot(M.ract, g, C.p)
    return np.einsum("iab,jb->aij", M.lact, right).reshape(C.dim, -1) % C.p


def _auts_by_enumeration(C: Coring, budget) -> list[np.ndarray]:
    n, p = C.dim, C.p
    M, rhs = _aut_linear_system(C)
    x0, K = la.affine_solutions(M, rhs, p)  # the identity is always a solution
    check_budget(p ** K.shape[0], AUT_BUDGET if budget is None else budget, "automorphism search")
    found = []
    for chunk in la.iter_affine(x0, K, p, chunk=1 << 12):
        Phis = chunk.reshape(-1, n, n)
        for Phi in Phis[_comul_compatible(C, Phis)]:
            if la.is_invertible(Phi, p):
                found.append(Phi)
    return found


def _generating_grouplikes(C: Coring, budget) -> list[Grouplike] | None:
    """A short list of grouplikes generating C as a bimodule, or None."""
    gl = grouplikes(C, budget)
    chosen, raw, rank = [], np.zeros((C.dim, 0), dtype=np.int64), 0
    for g in sorted(gl, key=lambda g: -la.rank(canonical_map(C, g).matrix, C.p)):
        R = np.hstack([raw, _raw_generation_matrix(C, g.vector)])
        r = la.rank(R, C.p)
        if r > rank:
            chosen.append(g)
            raw, rank = R, r
        if rank == C.dim:
            return chosen
    return None


def _auts_from_generators(C: Coring, gens: list[Grouplike], budget) -> list[np.ndarray]:
    """Automorphisms when gens generate C: each is fixed by the grouplikes it sends gens to."""
    p = C.p
    gl = grouplikes(C)
    k = len(gens)
    check_budget(len(gl) ** k, AUT_BUDGET if budget is None else budget, "automorphism search")
    raws = {h.coords: _raw_generation_matrix(C, h.vector) for h in gl}
    Rg = np.hstack([raws[g.coords] for g in gens])
    cols = la.rref(Rg, p)[1]  # pivot columns span the column space
    Binv = la.inverse(Rg[:, cols], p)
    M, rhs = _aut_linear_system(C)
    found = []
    for images in itertools.permutations(gl, k):
        Rh = np.hstack([raws[h.coords] for h in images])
        Phi = la.dot(Rh[:, cols], Binv, p)
        if not np.array_equal(la.dot(Phi, Rg, p), Rh):
            continue  # a g b -> a h b is not well defined
        if not np.array_equal(la.dot(M, Phi.reshape(-1), p), rhs % p):
            continue
        if _comul_compatible(C, Phi[None])[0] and la.is_invertible(Phi, p):
            found.append(Phi)
    return found


def coring_automorphisms(C: Coring, budget: int | None = None, method: str = "auto") -> AutGroup:
    """Aut(C) as an explicit group.

    Automorphisms permute grouplikes, so when grouplikes ``g_1..g_k`` generate
    C as a bimodule each automorphism is fixed by the images of the ``g_i`` and
    at most ``|Gl(C)|^k`` candidates are tried.  Otherwise (or with ``method="enumerate"``) the linear constraints
    are solved and the quadratic one is filtered over the solution space.
    """
    cache_key = "aut" if method == "auto" else f"aut-{method}"
    if cache_key in C.cache:
        return C.cache[cache_key]
    n, p = C.dim, C.p
    gens = None
    if method == "auto":
        try:
            gens = _generating_grouplikes(C, budget)
        except TooLarge:
            gens = None
    found = _auts_from_generators(C, gens, budget) if gens else _auts_by_enumeration(C, budget)
    found.sort(key=key)
    auts = tuple(CoringAut(C, F) for F in found)
    index = {a.key: i for i, a in enumerate(auts)}
    m = len(auts)
    table = np.empty((m, m), dtype=np.int64)
    for i, a in enumerate(auts):
        prods = la.dot(a.matrix[None], np.array(found), p)
        table[i] = [index[key(X)] for X in prods]
    ident = index[key(np.eye(n, dtype=np.int64))]
    inv = tuple(int(np.flatnonzero(table[i] == ident)[0]) for i in range(m))
    group = AutGroup(C, auts, table, inv, ident, index)
    C.cache[cache_key] = group
    return group
