"""Concrete corings: Sweedler corings of ring extensions, duals of crossed
products (with the bijection between their grouplikes and nonabelian
1-cocycles), and corings ``A (x) H`` built from comodule algebras over a
finite Hopf algebra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .algebra import (
    FiniteAlgebra,
    FiniteGroup,
    GroupAction,
    Subring,
    build_algebra,
    check_budget,
    conjugate_subring,
    cyclic_group,
    group_algebra as group_algebra_ring,
    key,
    prime_field,
    subring_from_span,
)
from .coring import (
    Coring,
    Grouplike,
    as_grouplike,
    build_coring,
    coinvariants,
    grouplikes,
    sweedler_tensor,
)
from .errors import (
    CoringLabError,
    NotACocycle,
    NotAComoduleAlgebra,
    NotAGrouplike,
    NotAHopfAlgebra,
    NotBilinear,
)
from .modules import BimoduleMap, build_bimodule, build_map, is_bijective, pure_tensor, self_tensor, tensor_matrix
from .orbits import PointedOrbitSet, UnitSubgroup, orbits_bfs, unit_subgroup
from .reports import Report

# ---------------------------------------------------------------- Sweedler


def sweedler(A: FiniteAlgebra, B: Subring) -> tuple[Coring, Grouplike]:
    """``A (x)_B A`` with ``a (x) a' -> (a (x) 1) (x)_A (1 (x) a')`` and counit the product."""
    cache = A.__dict__.get("_sweedler")
    if cache is None:
        cache = {}
        object.__setattr__(A, "_sweedler", cache)
    k = B.basis.tobytes()
    if k not in cache:
        p, d = A.p, A.dim
        T = sweedler_tensor(A, B)
        C = T.bimodule
        CC = self_tensor(C)
        left = [pure_tensor(T, A.basis(i), A.unit) for i in range(d)]
        right = [pure_tensor(T, A.unit, A.basis(j)) for j in range(d)]
        raw = np.array([np.kron(left[i], right[j]) for i in range(d) for j in range(d)]).T
        D = la.matmul(CC.project, raw, T.section, p=p)
        E = la.dot(A.sc.reshape(d * d, d).T, T.section, p)
        coring = build_coring(C, D, E, name=f"{A.name}/{B.dim}-dim subring", origin=(A, B))
        cache[k] = (coring, as_grouplike(coring, pure_tensor(T, A.unit, A.unit)))
    return cache[k]


def psi_matrix(A: FiniteAlgebra, B: Subring, alpha) -> BimoduleMap:
    """``a (x)_B a' -> a alpha (x) alpha^-1 a'`` into ``A (x)_{alpha^-1 B alpha} A``."""
    alpha = A.elem(alpha)
    src = sweedler_tensor(A, B)
    tgt = sweedler_tensor(A, conjugate_subring(A, alpha, B))
    M = tensor_matrix(A.right_matrix(alpha), A.left_matrix(A.inverse(alpha)), src, tgt)
    return build_map(src.bimodule, tgt.bimodule, M)


def psi_iso(A: FiniteAlgebra, B: Subring, alpha) -> BimoduleMap:
    """:func:`psi_matrix`, checked to be a bijective coring morphism."""
    f = psi_matrix(A, B, alpha)
    C1, _ = sweedler(A, B)
    C2, _ = sweedler(A, conjugate_subring(A, A.elem(alpha), B))
    if not is_bijective(f):
        raise CoringLabError("psi is not bijective")
    p = A.p
    ff = tensor_matrix(f.matrix, f.matrix, C1.cc, C2.cc)
    if not np.array_equal(la.dot(C2.comul.matrix, f.matrix, p), la.dot(ff, C1.comul.matrix, p)):
        raise CoringLabError("psi does not commute with the comultiplications")
    if not np.array_equal(la.dot(C2.counit.matrix, f.matrix, p), C1.counit.matrix):
        raise CoringLabError("psi does not commute with the counits")
    return f


# ---------------------------------------------------------------- crossed products


def crossed_product(action: GroupAction) -> FiniteAlgebra:
    """``G * A``: basis ``x e_i`` (index ``x * dim A + i``), ``(x a)(y b) = xy (a^y b)``."""
    G, A = action.group, action.algebra
    n, d = G.order, A.dim
    sc = np.zeros((n * d, n * d, n * d), dtype=np.int64)
    for y in range(n):
        # twisted[i, j] = e_i^y e_j
        twisted = np.einsum("mi,mjk->ijk", action.maps[y], A.sc) % A.p
        for x in range(n):
            xy = int(G.mul[x, y])
            sc[x * d : (x + 1) * d, y * d : (y + 1) * d, xy * d : (xy + 1) * d] = twisted
    unit = np.zeros(n * d, dtype=np.int64)
    unit[G.identity * d : (G.identity + 1) * d] = A.unit
    return build_algebra(A.p, n * d, sc, unit, name=f"{G.name or 'G'}*{A.name}")


def crossed_embeddings(action: GroupAction):
    """Coordinates of ``x 1`` for each x and the matrix of ``a -> e a``."""
    G, A = action.group, action.algebra
    n, d = G.order, A.dim
    xs = np.zeros((n, n * d), dtype=np.int64)
    for x in range(n):
        xs[x, x * d : (x + 1) * d] = A.unit
    emb = np.zeros((n * d, d), dtype=np.int64)
    emb[G.identity * d : (G.identity + 1) * d] = np.eye(d, dtype=np.int64)
    return xs, emb


def dual_coring(action: GroupAction) -> tuple[Coring, Grouplike]:
    """The right dual ``R* = Hom_A(R, A)`` of ``R = G * A`` and its trace grouplike.

    A map is stored as its values ``(phi(x))_x`` (index ``x * dim A + i``).
    ``(a phi)(r) = a phi(r)`` and ``(phi a)(r) = phi(a r)``, so on values
    ``(phi a)(x) = phi(x) a^x``.  The comultiplication is
    ``phi -> sum_x phi x (x)_A x*`` and the counit evaluates at ``1``.
    """
    cached = action.__dict__.get("_dual")
    if cached is not None:
        return cached
    G, A = action.group, action.algebra
    p, n, d = A.p, G.order, A.dim
    N = n * d
    lact = np.zeros((d, N, N), dtype=np.int64)
    ract = np.zeros((d, N, N), dtype=np.int64)
    for k in range(d):
        for x in range(n):
            blk = slice(x * d, (x + 1) * d)
            lact[k, blk, blk] = A.left_matrix(A.basis(k))
            ract[k, blk, blk] = A.right_matrix(action.maps[x][:, k])
    C = build_bimodule(A, N, lact, ract)
    CC = self_tensor(C)
    raw = np.zeros((N * N, N), dtype=np.int64)
    for x0, i0 in itertools.product(range(n), range(d)):
        for x in range(n):
            a = int(G.mul[G.inv[x], x0]) * d + i0  # (phi x)(y) = phi(xy)
            raw[a * N + x * d : a * N + (x + 1) * d, x0 * d + i0] += A.unit
    D = la.dot(CC.project, raw % p, p)
    E = np.zeros((d, N), dtype=np.int64)
    E[:, G.identity * d : (G.identity + 1) * d] = np.eye(d, dtype=np.int64)
    coring = build_coring(C, D, E, name=f"dual of {G.name or 'G'}*{A.name}", origin=action)
    check_upsilon(coring)
    t = as_grouplike(coring, np.tile(A.unit, n))
    out = (coring, t)
    object.__setattr__(action, "_dual", out)
    return out


def upsilon(C: Coring) -> np.ndarray:
    """``R* (x)_A R* -> (R (x)_A R)*``, ``phi (x) chi -> (r (x) s -> phi(chi(r) s))``.

    The target is coordinatised by the values on ``x (x) y`` (block
    ``x * |G| + y``).  On values this reads ``phi(y) chi(x)^y``.
    """
    action: GroupAction = C.origin
    G, A = action.group, action.algebra
    p, n, d = A.p, G.order, A.dim
    N = n * d
    raw = np.zeros((n * n * d, N * N), dtype=np.int64)
    for x0, i0, x1, i1 in itertools.product(range(n), range(d), range(n), range(d)):
        val = A.mul(A.basis(i0), action.maps[x0][:, i1])
        blk = (x1 * n + x0) * d
        raw[blk : blk + d, (x0 * d + i0) * N + x1 * d + i1] = val
    if C.cc.relations.size and np.any(la.dot(raw, C.cc.relations.T, p)):
        raise NotBilinear("upsilon is not balanced")
    return la.dot(raw, C.cc.section, p)


def check_upsilon(C: Coring) -> None:
    """Upsilon is bijective and sends ``Delta(phi)`` to ``x (x) y -> phi(xy)``."""
    action: GroupAction = C.origin
    G, d = action.group, action.algebra.dim
    n = G.order
    U = upsilon(C)
    if U.shape[0] != C.cc.dim or la.rank(U, C.p) != U.shape[0]:
        raise CoringLabError("upsilon is not an isomorphism")
    target = np.zeros((n * n * d, n * d), dtype=np.int64)
    for x, y in itertools.product(range(n), repeat=2):
        xy = int(G.mul[x, y])
        target[(x * n + y) * d : (x * n + y + 1) * d, xy * d : (xy + 1) * d] = np.eye(d, dtype=np.int64)
    if not np.array_equal(la.dot(U, C.comul.matrix, C.p), target):
        raise CoringLabError("upsilon(Delta(phi)) differs from (x, y) -> phi(xy)")


# ---------------------------------------------------------------- cocycles


@dataclass(frozen=True, eq=False)
class Cocycle:
    """``f: G -> U(A)`` with ``f(xy) = f(y) f(x)^y``; ``values[x]`` are coordinates."""

    action: GroupAction
    values: tuple[tuple[int, ...], ...]

    def __call__(self, x: int) -> np.ndarray:
        return np.array(self.values[x], dtype=np.int64)

    def __eq__(self, other):
        return isinstance(other, Cocycle) and self.action is other.action and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def is_trivial(self) -> bool:
        return all(v == key(self.action.algebra.unit) for v in self.values)


def cocycle_defect(action: GroupAction, values):
    """First failing pair ``(x, y)`` (or ``(x,)`` for a non-unit value), else None."""
    G, A = action.group, action.algebra
    vals = [A.elem(v) for v in values]
    for x, v in enumerate(vals):
        if not A.is_unit(v):
            return (x,)
    for x, y in itertools.product(range(G.order), repeat=2):
        if not np.array_equal(vals[int(G.mul[x, y])], A.mul(vals[y], action.apply(y, vals[x]))):
            return (x, y)
    return None


def build_cocycle(action: GroupAction, values) -> Cocycle:
    if len(values) != action.group.order:
        raise NotACocycle(f"need {action.group.order} values, got {len(values)}")
    bad = cocycle_defect(action, values)
    if bad is not None:
        raise NotACocycle(f"cocycle identity fails at {bad}", witness=bad)
    return Cocycle(action, tuple(key(action.algebra.elem(v)) for v in values))


def theta(C: Coring, h) -> Cocycle:
    """The cocycle ``x -> h(x)`` of a grouplike of the dual coring."""
    h = as_grouplike(C, h)
    action: GroupAction = C.origin
    d = action.algebra.dim
    v = h.vector
    return build_cocycle(action, [v[x * d : (x + 1) * d] for x in range(action.group.order)])


def theta_inv(C: Coring, f: Cocycle) -> Grouplike:
    """The map ``x a -> f(x) a``, as an element of the dual coring."""
    if f.action is not C.origin:
        raise ValueError("cocycle and dual coring come from different actions")
    v = np.concatenate([f(x) for x in range(f.action.group.order)])
    try:
        return as_grouplike(C, v)
    except NotAGrouplike as e:
        raise NotAGrouplike(f"theta_inv of {f.values} is not grouplike", witness=f.values) from e


def _unit_tables(action: GroupAction, budget):
    """U(A) with the action on unit indices: ``act[x][u]`` indexes ``u^x``."""
    U = action.algebra.units(budget)
    images = np.einsum("xab,ub->xua", action.maps, U.elements) % action.algebra.p
    act = np.array([[U.index[key(v)] for v in row] for row in images], dtype=np.int64)
    return U, act


def _cocycle_from_indices(action, U, idx) -> Cocycle:
    return Cocycle(action, tuple(key(U.elements[i]) for i in idx))


def z1(action: GroupAction, budget: int | None = None) -> list[Cocycle]:
    """All 1-cocycles, sorted by their value coordinates.

    Values are chosen on a generating set of G and propagated with
    ``f(xs) = f(s) f(x)^s``; inconsistent choices are dropped.
    """
    G = action.group
    U, act = _unit_tables(action, budget)
    T = U.table
    gens = G.generators()
    check_budget(len(U) ** len(gens), budget, "cocycle enumeration")
    # breadth-first order of G from the identity, remembering the tree edge
    order, parent = [G.identity], {G.identity: None}
    for x in order:
        for s in gens:
            y = int(G.mul[x, s])
            if y not in parent:
                parent[y] = (x, s)
                order.append(y)
    edges = [(x, s, int(G.mul[x, s])) for x in range(G.order) for s in gens]
    found = []
    for choice in itertools.product(range(len(U)), repeat=len(gens)):
        f_s = dict(zip(gens, choice))
        f = [-1] * G.order
        f[G.identity] = U.identity
        for y in order[1:]:
            x, s = parent[y]
            f[y] = int(T[f_s[s], act[s][f[x]]])
        if all(f[y] == T[f_s[s], act[s][f[x]]] for x, s, y in edges):
            found.append(_cocycle_from_indices(action, U, f))
    found.sort(key=lambda c: c.values)
    return found


def z1_brute_force(action: GroupAction, budget: int | None = None) -> list[Cocycle]:
    """Reference: test every function ``G -> U(A)`` against the full identity."""
    G = action.group
    U, act = _unit_tables(action, budget)
    T = U.table
    check_budget(len(U) ** G.order, budget, "brute-force cocycle enumeration")
    pairs = list(itertools.product(range(G.order), repeat=2))
    found = []
    for f in itertools.product(range(len(U)), repeat=G.order):
        if all(f[int(G.mul[x, y])] == T[f[y], act[y][f[x]]] for x, y in pairs):
            found.append(_cocycle_from_indices(action, U, f))
    found.sort(key=lambda c: c.values)
    return found


def twist(f: Cocycle, alpha) -> Cocycle:
    """``x -> alpha^-1 f(x) alpha^x``."""
    A = f.action.algebra
    alpha = A.elem(alpha)
    ai = A.inverse(alpha)
    vals = [A.product(ai, f(x), f.action.apply(x, alpha)) for x in range(f.action.group.order)]
    return Cocycle(f.action, tuple(key(v) for v in vals))


def are_cohomologous(f: Cocycle, h: Cocycle, budget: int | None = None) -> bool:
    """Whether ``f(x) = alpha^-1 h(x) alpha^x`` for one unit alpha."""
    U = f.action.algebra.units(budget)
    return any(twist(h, a).values == f.values for a in U.elements)


def h1(action: GroupAction, budget: int | None = None) -> PointedOrbitSet:
    """Cohomology classes of 1-cocycles, pointed at the trivial class.

    Points are the value tuples of the cocycles.
    """
    cocycles = z1(action, budget)
    U = action.algebra.units(budget)
    gens = [U.elements[i] for i in U.generators()]
    trivial = tuple(key(action.algebra.unit) for _ in range(action.group.order))
    return orbits_bfs(
        [c.values for c in cocycles],
        gens,
        lambda a, v: twist(Cocycle(action, v), a).values,
        trivial,
    )


def h0(action: GroupAction, budget: int | None = None) -> UnitSubgroup:
    """Units fixed by every group element."""
    U, act = _unit_tables(action, budget)
    fixed = np.all(act == np.arange(len(U))[None, :], axis=0)
    return unit_subgroup(U, np.flatnonzero(fixed))


# ---------------------------------------------------------------- Hopf algebras


@dataclass(frozen=True, eq=False)
class HopfData:
    """A finite Hopf algebra over F_p.

    ``comul`` maps H to ``H (x) H`` (raw index ``s * dim + t``), ``counit`` is a
    row vector and ``antipode`` a square matrix.
    """

    algebra: FiniteAlgebra
    comul: np.ndarray
    counit: np.ndarray
    antipode: np.ndarray
    name: str = ""

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def dim(self) -> int:
        return self.algebra.dim


def tensor_algebra_mul(A: FiniteAlgebra, H: FiniteAlgebra, u, v) -> np.ndarray:
    """Product in ``A (x) H`` of raw vectors (index ``i * dim H + j``)."""
    u = np.asarray(u, dtype=np.int64).reshape(A.dim, H.dim)
    v = np.asarray(v, dtype=np.int64).reshape(A.dim, H.dim)
    out = np.einsum("ij,mn,imk,jnl->kl", u, v, A.sc, H.sc, optimize=True)
    return out.reshape(-1) % A.p


def _first_bad(X, Y):
    bad = np.flatnonzero(np.any(np.asarray(X) != np.asarray(Y), axis=0))
    return int(bad[0]) if bad.size else None


def build_hopf(H: FiniteAlgebra, comul, counit, antipode, name: str = "") -> HopfData:
    p, d = H.p, H.dim
    D = la.asmat(comul, p).reshape(d * d, d)
    e = la.asmat(counit, p).reshape(1, d)
    S = la.asmat(antipode, p).reshape(d, d)
    I = np.eye(d, dtype=np.int64)

    def fail(what, w):
        raise NotAHopfAlgebra(f"{what} fails on basis element {w}", witness=(what, w))

    bad = _first_bad(la.dot(np.kron(D, I), D, p), la.dot(np.kron(I, D), D, p))
    if bad is not None:
        fail("coassociativity", bad)
    for M in (np.kron(e, I), np.kron(I, e)):
        bad = _first_bad(la.dot(M, D, p), I)
        if bad is not None:
            fail("counit law", bad)
    if not np.array_equal(D @ H.unit % p, np.kron(H.unit, H.unit)) or int(e[0] @ H.unit % p) != 1:
        fail("unitality of comultiplication and counit", "1")
    for i, j in itertools.product(range(d), repeat=2):
        if not np.array_equal(la.dot(D, H.sc[i, j], p), tensor_algebra_mul(H, H, D[:, i], D[:, j])):
            fail("multiplicativity of comultiplication", (i, j))
        if int(e[0] @ H.sc[i, j] % p) != int(e[0, i] * e[0, j] % p):
            fail("multiplicativity of counit", (i, j))
    m = H.sc.reshape(d * d, d).T
    unit_counit = np.outer(H.unit, e[0]) % p
    for M in (np.kron(S, I), np.kron(I, S)):
        bad = _first_bad(la.matmul(m, M, D, p=p), unit_counit)
        if bad is not None:
            fail("antipode identity", bad)
    return HopfData(H, D, e, S, name or H.name)


def hopf_group_algebra(p: int, G: FiniteGroup) -> HopfData:
    """F_p[G] with ``x -> x (x) x``, ``x -> 1`` and ``x -> x^-1``."""
    H = group_algebra_ring(p, G)
    n = G.order
    D = np.zeros((n * n, n), dtype=np.int64)
    S = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        D[x * n + x, x] = 1
        S[G.inv[x], x] = 1
    return build_hopf(H, D, np.ones(n, dtype=np.int64), S, name=H.name)


def trivial_hopf(p: int) -> HopfData:
    F = prime_field(p)
    return build_hopf(F, [[1]], [1], [[1]], name=F.name)


@dataclass(frozen=True, eq=False)
class ComoduleAlgebra:
    """An algebra A with a right coaction ``A -> A (x) H`` (raw index ``i * dim H + j``)."""

    algebra: FiniteAlgebra
    hopf: HopfData
    coaction: np.ndarray
    name: str = ""


def build_comodule_algebra(A: FiniteAlgebra, hopf: HopfData, coaction, name: str = "") -> ComoduleAlgebra:
    H = hopf.algebra
    if H.p != A.p:
        raise NotAComoduleAlgebra("algebra and Hopf algebra have different characteristic")
    p, dA, dH = A.p, A.dim, H.dim
    rho = la.asmat(coaction, p).reshape(dA * dH, dA)

    def fail(what, w):
        raise NotAComoduleAlgebra(f"{what} fails on basis element {w}", witness=(what, w))

    IA = np.eye(dA, dtype=np.int64)
    IH = np.eye(dH, dtype=np.int64)
    bad = _first_bad(la.dot(np.kron(rho, IH), rho, p), la.dot(np.kron(IA, hopf.comul), rho, p))
    if bad is not None:
        fail("coassociativity", bad)
    bad = _first_bad(la.dot(np.kron(IA, hopf.counit), rho, p), IA)
    if bad is not None:
        fail("counit law", bad)
    if not np.array_equal(rho @ A.unit % p, np.kron(A.unit, H.unit)):
        fail("unitality", "1")
    for i, j in itertools.product(range(dA), repeat=2):
        if not np.array_equal(la.dot(rho, A.sc[i, j], p), tensor_algebra_mul(A, H, rho[:, i], rho[:, j])):
            fail("multiplicativity", (i, j))
    return ComoduleAlgebra(A, hopf, rho, name or f"{A.name} over {hopf.name}")


def regular_comodule_algebra(hopf: HopfData) -> ComoduleAlgebra:
    """H coacting on itself through its comultiplication."""
    return build_comodule_algebra(hopf.algebra, hopf, hopf.comul, name=f"{hopf.name} regular")


def trivial_comodule_algebra(A: FiniteAlgebra, hopf: HopfData) -> ComoduleAlgebra:
    """``a -> a (x) 1``."""
    rho = np.kron(np.eye(A.dim, dtype=np.int64), hopf.algebra.unit.reshape(-1, 1))
    return build_comodule_algebra(A, hopf, rho, name=f"{A.name} trivial over {hopf.name}")


def comodule_algebra_coring(ca: ComoduleAlgebra) -> tuple[Coring, Grouplike]:
    """The A-coring ``A (x) H`` and its grouplike ``1 (x) 1``.

    ``a'(a (x) h) = a'a (x) h``, ``(a (x) h)a' = a a'_0 (x) h a'_1``,
    ``Delta(a (x) h) = (a (x) h_1) (x)_A (1 (x) h_2)`` and
    ``eps(a (x) h) = a eps(h)``.
    """
    cached = ca.__dict__.get("_coring")
    if cached is not None:
        return cached
    A, hopf = ca.algebra, ca.hopf
    H = hopf.algebra
    p, dA, dH = A.p, A.dim, H.dim
    n = dA * dH
    lact = np.array([np.kron(L, np.eye(dH, dtype=np.int64)) for L in A.left_basis_matrices])
    r = ca.coaction.reshape(dA, dH, dA)
    ract = np.einsum("mnk,mab,ncd->kacbd", r, A.right_basis_matrices, H.right_basis_matrices, optimize=True)
    C = build_bimodule(A, n, ract=ract.reshape(dA, n, n) % p, lact=lact)
    CC = self_tensor(C)
    one_h = [np.kron(A.unit, H.basis(t)) for t in range(dH)]
    c = hopf.comul.reshape(dH, dH, dH)
    raw = np.zeros((n * n, n), dtype=np.int64)
    for i, j in itertools.product(range(dA), range(dH)):
        for s, t in zip(*np.nonzero(c[:, :, j])):
            left = np.zeros(n, dtype=np.int64)
            left[i * dH + s] = 1
            raw[:, i * dH + j] += c[s, t, j] * np.kron(left, one_h[t])
    D = la.dot(CC.project, raw % p, p)
    E = np.kron(np.eye(dA, dtype=np.int64), hopf.counit)
    coring = build_coring(C, D, E, name=f"{A.name} (x) {hopf.name}", origin=ca)
    g = as_grouplike(coring, np.kron(A.unit, H.unit))
    # coinvariants of 1 (x) 1 are the coaction invariants
    stay = np.kron(np.eye(dA, dtype=np.int64), H.unit.reshape(-1, 1))
    invariant = subring_from_span(A, la.nullspace((ca.coaction - stay) % p, p))
    if coinvariants(coring, g) != invariant:
        raise CoringLabError("coinvariants of 1 (x) 1 differ from the coaction invariants")
    out = (coring, g)
    object.__setattr__(ca, "_coring", out)
    return out


def direct_sum_coring(A: FiniteAlgebra, copies: int = 2) -> tuple[Coring, Grouplike]:
    """``A^copies`` with diagonal comultiplication.

    Realised as ``A (x) F_p[C_n]`` for the trivial coaction; the grouplikes
    ``1 (x) x`` are the summand units.
    """
    hopf = hopf_group_algebra(A.p, cyclic_group(copies))
    return comodule_algebra_coring(trivial_comodule_algebra(A, hopf))


def coalgebra_coring(hopf: HopfData) -> tuple[Coring, Grouplike]:
    """H as a coring over F_p (its grouplikes are those of the coalgebra)."""
    return comodule_algebra_coring(trivial_comodule_algebra(prime_field(hopf.p), hopf))


def conjugation_product(C: Coring, base, budget: int | None = None):
    """Group law on ``{alpha^-1 g alpha}``: ``(alpha^-1 g alpha)(beta^-1 g beta) = (alpha beta)^-1 g (alpha beta)``.

    Returns ``(mul, well_defined)`` where ``mul`` maps a pair of grouplike
    coordinate tuples to their product, and ``well_defined`` says whether
    every choice of alpha and beta gave the same answer.
    """
    g = as_grouplike(C, base)
    A = C.algebra
    U = A.units(budget)
    conj = [key(C.conjugate(U.elements[U.inv[u]], g.vector)) for u in range(len(U))]
    reps: dict[tuple, list[int]] = {}
    for u, h in enumerate(conj):
        reps.setdefault(h, []).append(u)
    well_defined = True
    table = {}
    for h1_, us in reps.items():
        for h2_, vs in reps.items():
            prods = {conj[U.mul(u, v)] for u in us for v in vs}
            well_defined &= len(prods) == 1
            table[(h1_, h2_)] = min(prods)
    return (lambda a, b: table[(tuple(a), tuple(b))]), well_defined


def gl_embedding_check(hopf: HopfData, budget: int | None = None) -> Report:
    """``x -> 1 (x) x`` from Gl(H) into Gl(H (x) H) for the regular coaction."""
    rep = Report("gl-embedding")
    H = hopf.algebra
    Hc, _ = coalgebra_coring(hopf)
    gl_h = [g.vector[-H.dim :] for g in grouplikes(Hc, budget)]
    C, one = comodule_algebra_coring(regular_comodule_algebra(hopf))
    images = [np.kron(H.unit, x) for x in gl_h]
    rep.data["gl_h"] = [list(key(x)) for x in gl_h]
    rep.data["images"] = [list(key(v)) for v in images]
    rep.check("images are grouplike", all(C.is_grouplike(v) for v in images))
    rep.check("injective", len({key(v) for v in images}) == len(images))
    closed = all(any(np.array_equal(H.mul(x, y), z) for z in gl_h) for x in gl_h for y in gl_h)
    rep.check("Gl(H) closed under multiplication", closed)
    mul, ok = conjugation_product(C, one, budget)
    rep.check("transported product well defined", ok)
    if ok and closed:
        mult = all(
            mul(key(np.kron(H.unit, x)), key(np.kron(H.unit, y))) == key(np.kron(H.unit, H.mul(x, y)))
            for x in gl_h
            for y in gl_h
        )
        rep.check("multiplicative", mult)
    else:
        rep.skip("multiplicative")
    return rep
