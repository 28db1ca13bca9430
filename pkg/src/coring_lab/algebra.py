"""Finite-dimensional unital algebras over F_p, their units and subrings,
finite groups given by Cayley tables, and actions by ring automorphisms.

Elements are coordinate vectors (numpy int64) in the algebra's basis.
Group actions are *right* actions written exponentially: ``a^(xy) = (a^x)^y``,
so the matrix of ``xy`` is ``maps[y] @ maps[x]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Sequence

import numpy as np

from . import linalg as la
from .errors import (
    NoUnit,
    NotAGroup,
    NotAnAction,
    NotAnAutomorphism,
    NotAssociative,
    NotAUnit,
    NotPrime,
    TooLarge,
)

#: Hard ceiling on exhaustive searches (number of candidates visited).
DEFAULT_BUDGET = 1 << 24


def check_budget(count: int, budget: int | None, what: str) -> None:
    limit = DEFAULT_BUDGET if budget is None else budget
    if count > limit:
        raise TooLarge(f"{what}: {count} candidates exceed the budget {limit}", witness=count)


def key(v) -> tuple[int, ...]:
    """Hashable, sortable form of a coordinate vector."""
    return tuple(int(x) for x in np.asarray(v).ravel())


#: Largest supported characteristic; keeps p*p inside int64 during elimination.
MAX_PRIME = (1 << 31) - 1


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    """Associative unital F_p-algebra given by structure constants.

    ``sc[i, j, k]`` is the coefficient of ``e_k`` in ``e_i e_j``.
    Build through :func:`build_algebra` so the axioms get checked.
    """

    p: int
    dim: int
    sc: np.ndarray
    unit: np.ndarray
    name: str = ""

    def __post_init__(self):
        sc = la.asmat(self.sc, self.p).reshape(self.dim, self.dim, self.dim)
        object.__setattr__(self, "sc", sc)
        object.__setattr__(self, "unit", la.asmat(self.unit, self.p).reshape(self.dim))
        # _L[i] is left multiplication by e_i, _R[i] right multiplication by e_i.
        object.__setattr__(self, "_L", np.ascontiguousarray(sc.transpose(0, 2, 1)))
        object.__setattr__(self, "_R", np.ascontiguousarray(sc.transpose(1, 2, 0)))

    def __repr__(self):
        label = self.name or f"dim {self.dim}"
        return f"FiniteAlgebra({label} over F_{self.p})"

    @property
    def size(self) -> int:
        return self.p**self.dim

    def elem(self, coords) -> np.ndarray:
        v = la.asmat(coords, self.p)
        if v.shape != (self.dim,):
            raise ValueError(f"expected {self.dim} coordinates, got shape {v.shape}")
        return v

    def one(self) -> np.ndarray:
        return self.unit.copy()

    def zero(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=np.int64)

    def basis(self, i: int) -> np.ndarray:
        v = self.zero()
        v[i] = 1
        return v

    def scalar(self, c: int) -> np.ndarray:
        return (c * self.unit) % self.p

    def mul(self, a, b) -> np.ndarray:
        return np.einsum("i,j,ijk->k", a, b, self.sc) % self.p

    def product(self, *factors) -> np.ndarray:
        out = self.one()
        for f in factors:
            out = self.mul(out, f)
        return out

    def left_matrix(self, a) -> np.ndarray:
        """Matrix of ``x -> a x``."""
        return np.tensordot(np.asarray(a, dtype=np.int64), self._L, axes=1) % self.p

    def right_matrix(self, a) -> np.ndarray:
        """Matrix of ``x -> x a``."""
        return np.tensordot(np.asarray(a, dtype=np.int64), self._R, axes=1) % self.p

    @property
    def left_basis_matrices(self) -> np.ndarray:
        return self._L

    @property
    def right_basis_matrices(self) -> np.ndarray:
        return self._R

    def inverse(self, a) -> np.ndarray:
        """Two-sided inverse of ``a``; raises :class:`NotAUnit`."""
        a = self.elem(a)
        x = la.solve(self.left_matrix(a), self.unit, self.p)
        if x is None or not np.array_equal(self.mul(x, a), self.unit):
            raise NotAUnit(f"{key(a)} is not a unit", witness=key(a))
        return x

    def is_unit(self, a) -> bool:
        return la.is_invertible(self.left_matrix(a), self.p)

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.sc, self.sc.transpose(1, 0, 2)))

    def elements(self, budget: int | None = None) -> np.ndarray:
        check_budget(self.size, budget, f"enumerating {self!r}")
        return la.coefficient_grid(self.p, self.dim)

    def units(self, budget: int | None = None) -> UnitGroup:
        cached = self.__dict__.get("_units")
        if cached is None:
            cached = UnitGroup.enumerate(self, budget)
            object.__setattr__(self, "_units", cached)
        return cached

    def is_division_ring(self, budget: int | None = None) -> bool:
        return len(self.units(budget)) == self.size - 1

    def fmt(self, a) -> str:
        return ",".join(str(x) for x in key(a))


def build_algebra(p: int, dim: int, sc, unit, name: str = "") -> FiniteAlgebra:
    """Validate structure constants and return the algebra.

    Raises NotPrime, NotAssociative (witness: basis triple) or NoUnit.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime", witness=p)
    if p > MAX_PRIME:
        raise ValueError(f"characteristic {p} exceeds the supported maximum {MAX_PRIME}")
    if dim < 1:
        raise ValueError("dim must be at least 1")
    sc = np.asarray(sc, dtype=np.int64)
    if sc.shape != (dim, dim, dim):
        raise ValueError(f"structure constants must have shape {(dim, dim, dim)}, got {sc.shape}")
    A = FiniteAlgebra(p, dim, sc, unit, name)
    # (e_i e_j) e_k against e_i (e_j e_k), all triples at once.
    left = np.einsum("ijm,mkn->ijkn", A.sc, A.sc) % p
    right = np.einsum("jkm,imn->ijkn", A.sc, A.sc) % p
    bad = np.argwhere(np.any(left != right, axis=-1))
    if bad.size:
        i, j, k = (int(t) for t in bad[0])
        raise NotAssociative(f"(e{i} e{j}) e{k} != e{i} (e{j} e{k})", witness=(i, j, k))
    eye = np.eye(dim, dtype=np.int64)
    if not (
        np.array_equal(A.left_matrix(A.unit), eye) and np.array_equal(A.right_matrix(A.unit), eye)
    ):
        raise NoUnit("given unit is not a two-sided identity")
    return A


def algebra_from_mul(p: int, dim: int, mul: Callable[[int, int], Sequence[int]], unit, name="") -> FiniteAlgebra:
    sc = np.array([[mul(i, j) for j in range(dim)] for i in range(dim)], dtype=np.int64)
    return build_algebra(p, dim, sc, unit, name)


# ---------------------------------------------------------------- presets


def prime_field(p: int) -> FiniteAlgebra:
    return build_algebra(p, 1, [[[1]]], [1], name=f"F{p}")


def first_irreducible(p: int, n: int) -> list[int]:
    """Lexicographically first monic irreducible of degree n over F_p.

    Returned as coefficients ``c_0..c_{n-1}`` of ``x^n + sum c_i x^i``.
    """
    for tail in itertools.product(range(p), repeat=n):
        coeffs = list(reversed(tail))  # ordered by (c_{n-1}, ..., c_0)
        if coeffs[0] == 0:
            continue
        if _is_irreducible(coeffs, p):
            return coeffs
    raise ValueError(f"no irreducible of degree {n} over F_{p}")  # pragma: no cover


def _polymod(a: list[int], m: list[int], p: int) -> list[int]:
    a = [x % p for x in a]
    while len(a) >= len(m):
        c = a[-1]
        if c:
            shift = len(a) - len(m)
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - c * mi) % p
        a.pop()
    return a


def _is_irreducible(coeffs: list[int], p: int) -> bool:
    n = len(coeffs)
    f = coeffs + [1]
    # no factor of degree <= n/2: brute force over monic polynomials
    for d in range(1, n // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            g = list(tail) + [1]
            if not any(_polymod(f, g, p)):
                return False
    return True


def finite_field(p: int, n: int) -> FiniteAlgebra:
    """F_{p^n} as an F_p-algebra in the power basis ``1, x, ..., x^(n-1)``."""
    if n == 1:
        return prime_field(p)
    m = first_irreducible(p, n) + [1]

    def mul(i, j):
        prod = [0] * (i + j) + [1]
        r = _polymod(prod, m, p)
        return r + [0] * (n - len(r))

    unit = [1] + [0] * (n - 1)
    return algebra_from_mul(p, n, mul, unit, name=f"F{p**n}")


def matrix_algebra(p: int, n: int) -> FiniteAlgebra:
    """M_n(F_p) in the basis of matrix units ``E_ij`` (index ``i*n + j``)."""
    d = n * n

    def mul(a, b):
        (i, j), (k, l) = divmod(a, n), divmod(b, n)
        out = [0] * d
        if j == k:
            out[i * n + l] = 1
        return out

    unit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    return algebra_from_mul(p, d, mul, unit, name=f"M{n}(F{p})")


def upper_triangular(p: int, n: int) -> FiniteAlgebra:
    """Upper triangular n x n matrices, basis ``E_ij`` with ``i <= j``."""
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    index = {c: k for k, c in enumerate(cells)}

    def mul(a, b):
        (i, j), (k, l) = cells[a], cells[b]
        out = [0] * len(cells)
        if j == k:
            out[index[(i, l)]] = 1
        return out

    unit = [1 if i == j else 0 for (i, j) in cells]
    return algebra_from_mul(p, len(cells), mul, unit, name=f"T{n}(F{p})")


def product_algebra(p: int, n: int) -> FiniteAlgebra:
    """F_p x ... x F_p (n copies), basis of orthogonal idempotents."""

    def mul(i, j):
        return [1 if (i == j == k) else 0 for k in range(n)]

    return algebra_from_mul(p, n, mul, [1] * n, name=f"F{p}^x{n}")


def group_algebra(p: int, G: FiniteGroup) -> FiniteAlgebra:
    """F_p[G] with basis the group elements in table order."""

    def mul(x, y):
        out = [0] * G.order
        out[int(G.mul[x, y])] = 1
        return out

    unit = [1 if x == G.identity else 0 for x in range(G.order)]
    return algebra_from_mul(p, G.order, mul, unit, name=f"F{p}[{G.name or 'G'}]")


# ---------------------------------------------------------------- units


@dataclass(frozen=True, eq=False)
class UnitGroup:
    """U(A), enumerated exhaustively; units are referred to by index.

    ``elements`` is sorted lexicographically, ``inv[i]`` indexes the inverse of
    unit ``i`` and ``table[i, j]`` indexes the product ``u_i u_j``.
    """

    algebra: FiniteAlgebra
    elements: np.ndarray
    inv: tuple[int, ...]
    index: dict = field(repr=False)

    @classmethod
    def enumerate(cls, A: FiniteAlgebra, budget: int | None = None) -> UnitGroup:
        found: list[np.ndarray] = []
        inverses: list[np.ndarray] = []
        for a in A.elements(budget):
            x = la.solve(A.left_matrix(a), A.unit, A.p)
            if x is not None and np.array_equal(A.mul(x, a), A.unit):
                found.append(a)
                inverses.append(x)
        elements = np.array(found, dtype=np.int64).reshape(-1, A.dim)
        index = {key(u): i for i, u in enumerate(elements)}
        inv = tuple(index[key(x)] for x in inverses)
        return cls(A, elements, inv, index)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity(self) -> int:
        return self.index[key(self.algebra.unit)]

    def keys(self) -> list[tuple[int, ...]]:
        return [key(u) for u in self.elements]

    def find(self, a) -> int:
        try:
            return self.index[key(a)]
        except KeyError:
            raise NotAUnit(f"{key(a)} is not a unit", witness=key(a)) from None

    @cached_property
    def table(self) -> np.ndarray:
        U = self.elements
        n = len(U)
        out = np.empty((n, n), dtype=np.int64)
        sc = self.algebra.sc
        p = self.algebra.p
        step = max(1, (1 << 18) // max(1, n * self.algebra.dim))
        for start in range(0, n, step):
            prods = np.einsum("ai,bj,ijk->abk", U[start : start + step], U, sc) % p
            for a, row in enumerate(prods, start):
                out[a] = [self.index[key(v)] for v in row]
        return out

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def closure(self, gens: Sequence[int]) -> list[int]:
        """Subgroup generated by the given unit indices, sorted."""
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for u in frontier:
                for g in gens:
                    w = self.mul(u, g)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return sorted(seen)

    def generators(self, members: Sequence[int] | None = None) -> list[int]:
        """A small generating set of the subgroup ``members`` (default: all)."""
        members = sorted(range(len(self)) if members is None else members)
        gens: list[int] = []
        span = {self.identity}
        for u in members:
            if u not in span:
                gens.append(u)
                span = set(self.closure(gens))
        return gens

    def is_subgroup(self, members: Sequence[int]) -> bool:
        S = set(members)
        if self.identity not in S:
            return False
        return all(self.inv[a] in S for a in S) and all(self.mul(a, b) in S for a in S for b in S)


# ---------------------------------------------------------------- subrings


@dataclass(frozen=True, eq=False)
class Subring:
    """Unital subalgebra, stored as the reduced echelon basis of its span."""

    algebra: FiniteAlgebra
    basis: np.ndarray

    def __eq__(self, other):
        if not isinstance(other, Subring):
            return NotImplemented
        return self.algebra is other.algebra and np.array_equal(self.basis, other.basis)

    def __hash__(self):
        return hash((id(self.algebra), self.basis.tobytes()))

    def __repr__(self):
        return f"Subring(dim {self.dim} of {self.algebra!r}, basis={[key(b) for b in self.basis]})"

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def contains(self, a) -> bool:
        return la.in_span(self.basis, a, self.algebra.p)

    def elements(self, budget: int | None = None) -> np.ndarray:
        check_budget(self.algebra.p**self.dim, budget, "enumerating a subring")
        return (la.coefficient_grid(self.algebra.p, self.dim) @ self.basis) % self.algebra.p

    def unit_indices(self, budget: int | None = None) -> list[int]:
        """Indices in U(A) of the units lying in the subring (= its own units)."""
        U = self.algebra.units(budget)
        return [i for i, u in enumerate(U.elements) if self.contains(u)]

    def is_division_ring(self, budget: int | None = None) -> bool:
        return len(self.unit_indices(budget)) == self.algebra.p**self.dim - 1


def subring_from_span(A: FiniteAlgebra, vectors) -> Subring:
    """Validate that ``span(vectors)`` is a unital subring."""
    basis = la.row_basis(np.asarray(vectors, dtype=np.int64).reshape(-1, A.dim), A.p, A.dim)
    B = Subring(A, basis)
    if not B.contains(A.unit):
        raise NoUnit("subspace does not contain 1")
    for b, c in itertools.product(basis, repeat=2):
        if not B.contains(A.mul(b, c)):
            raise NotAssociative("subspace not closed under multiplication", witness=(key(b), key(c)))
    return B


def subring_closure(A: FiniteAlgebra, gens=()) -> Subring:
    """Smallest unital subalgebra containing ``gens``."""
    vecs = [A.unit] + [A.elem(g) for g in gens]
    basis = la.row_basis(vecs, A.p, A.dim)
    while True:
        prods = [A.mul(b, c) for b in basis for c in basis]
        new = la.row_basis(np.vstack([basis] + prods), A.p, A.dim)
        if new.shape == basis.shape:
            return Subring(A, new)
        basis = new


def prime_subring(A: FiniteAlgebra) -> Subring:
    return subring_closure(A)


def whole_ring(A: FiniteAlgebra) -> Subring:
    return Subring(A, np.eye(A.dim, dtype=np.int64))


def conjugate_subring(A: FiniteAlgebra, alpha, B: Subring) -> Subring:
    """The subring ``alpha^-1 B alpha``."""
    ai = A.inverse(alpha)
    conj = [A.mul(A.mul(ai, b), alpha) for b in B.basis]
    return Subring(A, la.row_basis(conj, A.p, A.dim))


def fixed_subring(action: GroupAction) -> Subring:
    """Elements fixed by every group element."""
    A = action.algebra
    eye = np.eye(A.dim, dtype=np.int64)
    stacked = np.vstack([(M - eye) % A.p for M in action.maps])
    return Subring(A, la.row_basis(la.nullspace(stacked, A.p), A.p, A.dim))


# ---------------------------------------------------------------- groups


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    mul: np.ndarray
    inv: tuple[int, ...]
    identity: int
    labels: tuple = ()
    name: str = ""

    def __repr__(self):
        return f"FiniteGroup({self.name or 'order ' + str(self.order)})"

    def label(self, x: int) -> str:
        return str(self.labels[x]) if self.labels else str(x)

    def generators(self) -> list[int]:
        gens: list[int] = []
        span = {self.identity}
        for x in range(self.order):
            if x not in span:
                gens.append(x)
                span = self._closure(gens)
        return gens

    def _closure(self, gens) -> set[int]:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            frontier = [int(self.mul[u, g]) for u in frontier for g in gens if int(self.mul[u, g]) not in seen]
            seen.update(frontier)
        return seen


def build_group(table, labels: Sequence = (), name: str = "") -> FiniteGroup:
    """Validate a Cayley table (``table[x][y]`` = index of ``xy``)."""
    T = np.asarray(table, dtype=np.int64)
    n = T.shape[0] if T.ndim == 2 else 0
    if T.ndim != 2 or T.shape != (n, n) or n == 0:
        raise NotAGroup("Cayley table must be a nonempty square")
    if T.min() < 0 or T.max() >= n:
        raise NotAGroup("table entries out of range")
    ids = [e for e in range(n) if np.array_equal(T[e], np.arange(n)) and np.array_equal(T[:, e], np.arange(n))]
    if not ids:
        raise NotAGroup("no identity element")
    e = ids[0]
    lhs = T[T, :]  # lhs[x, y, z] = (xy)z
    rhs = T[:, T]  # rhs[x, y, z] = x(yz)
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        raise NotAGroup("not associative", witness=tuple(int(t) for t in bad[0]))
    inv = []
    for x in range(n):
        ys = np.flatnonzero(T[x] == e)
        if ys.size == 0 or T[ys[0], x] != e:
            raise NotAGroup(f"element {x} has no inverse", witness=x)
        inv.append(int(ys[0]))
    return FiniteGroup(n, T, tuple(inv), e, tuple(labels), name)


def cyclic_group(n: int) -> FiniteGroup:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return build_group(table, labels=[f"s^{i}" for i in range(n)], name=f"C{n}")


def trivial_group() -> FiniteGroup:
    return build_group([[0]], labels=["e"], name="1")


def symmetric_group(n: int) -> FiniteGroup:
    """S_n with product ``(xy)(i) = x(y(i))``; element 0 is the identity."""
    perms = list(itertools.permutations(range(n)))
    index = {q: i for i, q in enumerate(perms)}
    table = [[index[tuple(x[y[i]] for i in range(n))] for y in perms] for x in perms]
    return build_group(table, labels=perms, name=f"S{n}")


# ---------------------------------------------------------------- actions


@dataclass(frozen=True, eq=False)
class GroupAction:
    """Right action of a finite group on an algebra by ring automorphisms."""

    group: FiniteGroup
    algebra: FiniteAlgebra
    maps: np.ndarray

    def apply(self, x: int, a) -> np.ndarray:
        """``a^x``."""
        return (self.maps[x] @ np.asarray(a, dtype=np.int64)) % self.algebra.p

    def __repr__(self):
        return f"GroupAction({self.group!r} on {self.algebra!r})"


def _as_matrix(A: FiniteAlgebra, m) -> np.ndarray:
    if callable(m):
        images = [A.elem(m(A.basis(i))) for i in range(A.dim)]
        M = np.array(images, dtype=np.int64).T.reshape(A.dim, A.dim)
        # a callable must agree with its linearization
        for a in (A.zero(), A.unit, *(A.basis(i) for i in range(A.dim))):
            if not np.array_equal(A.elem(m(a)), (M @ a) % A.p):
                raise NotAnAutomorphism("map is not additive", witness=key(a))
        return M
    return la.asmat(m, A.p).reshape(A.dim, A.dim)


def check_automorphism(A: FiniteAlgebra, M: np.ndarray) -> None:
    p = A.p
    if not np.array_equal((M @ A.unit) % p, A.unit):
        raise NotAnAutomorphism("does not fix 1", witness="unit")
    for i, j in itertools.product(range(A.dim), repeat=2):
        lhs = (M @ A.sc[i, j]) % p
        rhs = A.mul(M[:, i], M[:, j])
        if not np.array_equal(lhs, rhs):
            raise NotAnAutomorphism(f"not multiplicative on (e{i}, e{j})", witness=(i, j))
    if not la.is_invertible(M, p):
        raise NotAnAutomorphism("not invertible")


def build_action(G: FiniteGroup, A: FiniteAlgebra, maps) -> GroupAction:
    """``maps[x]`` is the matrix (or a callable on coordinates) of ``a -> a^x``."""
    if len(maps) != G.order:
        raise NotAnAction(f"need {G.order} maps, got {len(maps)}")
    mats = np.array([_as_matrix(A, m) for m in maps], dtype=np.int64)
    for M in mats:
        check_automorphism(A, M)
    if not np.array_equal(mats[G.identity], np.eye(A.dim, dtype=np.int64)):
        raise NotAnAction("identity does not act trivially", witness=G.identity)
    for x, y in itertools.product(range(G.order), repeat=2):
        if not np.array_equal(mats[int(G.mul[x, y])], (mats[y] @ mats[x]) % A.p):
            raise NotAnAction(f"a^(xy) != (a^x)^y for x={x}, y={y}", witness=(x, y))
    return GroupAction(G, A, mats)


def trivial_action(G: FiniteGroup, A: FiniteAlgebra) -> GroupAction:
    return build_action(G, A, [np.eye(A.dim, dtype=np.int64)] * G.order)


def frobenius_matrix(A: FiniteAlgebra) -> np.ndarray:
    """Matrix of ``a -> a^p`` (an automorphism when A is commutative)."""
    cols = [A.product(*([A.basis(i)] * A.p)) for i in range(A.dim)]
    return np.array(cols, dtype=np.int64).T


def frobenius_action(A: FiniteAlgebra, G: FiniteGroup | None = None) -> GroupAction:
    """Cyclic group generated by Frobenius; ``s^k`` acts by ``a -> a^(p^k)``."""
    F = frobenius_matrix(A)
    order, M = 1, F.copy()
    while not np.array_equal(M, np.eye(A.dim, dtype=np.int64)):
        M = (M @ F) % A.p
        order += 1
    G = G or cyclic_group(order)
    if G.order != order:
        raise NotAnAction(f"Frobenius has order {order}, group has order {G.order}")
    mats, M = [], np.eye(A.dim, dtype=np.int64)
    for _ in range(order):
        mats.append(M)
        M = (M @ F) % A.p
    return build_action(G, A, mats)


def permutation_action(G: FiniteGroup, n: int, p: int) -> GroupAction:
    """S_n (as built by :func:`symmetric_group`) permuting the factors of F_p^n.

    ``(a^x)_i = a_{x(i)}``, which is a right action for ``(xy)(i) = x(y(i))``.
    """
    A = product_algebra(p, n)
    mats = []
    for perm in G.labels:
        M = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            M[i, perm[i]] = 1
        mats.append(M)
    return build_action(G, A, mats)


def pullback_action(action: GroupAction, G: FiniteGroup, hom: Sequence[int]) -> GroupAction:
    """Let ``G`` act through a homomorphism ``hom: G -> action.group``."""
    return build_action(G, action.algebra, [action.maps[hom[x]] for x in range(G.order)])


def sign_hom(G: FiniteGroup) -> list[int]:
    """Parity of each permutation in a symmetric group (as C2 indices)."""
    out = []
    for perm in G.labels:
        inversions = sum(1 for i in range(len(perm)) for j in range(i) if perm[j] > perm[i])
        out.append(inversions % 2)
    return out
