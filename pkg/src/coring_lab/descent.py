"""Unit groups acting on grouplikes: D0, D1, N1, the stabilizers U(A)_g,
the maps phi_g into Aut(C), and the checks built on them.

Units act on Gl(C) by ``(alpha, g) -> alpha g alpha^-1`` and automorphisms
by ``(phi, g) -> phi(g)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .algebra import conjugate_subring, fixed_subring, key
from .constructions import (
    are_cohomologous,
    h0,
    h1,
    psi_matrix,
    theta,
    theta_inv,
    z1,
)
from .coring import (
    Coring,
    as_grouplike,
    canonical_map,
    coinvariants,
    coring_automorphisms,
    generates_as_bimodule,
    grouplikes,
    is_galois,
)
from .errors import CoringLabError, NotGalois
from .orbits import PointedOrbitSet, UnitSubgroup, orbits_bfs, orbits_full, refines, unit_subgroup
from .reports import Report


@dataclass(frozen=True)
class EmptyGrouplikeSet:
    """Returned instead of an orbit set when the coring has no grouplikes."""

    coring: object

    def __bool__(self):
        return False

    def as_dict(self) -> dict:
        return {"empty": True}


# ---------------------------------------------------------------- tables


def _gl_index(C: Coring) -> dict:
    if "gl_index" not in C.cache:
        C.cache["gl_index"] = {g.coords: i for i, g in enumerate(grouplikes(C))}
    return C.cache["gl_index"]


def conjugation_table(C: Coring, budget: int | None = None) -> np.ndarray:
    """``table[u, i]`` indexes ``u g_i u^-1`` in the sorted grouplike list."""
    if "conj_table" not in C.cache:
        U = C.algebra.units(budget)
        gl = grouplikes(C, budget)
        idx = _gl_index(C)
        M = C.carrier
        G = np.array([g.vector for g in gl], dtype=np.int64).reshape(len(gl), C.dim)
        table = np.empty((len(U), len(gl)), dtype=np.int64)
        for u, alpha in enumerate(U.elements):
            conj = la.dot(la.dot(M.left(alpha), M.right(U.elements[U.inv[u]]), C.p), G.T, C.p).T
            table[u] = [idx[key(h)] for h in conj]
        C.cache["conj_table"] = table
    return C.cache["conj_table"]


def aut_table(C: Coring, budget: int | None = None) -> np.ndarray:
    """``table[k, i]`` indexes ``phi_k(g_i)``."""
    if "aut_table" not in C.cache:
        auts = coring_automorphisms(C, budget)
        gl = grouplikes(C, budget)
        idx = _gl_index(C)
        G = np.array([g.vector for g in gl], dtype=np.int64).reshape(len(gl), C.dim)
        table = np.empty((len(auts), len(gl)), dtype=np.int64)
        for k, phi in enumerate(auts):
            table[k] = [idx[key(h)] for h in la.dot(phi.matrix, G.T, C.p).T]
        C.cache["aut_table"] = table
    return C.cache["aut_table"]


def _base(C: Coring, g, budget) -> int:
    grouplikes(C, budget)
    if g is None:
        return 0
    return _gl_index(C)[as_grouplike(C, g).coords]


def _coords(C: Coring, budget) -> list[tuple[int, ...]]:
    return [g.coords for g in grouplikes(C, budget)]


# ---------------------------------------------------------------- unit subgroups


def d0(C: Coring, g, budget: int | None = None) -> UnitSubgroup:
    """``U(A^g)``."""
    U = C.algebra.units(budget)
    return unit_subgroup(U, coinvariants(C, g).unit_indices(budget))


def unit_stabilizer(C: Coring, g, budget: int | None = None) -> UnitSubgroup:
    """``U(A)_g = {alpha : alpha A^g = A^g alpha}``."""
    A = C.algebra
    U = A.units(budget)
    B = coinvariants(C, g)
    return unit_subgroup(U, [u for u, a in enumerate(U.elements) if conjugate_subring(A, a, B) == B])


def whole_unit_group(C: Coring, budget: int | None = None) -> UnitSubgroup:
    U = C.algebra.units(budget)
    return unit_subgroup(U, range(len(U)))


# ---------------------------------------------------------------- orbit sets


def _orbits(C: Coring, members, base: int, budget, full: bool):
    table = conjugation_table(C, budget)
    U = C.algebra.units(budget)
    pts = list(range(table.shape[1]))
    if full:
        o = orbits_full(pts, list(members), lambda u, i: int(table[u, i]), base)
    else:
        o = orbits_bfs(pts, U.generators(list(members)), lambda u, i: int(table[u, i]), base)
    coords = _coords(C, budget)
    return PointedOrbitSet(tuple(tuple(coords[i] for i in orb) for orb in o.orbits), o.distinguished)


def d1(C: Coring, g=None, budget: int | None = None, full: bool = False):
    """Gl(C) modulo conjugation by U(A), pointed at the orbit of g.

    Orbits are grown from generators of U(A); ``full=True`` instead applies
    every unit to every point (the reference computation).
    """
    if not grouplikes(C, budget):
        return EmptyGrouplikeSet(C)
    U = C.algebra.units(budget)
    return _orbits(C, range(len(U)), _base(C, g, budget), budget, full)


def n1(C: Coring, g=None, budget: int | None = None, full: bool = False):
    """Gl(C) modulo conjugation by U(A)_g, with the surjection onto D1.

    Returns ``(N1, surjection)`` where ``surjection[i]`` is the D1 orbit
    containing the i-th N1 orbit.
    """
    gl = grouplikes(C, budget)
    if not gl:
        return EmptyGrouplikeSet(C), None
    base = _base(C, g, budget)
    stab = unit_stabilizer(C, gl[base], budget)
    fine = _orbits(C, stab.members, base, budget, full)
    return fine, refines(fine, d1(C, gl[base], budget, full))


def aut_orbits(C: Coring, g=None, budget: int | None = None, full: bool = False):
    """Gl(C) modulo Aut(C)."""
    if not grouplikes(C, budget):
        return EmptyGrouplikeSet(C)
    table = aut_table(C, budget)
    auts = coring_automorphisms(C, budget)
    pts = list(range(table.shape[1]))
    base = _base(C, g, budget)
    act = lambda k, i: int(table[k, i])  # noqa: E731
    if full:
        o = orbits_full(pts, range(len(auts)), act, base)
    else:
        o = orbits_bfs(pts, auts.generators(), act, base)
    coords = _coords(C, budget)
    return PointedOrbitSet(tuple(tuple(coords[i] for i in orb) for orb in o.orbits), o.distinguished)


def unit_transitive_on_galois(C: Coring, budget: int | None = None) -> bool:
    gal = [i for i, g in enumerate(grouplikes(C, budget)) if is_galois(C, g)]
    if not gal:
        return False
    table = conjugation_table(C, budget)
    return set(int(i) for i in table[:, gal[0]]) >= set(gal)


# ---------------------------------------------------------------- phi_g


@dataclass(frozen=True, eq=False)
class PhiMap:
    """``phi_g: U(A)_g -> Aut(C)``, ``alpha -> can_g psi_{alpha^-1} can_g^-1``.

    ``images`` maps unit indices of the domain to automorphism indices.
    ``homomorphism`` records whether ``phi(ab) = phi(a) o phi(b)`` and
    ``antihomomorphism`` whether ``phi(ab) = phi(b) o phi(a)``.
    """

    coring: Coring
    base: tuple[int, ...]
    domain: UnitSubgroup
    images: dict
    kernel: UnitSubgroup
    homomorphism: bool
    antihomomorphism: bool

    def __call__(self, u: int) -> int:
        return self.images[u]

    def image(self) -> list[int]:
        return sorted(set(self.images.values()))


def phi_g(C: Coring, g, budget: int | None = None) -> PhiMap:
    g = as_grouplike(C, g)
    if not is_galois(C, g):
        raise NotGalois(f"{g} is not Galois", witness=g.coords)
    A, p = C.algebra, C.p
    U = A.units(budget)
    auts = coring_automorphisms(C, budget)
    dom = unit_stabilizer(C, g, budget)
    B = coinvariants(C, g)
    K = canonical_map(C, g).matrix
    Kinv = la.inverse(K, p)
    images = {}
    for u in dom:
        psi = psi_matrix(A, B, U.elements[U.inv[u]]).matrix
        M = la.matmul(K, psi, Kinv, p=p)
        try:
            images[u] = auts.find(M)
        except KeyError:
            raise CoringLabError(f"phi_g of unit {u} is not a coring automorphism", witness=u) from None
    hom = all(images[U.mul(a, b)] == auts.table[images[a], images[b]] for a in dom for b in dom)
    anti = all(images[U.mul(a, b)] == auts.table[images[b], images[a]] for a in dom for b in dom)
    kernel = unit_subgroup(U, [u for u in dom if images[u] == auts.identity])
    return PhiMap(C, g.coords, dom, images, kernel, hom, anti)


# ---------------------------------------------------------------- reports


def exact_sequence_report(C: Coring, g, budget: int | None = None) -> Report:
    """``1 -> U(A^g) -> U(A)_g -> Aut(C)`` and, under transitivity, the quotient."""
    rep = Report("exactseq")
    g = as_grouplike(C, g)
    U = C.algebra.units(budget)
    inner = d0(C, g, budget)
    stab = unit_stabilizer(C, g, budget)
    auts = coring_automorphisms(C, budget)
    rep.data.update(
        {
            "grouplike": list(g.coords),
            "units": len(U),
            "units_of_coinvariants": len(inner),
            "stabilizer": len(stab),
            "automorphisms": len(auts),
        }
    )
    rep.check("U(A^g) is a subgroup", inner.is_subgroup())
    rep.check("U(A)_g is a subgroup", stab.is_subgroup())
    rep.check("U(A^g) inside U(A)_g", set(inner) <= set(stab))
    w = inner.normality_witness(stab)
    rep.check("U(A^g) normal in U(A)_g", w is None, witness=w)
    if not is_galois(C, g):
        rep.skip("phi_g", reason="grouplike is not Galois")
        return rep
    phi = phi_g(C, g, budget)
    rep.data["phi_g_convention"] = (
        "phi(ab) = phi(a) o phi(b)" if phi.homomorphism else "phi(ab) = phi(b) o phi(a)" if phi.antihomomorphism else "neither"
    )
    rep.check("phi_g is a homomorphism", phi.homomorphism)
    rep.check("kernel of phi_g is U(A^g)", phi.kernel == inner)
    if not unit_transitive_on_galois(C, budget):
        rep.skip("phi_g surjective", reason="U(A) is not transitive on Gal(C)")
        return rep
    rep.check("phi_g surjective", phi.image() == list(range(len(auts))))
    rep.check("|Aut(C)| = |U(A)_g| / |U(A^g)|", len(auts) * len(inner) == len(stab))
    cosets = inner.left_cosets(stab)
    images = [{phi(u) for u in c} for c in cosets]
    rep.check("phi_g constant on cosets", all(len(s) == 1 for s in images))
    rows = [[list(key(U.elements[c[0]])), min(s)] for c, s in zip(cosets, images)]
    rep.data["cosets"] = rows
    rep.check("coset map bijective", sorted(r[1] for r in rows) == list(range(len(auts))))
    return rep


def mejor_check(C: Coring, g, budget: int | None = None) -> Report:
    """Equivalence of the three transitivity conditions, and their consequences.

    (i) ``U(A)_g = U(A)``; (ii) ``U(A)_h = U(A)`` for all Galois h;
    (iii) Aut(C) is transitive on Gal(C).  When they hold, ``xi_g: phi ->
    phi(g)`` is a bijection Aut(C) -> Gal(C), Gal(C) inherits a group law,
    and ``1 -> U(A^g) -> U(A) -> Gal(C) -> 1`` is exact.
    """
    rep = Report("mejor")
    g = as_grouplike(C, g)
    rep.data["grouplike"] = list(g.coords)
    if not is_galois(C, g):
        rep.skip("hypothesis", reason="grouplike is not Galois")
        return rep
    if not unit_transitive_on_galois(C, budget):
        rep.skip("hypothesis", reason="U(A) is not transitive on Gal(C)")
        return rep
    gl = grouplikes(C, budget)
    gal = [i for i, h in enumerate(gl) if is_galois(C, h)]
    U = C.algebra.units(budget)
    auts = coring_automorphisms(C, budget)
    atab = aut_table(C, budget)
    ctab = conjugation_table(C, budget)
    base = _gl_index(C)[g.coords]

    c1 = len(unit_stabilizer(C, g, budget)) == len(U)
    c2 = all(len(unit_stabilizer(C, gl[h], budget)) == len(U) for h in gal)
    c3 = set(int(i) for i in atab[:, base]) >= set(gal)
    rep.data["conditions"] = {"i": c1, "ii": c2, "iii": c3}
    rep.check("conditions equivalent", c1 == c2 == c3, i=c1, ii=c2, iii=c3)
    if not c1:
        rep.skip("consequences", reason="conditions do not hold")
        return rep

    B = coinvariants(C, g)
    rep.check("A^h = A^g for all Galois h", all(coinvariants(C, gl[h]) == B for h in gal))
    rep.check("g generates C as a bimodule", generates_as_bimodule(C, g))
    xi = [int(atab[k, base]) for k in range(len(auts))]
    rep.check("xi_g bijective", sorted(xi) == gal)
    if sorted(xi) != gal:
        return rep
    back = {h: k for k, h in enumerate(xi)}
    # Gal(C) group law transported from Aut(C)
    table = [[xi[int(auts.table[back[a], back[b]])] for b in gal] for a in gal]
    rep.data["galois"] = [list(gl[h].coords) for h in gal]
    rep.data["galois_table"] = [[gal.index(x) for x in row] for row in table]
    rep.data["galois_order"] = len(gal)
    # U(A) -> Gal(C), alpha -> alpha^-1 g alpha
    proj = [int(ctab[U.inv[u], base]) for u in range(len(U))]
    rep.check("U(A) -> Gal(C) surjective", set(proj) == set(gal))
    hom = all(proj[U.mul(a, b)] == table[gal.index(proj[a])][gal.index(proj[b])] for a in range(len(U)) for b in range(len(U)))
    rep.check("U(A) -> Gal(C) homomorphism", hom)
    kernel = unit_subgroup(U, [u for u in range(len(U)) if proj[u] == base])
    rep.check("kernel is U(A^g)", kernel == d0(C, g, budget))
    rep.check("|Gal(C)| = |U(A)| / |U(A^g)|", len(gal) * len(kernel) == len(U))
    return rep


def simple_cosemisimple_check(C: Coring, g, budget: int | None = None) -> Report:
    """If A^g or A is a division ring: Gl(C) = Gal(C) = the conjugates of g."""
    rep = Report("simple-cosemisimple")
    g = as_grouplike(C, g)
    A = C.algebra
    if not is_galois(C, g):
        rep.skip("hypothesis", reason="grouplike is not Galois")
        return rep
    if not (coinvariants(C, g).is_division_ring(budget) or A.is_division_ring(budget)):
        rep.skip("hypothesis", reason="neither A^g nor A is a division ring")
        return rep
    gl = grouplikes(C, budget)
    gal = [i for i, h in enumerate(gl) if is_galois(C, h)]
    base = _gl_index(C)[g.coords]
    conj = sorted(set(int(i) for i in conjugation_table(C, budget)[:, base]))
    rep.check("Gl(C) = Gal(C)", len(gal) == len(gl))
    rep.check("Gal(C) = conjugates of g", gal == conj)
    rep.check("D1 trivial", d1(C, g, budget).is_trivial())
    return rep


def theta_check(C: Coring, budget: int | None = None) -> Report:
    """Grouplikes of the dual coring versus 1-cocycles."""
    rep = Report("theta")
    action = C.origin
    gl = grouplikes(C, budget)
    cocycles = z1(action, budget)
    images = [theta(C, h) for h in gl]
    rep.data.update({"grouplikes": len(gl), "cocycles": len(cocycles)})
    rep.check("theta lands in Z1", sorted(c.values for c in images) == [c.values for c in cocycles])
    rep.check("theta injective", len({c.values for c in images}) == len(gl))
    rep.check("theta_inv o theta = id", all(theta_inv(C, c).coords == h.coords for c, h in zip(images, gl)))
    rep.check("theta o theta_inv = id", all(theta(C, theta_inv(C, f)).values == f.values for f in cocycles))
    t = as_grouplike(C, np.tile(C.algebra.unit, action.group.order))
    rep.check("theta(t) trivial", theta(C, t).is_trivial())
    ctab = conjugation_table(C, budget)
    agree = True
    for i, h in enumerate(gl):
        conj = set(int(x) for x in ctab[:, i])
        for j in range(len(gl)):
            if are_cohomologous(images[i], images[j], budget) != (j in conj):
                agree = False
    rep.check("cohomologous iff conjugate", agree)
    return rep


def clasico_check(C: Coring, budget: int | None = None) -> Report:
    """``D0(R*, t) = H0`` and ``D1(R*, t) = H1`` through theta."""
    rep = Report("clasico")
    action = C.origin
    t = as_grouplike(C, np.tile(C.algebra.unit, action.group.order))
    rep.check("A^t = invariant subring", coinvariants(C, t) == fixed_subring(action))
    rep.check("D0 = H0", d0(C, t, budget) == h0(action, budget))
    D1 = d1(C, t, budget)
    H1 = h1(action, budget)
    mapped = [sorted(theta(C, h).values for h in orb) for orb in D1.orbits]
    rep.check("theta maps D1 orbits onto H1 classes", sorted(map(tuple, mapped)) == sorted(H1.orbits))
    base = tuple(sorted(theta(C, h).values for h in D1.base_orbit))
    rep.check("base points correspond", base == H1.base_orbit)
    rep.data.update({"D1": len(D1), "H1": len(H1), "Z1": sum(H1.sizes()), "t_galois": is_galois(C, t)})
    return rep
