"""Exhaustive identity checks run on a coring instance.

Each function returns a :class:`Report`; :func:`property_suite` bundles them.
"""

from __future__ import annotations

import numpy as np

from . import linalg as la
from .algebra import conjugate_subring
from .constructions import psi_matrix
from .coring import (
    Coring,
    as_grouplike,
    canonical_map,
    coinvariants,
    coring_automorphisms,
    grouplikes,
    grouplikes_brute_force,
    is_galois,
)
from .descent import (
    EmptyGrouplikeSet,
    aut_orbits,
    aut_table,
    conjugation_table,
    d0,
    d1,
    n1,
    phi_g,
    simple_cosemisimple_check,
    unit_stabilizer,
)
from .reports import Report

#: Largest carrier (p ** dim) on which the brute-force grouplike oracle runs.
ORACLE_LIMIT = 1 << 16


def _pairs(C: Coring, budget):
    U = C.algebra.units(budget)
    return U, grouplikes(C, budget)


def check_conjugate_coinvariants(C: Coring, budget=None) -> bool:
    """``A^(alpha g alpha^-1) = alpha A^g alpha^-1`` for every unit and grouplike."""
    U, gl = _pairs(C, budget)
    A = C.algebra
    table = conjugation_table(C, budget)
    for i, g in enumerate(gl):
        B = coinvariants(C, g)
        for u, alpha in enumerate(U.elements):
            h = gl[int(table[u, i])]
            if coinvariants(C, h) != conjugate_subring(A, U.elements[U.inv[u]], B):
                return False
    return True


def check_triangle(C: Coring, budget=None) -> bool:
    """``can_(alpha g alpha^-1) o psi_(alpha^-1) = can_g``."""
    U, gl = _pairs(C, budget)
    A = C.algebra
    table = conjugation_table(C, budget)
    for i, g in enumerate(gl):
        K = canonical_map(C, g).matrix
        B = coinvariants(C, g)
        for u in range(len(U)):
            h = gl[int(table[u, i])]
            psi = psi_matrix(A, B, U.elements[U.inv[u]]).matrix
            if not np.array_equal(la.dot(canonical_map(C, h).matrix, psi, C.p), K):
                return False
            if is_galois(C, g) != is_galois(C, h):
                return False
    return True


def check_automorphisms_fix_coinvariants(C: Coring, budget=None) -> bool:
    """``A^g = A^phi(g)`` and ``can_phi(g) = phi o can_g``."""
    gl = grouplikes(C, budget)
    auts = coring_automorphisms(C, budget)
    table = aut_table(C, budget)
    for k, phi in enumerate(auts):
        for i, g in enumerate(gl):
            h = gl[int(table[k, i])]
            if coinvariants(C, h) != coinvariants(C, g):
                return False
            if not np.array_equal(canonical_map(C, h).matrix, la.dot(phi.matrix, canonical_map(C, g).matrix, C.p)):
                return False
            if is_galois(C, g) != is_galois(C, h):
                return False
    return True


def check_same_coinvariants_iff_aut_related(C: Coring, budget=None) -> bool:
    """For Galois g, h: ``A^g = A^h`` iff some automorphism sends h to g."""
    gl = grouplikes(C, budget)
    table = aut_table(C, budget)
    gal = [i for i, g in enumerate(gl) if is_galois(C, g)]
    for i in gal:
        for j in gal:
            same = coinvariants(C, gl[i]) == coinvariants(C, gl[j])
            if same != bool(np.any(table[:, j] == i)):
                return False
    return True


def check_normality(C: Coring, budget=None) -> bool:
    return all(d0(C, g, budget).normality_witness(unit_stabilizer(C, g, budget)) is None for g in grouplikes(C, budget))


def check_stabilizer_conjugation(C: Coring, budget=None) -> bool:
    """``beta U(A)_g beta^-1 = U(A)_(beta g beta^-1)``."""
    U, gl = _pairs(C, budget)
    table = conjugation_table(C, budget)
    for i, g in enumerate(gl):
        stab = set(unit_stabilizer(C, g, budget))
        for b in range(len(U)):
            conj = {U.mul(U.mul(b, s), U.inv[b]) for s in stab}
            if conj != set(unit_stabilizer(C, gl[int(table[b, i])], budget)):
                return False
    return True


def check_phi_kernel(C: Coring, budget=None) -> bool:
    return all(phi_g(C, g, budget).kernel == d0(C, g, budget) for g in grouplikes(C, budget) if is_galois(C, g))


def check_actions_commute(C: Coring, budget=None) -> bool:
    """``phi(alpha g alpha^-1) = alpha phi(g) alpha^-1``."""
    ctab = conjugation_table(C, budget)
    atab = aut_table(C, budget)
    return bool(np.array_equal(atab[:, ctab].transpose(1, 0, 2), ctab[:, atab]))


def check_psi_antihomomorphism(C: Coring, budget=None) -> bool:
    """``psi_(alpha beta) = psi_beta o psi_alpha`` on ``A (x)_(A^g) A``."""
    U, gl = _pairs(C, budget)
    A = C.algebra
    for B in {coinvariants(C, g) for g in gl}:
        for a, alpha in enumerate(U.elements):
            first = psi_matrix(A, B, alpha)
            mid = conjugate_subring(A, alpha, B)
            for b, beta in enumerate(U.elements):
                second = psi_matrix(A, mid, beta).matrix
                both = psi_matrix(A, B, U.elements[U.mul(a, b)]).matrix
                if not np.array_equal(la.dot(second, first.matrix, C.p), both):
                    return False
    return True


def check_n1_surjects(C: Coring, budget=None) -> bool:
    for g in grouplikes(C, budget):
        fine, surj = n1(C, g, budget)
        coarse = d1(C, g, budget)
        if surj is None or set(surj) != set(range(len(coarse))):
            return False
        if surj[fine.distinguished] != coarse.distinguished:
            return False
    return True


def check_grouplike_oracle(C: Coring, budget=None) -> bool | None:
    if C.p**C.dim > ORACLE_LIMIT:
        return None
    return [g.coords for g in grouplikes(C, budget)] == [g.coords for g in grouplikes_brute_force(C, budget)]


def check_orbit_oracle(C: Coring, budget=None) -> bool:
    gl = grouplikes(C, budget)
    for g in gl:
        if d1(C, g, budget) != d1(C, g, budget, full=True):
            return False
        if n1(C, g, budget)[0] != n1(C, g, budget, full=True)[0]:
            return False
        if aut_orbits(C, g, budget) != aut_orbits(C, g, budget, full=True):
            return False
    return True


def check_orbit_stabilizer(C: Coring, budget=None) -> bool:
    """D1 orbits partition Gl(C) and their sizes divide |U(A)|."""
    D = d1(C, None, budget)
    if isinstance(D, EmptyGrouplikeSet):
        return True
    U = C.algebra.units(budget)
    return sum(D.sizes()) == len(grouplikes(C, budget)) and all(len(U) % s == 0 for s in D.sizes())


def check_galois_union_of_aut_orbits(C: Coring, budget=None) -> bool:
    O = aut_orbits(C, None, budget)
    if isinstance(O, EmptyGrouplikeSet):
        return True
    return all(len({is_galois(C, as_grouplike(C, np.array(h))) for h in orb}) == 1 for orb in O.orbits)


PROPERTIES = (
    ("conjugate coinvariants", check_conjugate_coinvariants),
    ("triangle", check_triangle),
    ("automorphisms fix coinvariants and canonical maps", check_automorphisms_fix_coinvariants),
    ("equal coinvariants iff automorphism related", check_same_coinvariants_iff_aut_related),
    ("U(A^g) normal in U(A)_g", check_normality),
    ("stabilizer conjugation", check_stabilizer_conjugation),
    ("kernel of phi_g", check_phi_kernel),
    ("unit and automorphism actions commute", check_actions_commute),
    ("psi anti-homomorphism", check_psi_antihomomorphism),
    ("N1 surjects onto D1", check_n1_surjects),
    ("grouplike search matches brute force", check_grouplike_oracle),
    ("orbit search matches full product", check_orbit_oracle),
    ("orbit sizes divide |U(A)|", check_orbit_stabilizer),
    ("Gal(C) is a union of Aut orbits", check_galois_union_of_aut_orbits),
)


def property_suite(C: Coring, budget: int | None = None) -> Report:
    rep = Report("properties")
    gl = grouplikes(C, budget)
    rep.data["grouplikes"] = len(gl)
    if not gl:
        rep.skip("grouplike properties", reason="Gl(C) is empty")
        return rep
    for name, fn in PROPERTIES:
        ok = fn(C, budget)
        if ok is None:
            rep.skip(name, reason="carrier too large for the oracle")
        else:
            rep.check(name, ok)
    for g in gl:
        sub = simple_cosemisimple_check(C, g, budget)
        if sub.verdict == "not-applicable":
            continue
        rep.check(f"division-ring case at {','.join(map(str, g.coords))}", sub.passed)
    return rep

