from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import named_coring
from coring_lab import algebra as alg
from coring_lab import coring as cor
from coring_lab import descent as ds
from coring_lab.errors import NotGalois
from coring_lab.orbits import orbits_bfs, orbits_full, refines


def test_sweedler_f4_descent(F4, sweedler_f4):
    C, one = sweedler_f4
    assert ds.d0(C, one).keys() == [(1, 0)]
    assert len(ds.unit_stabilizer(C, one)) == 3
    D = ds.d1(C, one)
    assert D.is_trivial() and D.sizes() == [3]
    N, surj = ds.n1(C, one)
    assert N == D and list(surj) == [0]
    assert ds.aut_orbits(C, one).sizes() == [3]


def test_phi_g_on_w(F4, sweedler_f4):
    C, one = sweedler_f4
    phi = ds.phi_g(C, one)
    assert phi.homomorphism
    U = F4.units()
    w = U.find([0, 1])
    k = phi(w)
    gl = [g.coords for g in cor.grouplikes(C)]
    image = cor.grouplikes(C)[int(ds.aut_table(C)[k, gl.index(one.coords)])]
    # phi_g(w) sends 1 (x) 1 to w^-1 (x) w = w^2 (x) w
    assert image.coords == (0, 1, 0, 1)
    assert phi.kernel == ds.d0(C, one)


def test_trivial_coring_descent():
    A = alg.prime_field(3)
    C = cor.trivial_coring(A)
    g = cor.grouplikes(C)[0]
    assert len(ds.d0(C, g)) == 2 == len(ds.unit_stabilizer(C, g))
    assert len(ds.d1(C, g)) == 1
    assert ds.exact_sequence_report(C, g).passed
    rep = ds.mejor_check(C, g)
    assert rep.passed and rep.data["galois_order"] == 1


def test_hilbert90_descent(dual_f4):
    C, t = dual_f4
    assert ds.d0(C, t).keys() == [(1, 0)]
    D = ds.d1(C, t)
    assert D.is_trivial() and D.sizes() == [3]
    rep = ds.exact_sequence_report(C, t)
    assert rep.passed
    assert rep.data["automorphisms"] * rep.data["units_of_coinvariants"] == rep.data["stabilizer"]


def test_matrix_over_diagonal():
    C, one = named_coring("M2diag")
    assert ds.d1(C, one).sizes() == [1, 6, 1]
    N, surj = ds.n1(C, one)
    assert N.sizes() == [1, 2, 2, 2, 1]
    assert refines(N, ds.d1(C, one)) == list(surj)
    rep = ds.mejor_check(C, one)
    assert rep.data["conditions"] == {"i": False, "ii": False, "iii": False}
    assert rep.clause("conditions equivalent").verdict == "pass"
    assert ds.exact_sequence_report(C, one).passed


def test_galois_groups():
    for name, order in (("F4", 3), ("M2", 6), ("F9", 4), ("T2", 2), ("KC2", 2)):
        C, g = named_coring(name)
        rep = ds.mejor_check(C, g)
        assert rep.passed, (name, rep.as_dict())
        assert rep.data["galois_order"] == order


def test_galois_group_table_is_a_group():
    C, g = named_coring("M2")
    table = np.array(ds.mejor_check(C, g).data["galois_table"])
    n = len(table)
    assert all(sorted(row) == list(range(n)) for row in table)
    assert any(list(table[e]) == list(range(n)) and list(table[:, e]) == list(range(n)) for e in range(n))
    for a in range(n):
        for b in range(n):
            for c in range(n):
                assert table[table[a, b], c] == table[a, table[b, c]]


def test_non_galois_grouplike():
    C, g = named_coring("sum")
    with pytest.raises(NotGalois):
        ds.phi_g(C, g)
    assert ds.mejor_check(C, g).verdict == "not-applicable"
    rep = ds.exact_sequence_report(C, g)
    assert rep.passed and rep.clause("phi_g").verdict == "not-applicable"


def test_simple_cosemisimple():
    for name in ("F4", "F9", "h90"):
        C, g = named_coring(name)
        assert ds.simple_cosemisimple_check(C, g).passed
    C, g = named_coring("M2")
    assert ds.simple_cosemisimple_check(C, g).passed  # A^g = F2 is a field
    C, g = named_coring("M2diag")
    assert ds.simple_cosemisimple_check(C, g).verdict == "not-applicable"


def test_theta_and_clasico(dual_f4):
    C, _ = dual_f4
    th = ds.theta_check(C)
    assert th.passed and th.data == {"grouplikes": 3, "cocycles": 3}
    cl = ds.clasico_check(C)
    assert cl.passed and cl.data["t_galois"] and cl.data["H1"] == 1


def test_empty_grouplike_set_is_falsy(sweedler_f4):
    C, _ = sweedler_f4
    e = ds.EmptyGrouplikeSet(C)
    assert not e and e.as_dict()


@given(st.sampled_from(["F4", "M2", "M2diag", "KC2", "h90", "T2"]), st.data())
@settings(max_examples=30, deadline=None)
def test_stabilizer_and_kernel_properties(name, data):
    C, _ = named_coring(name)
    gl = cor.grouplikes(C)
    g = gl[data.draw(st.integers(0, len(gl) - 1))]
    inner, stab = ds.d0(C, g), ds.unit_stabilizer(C, g)
    assert inner.is_subgroup() and stab.is_subgroup()
    assert set(inner) <= set(stab)
    assert inner.normality_witness(stab) is None
    if cor.is_galois(C, g):
        phi = ds.phi_g(C, g)
        assert phi.homomorphism and phi.kernel == inner
    # every D1 orbit is a union of N1 orbits
    N, surj = ds.n1(C, g)
    D = ds.d1(C, g)
    for k, orb in enumerate(N.orbits):
        assert set(orb) <= set(D.orbits[surj[k]])


@given(st.integers(2, 12), st.data())
@settings(max_examples=40, deadline=None)
def test_orbit_bfs_matches_full_product(n, data):
    # Z/n acting on itself by translation by a chosen subgroup
    step = data.draw(st.integers(1, n))
    gens = [step % n]
    group = sorted({(k * step) % n for k in range(n)})
    base = data.draw(st.integers(0, n - 1))
    pts = list(range(n))
    a = orbits_bfs(pts, gens, lambda s, x: (x + s) % n, base)
    b = orbits_full(pts, group, lambda s, x: (x + s) % n, base)
    assert a == b
    assert sum(a.sizes()) == n and base in a.base_orbit
