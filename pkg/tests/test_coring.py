from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from helpers import named_coring
from coring_lab import algebra as alg
from coring_lab import constructions as cons
from coring_lab import coring as cor
from coring_lab import modules as mod
from coring_lab.errors import CounitFails, NotAGrouplike, NotCoassociative


def coords(gl):
    return [g.coords for g in gl]


def test_trivial_coring():
    for A in (alg.prime_field(2), alg.finite_field(2, 2), alg.matrix_algebra(2, 2)):
        C = cor.trivial_coring(A)
        assert coords(cor.grouplikes(C)) == [alg.key(A.unit)]
        g = cor.grouplikes(C)[0]
        assert cor.coinvariants(C, g) == alg.whole_ring(A)
        assert cor.is_galois(C, g)
    assert len(cor.coring_automorphisms(cor.trivial_coring(alg.prime_field(3)))) == 1


def test_zero_counit_is_rejected(F4):
    C = cor.trivial_coring(F4)
    with pytest.raises(CounitFails):
        cor.build_coring(C.carrier, C.comul, np.zeros((2, 2), dtype=int))


def test_perturbed_comultiplication_is_rejected(sweedler_f4):
    C, _ = sweedler_f4
    D = C.comul.matrix.copy()
    D[0, 0] ^= 1
    with pytest.raises(NotCoassociative) as err:
        cor.build_coring(C.carrier, D, C.counit)
    assert err.value.witness is not None


def test_sweedler_grouplikes_match_oracle(F4, sweedler_f4):
    C, one = sweedler_f4
    assert one.coords == (1, 0, 0, 0)
    expected = oracles.sweedler_grouplikes(oracles.f4_basis_mul, 2, 2, (1, 0))
    assert coords(cor.grouplikes(C)) == expected
    assert coords(cor.grouplikes_brute_force(C)) == expected
    # {a (x) a^-1 : a a unit}
    S = cor.sweedler_tensor(F4, alg.prime_subring(F4))
    pure = sorted(alg.key(mod.pure_tensor(S, u, F4.inverse(u))) for u in F4.units().elements)
    assert pure == expected


def test_sweedler_matrix_and_diagonal_grouplikes_match_oracle():
    M2 = alg.matrix_algebra(2, 2)
    C, _ = cons.sweedler(M2, alg.prime_subring(M2))

    def mul(i, j):
        return alg.key(M2.mul(M2.basis(i), M2.basis(j)))

    assert coords(cor.grouplikes(C)) == oracles.sweedler_grouplikes(mul, 4, 2, alg.key(M2.unit))


def test_coinvariants(F4, sweedler_f4, kc2_coring):
    C, one = sweedler_f4
    assert cor.coinvariants(C, one) == alg.prime_subring(F4)
    K, g = kc2_coring
    assert cor.coinvariants(K, g).basis.tolist() == [[1, 0]]


def test_comodule_homs(F4, sweedler_f4):
    C, one = sweedler_f4
    other = (0, 0, 1, 1)  # w (x) w^2
    basis, els = cor.comodule_homs(C, one, other, elements=True)
    # a (1(x)1) = (w (x) w^2) a is solved exactly by F2 w
    assert sorted(map(alg.key, els)) == [(0, 0), (0, 1)]
    assert cor.comodule_homs(C, one, one).tolist() == [[1, 0]]


@given(st.sampled_from(["F4", "M2", "KC2"]), st.data())
@settings(max_examples=25, deadline=None)
def test_invertible_homs_conjugate(name, data):
    C, _ = named_coring(name)
    gl = cor.grouplikes(C)
    g = gl[data.draw(st.integers(0, len(gl) - 1))]
    h = gl[data.draw(st.integers(0, len(gl) - 1))]
    _, els = cor.comodule_homs(C, g, h, elements=True)
    for a in els:
        assert np.array_equal(C.carrier.left(a) @ g.vector % C.p, C.carrier.right(a) @ h.vector % C.p)
        if C.algebra.is_unit(a):
            assert cor.conjugate_grouplike(C, a, g).coords == h.coords


def test_conjugation(F4, sweedler_f4):
    C, one = sweedler_f4
    assert cor.conjugate_grouplike(C, F4.unit, one).coords == one.coords
    assert cor.conjugate_grouplike(C, [0, 1], one).coords == (0, 0, 1, 1)


@given(st.sampled_from(["F4", "F9", "M2", "M2diag", "KC2", "h90"]), st.data())
@settings(max_examples=25, deadline=None)
def test_conjugates_are_grouplike_with_conjugate_coinvariants(name, data):
    C, _ = named_coring(name)
    A = C.algebra
    U = A.units()
    gl = cor.grouplikes(C)
    g = gl[data.draw(st.integers(0, len(gl) - 1))]
    a = U.elements[data.draw(st.integers(0, len(U) - 1))]
    h = cor.conjugate_grouplike(C, a, g)
    assert C.is_grouplike(h.vector)
    assert cor.coinvariants(C, h) == alg.conjugate_subring(A, A.inverse(a), cor.coinvariants(C, g))
    assert cor.is_galois(C, h) == cor.is_galois(C, g)


def test_as_grouplike_rejects(sweedler_f4):
    C, _ = sweedler_f4
    with pytest.raises(NotAGrouplike):
        cor.as_grouplike(C, [1, 1, 0, 0])


def test_canonical_map(F4, sweedler_f4, dual_f4):
    C, one = sweedler_f4
    K = cor.canonical_map(C, one)
    assert K.matrix.shape == (4, 4) and mod.is_bijective(K)
    assert all(cor.is_galois(C, g) for g in cor.grouplikes(C))
    T = cor.trivial_coring(F4)
    assert mod.is_bijective(cor.canonical_map(T, T.algebra.unit))
    R, t = dual_f4
    assert cor.is_galois(R, t)


def test_direct_sum_is_not_galois():
    C, g = cons.direct_sum_coring(alg.prime_field(2))
    assert coords(cor.grouplikes(C)) == [(0, 1), (1, 0)]
    for h in cor.grouplikes(C):
        assert mod.rank(cor.canonical_map(C, h)) == 1
        assert not cor.is_galois(C, h)


def test_sweedler_automorphisms(sweedler_f4):
    C, _ = sweedler_f4
    auts = cor.coring_automorphisms(C)
    assert len(auts) == 3
    gl = set(coords(cor.grouplikes(C)))
    for phi in auts:
        assert {alg.key(phi(g.vector)) for g in cor.grouplikes(C)} == gl


@pytest.mark.parametrize("name", ["F4", "KC2", "h90", "M2diag", "sum", "F9", "M2", "T2"])
def test_automorphisms_match_enumeration(name):
    C, _ = named_coring(name)
    fast = cor.coring_automorphisms(C)
    slow = cor.coring_automorphisms(C, method="enumerate")
    assert [a.key for a in fast.auts] == [a.key for a in slow.auts]
    assert np.array_equal(fast.table, slow.table)
