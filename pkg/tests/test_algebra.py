from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from coring_lab import algebra as alg
from coring_lab.errors import NoUnit, NotAnAutomorphism, NotAssociative, NotAUnit, NotPrime


def test_prime_field_as_algebra():
    F2 = alg.build_algebra(2, 1, [[[1]]], [1])
    assert F2.units().keys() == [(1,)]
    assert F2.is_division_ring()


def test_f4_from_structure_constants():
    # basis {1, w}, w^2 = w + 1
    sc = np.zeros((2, 2, 2), dtype=int)
    sc[0, 0] = [1, 0]
    sc[0, 1] = sc[1, 0] = [0, 1]
    sc[1, 1] = [1, 1]
    A = alg.build_algebra(2, 2, sc, [1, 0])
    for a, b, c in itertools.product(oracles.F4, repeat=3):
        assert alg.key(A.product(a, b, c)) == oracles.f4_mul(oracles.f4_mul(a, b), c)
    assert alg.key(A.mul([0, 1], [0, 1])) == (1, 1)


def test_finite_field_preset_matches_oracle(F4):
    for a, b in itertools.product(oracles.F4, repeat=2):
        assert alg.key(F4.mul(a, b)) == oracles.f4_mul(a, b)


def test_group_algebra_products(KC2):
    one, g = KC2.basis(0), KC2.basis(1)
    assert alg.key(KC2.mul(g, g)) == (1, 0)
    assert not np.any(KC2.mul(one + g, one - g) % 3)
    assert alg.key(KC2.mul(one, [2, 1])) == (2, 1)


def test_unit_inverses(KC2):
    assert alg.key(KC2.inverse(KC2.unit)) == (1, 0)
    assert alg.key(KC2.inverse([0, 1])) == (0, 1)
    with pytest.raises(NotAUnit):
        KC2.inverse([1, 1])


def test_unit_groups(F4, KC2):
    assert len(F4.units()) == 3
    assert KC2.units().keys() == oracles.cn_units(3, 2)
    # k + l g is a unit exactly when k^2 != l^2
    assert KC2.units().keys() == sorted((k, l) for k in range(3) for l in range(3) if (k * k - l * l) % 3)
    assert alg.prime_field(2).units().keys() == [(1,)]


def test_unit_table_is_group_law(KC2):
    U = KC2.units()
    for i, j in itertools.product(range(len(U)), repeat=2):
        assert alg.key(KC2.mul(U.elements[i], U.elements[j])) == alg.key(U.elements[U.table[i, j]])
    assert all(U.table[i, U.inv[i]] == U.identity for i in range(len(U)))


def test_bad_structure_constants():
    with pytest.raises(NotPrime):
        alg.build_algebra(4, 1, [[[1]]], [1])
    with pytest.raises(NoUnit):
        alg.build_algebra(2, 1, [[[1]]], [0])
    bad = np.zeros((2, 2, 2), dtype=int)
    bad[0, 0] = [1, 0]
    bad[0, 1] = bad[1, 0] = [0, 1]
    bad[1, 1] = [0, 0]
    ok = alg.build_algebra(2, 2, bad, [1, 0])  # dual numbers
    assert len(ok.units()) == 2
    nonassoc = np.zeros((3, 3, 3), dtype=int)
    nonassoc[0, :, :] = np.eye(3, dtype=int)
    nonassoc[:, 0, :] = np.eye(3, dtype=int)
    nonassoc[1, 1] = [0, 0, 1]
    nonassoc[1, 2] = [1, 0, 0]
    nonassoc[2, 1] = [0, 0, 0]
    with pytest.raises(NotAssociative) as err:
        alg.build_algebra(2, 3, nonassoc, [1, 0, 0])
    assert err.value.witness is not None


def test_subring_generation(F4, KC2):
    assert alg.subring_closure(F4, []).basis.tolist() == [[1, 0]]
    assert alg.subring_closure(F4, [[0, 1]]).dim == 2
    assert alg.subring_closure(KC2, [[0, 1]]).dim == 2
    M2 = alg.matrix_algebra(2, 2)
    D = alg.subring_closure(M2, [[1, 0, 0, 0]])
    assert D.dim == 2 and D.contains(M2.unit)


def test_conjugate_subring(F4):
    B = alg.prime_subring(F4)
    assert alg.conjugate_subring(F4, F4.unit, B) == B
    for u in F4.units().elements:
        assert alg.conjugate_subring(F4, u, B) == B
    M2 = alg.matrix_algebra(2, 2)
    D = alg.subring_closure(M2, [[1, 0, 0, 0]])
    swap = [0, 1, 1, 0]
    assert alg.conjugate_subring(M2, swap, D) == D
    shear = [1, 1, 0, 1]
    assert alg.conjugate_subring(M2, shear, D) != D


def test_frobenius_action_and_invariants(F4, frobenius_c2):
    for a in oracles.F4:
        assert alg.key(frobenius_c2.apply(1, a)) == oracles.f4_frob(a)
    assert alg.fixed_subring(frobenius_c2).basis.tolist() == [[1, 0]]
    triv = alg.trivial_action(alg.trivial_group(), F4)
    assert alg.fixed_subring(triv) == alg.whole_ring(F4)


def test_action_must_be_by_automorphisms():
    F3 = alg.prime_field(3)
    C2 = alg.cyclic_group(2)
    with pytest.raises(NotAnAutomorphism):
        alg.build_action(C2, F3, [lambda a: a, lambda a: (a + 1) % 3])
    with pytest.raises(NotAnAutomorphism):
        alg.build_action(C2, F3, [[[1]], [[2]]])


def test_right_action_convention():
    S3 = alg.symmetric_group(3)
    act = alg.permutation_action(S3, 3, 2)
    A = act.algebra
    a = A.basis(0)
    for x, y in itertools.product(range(S3.order), repeat=2):
        xy = int(S3.mul[x, y])
        assert np.array_equal(act.apply(xy, a), act.apply(y, act.apply(x, a)))


@given(st.sampled_from(["F4", "F9", "M2", "T2", "KC3"]), st.data())
@settings(max_examples=40, deadline=None)
def test_associativity_on_random_triples(name, data):
    A = {
        "F4": alg.finite_field(2, 2),
        "F9": alg.finite_field(3, 2),
        "M2": alg.matrix_algebra(2, 2),
        "T2": alg.upper_triangular(3, 2),
        "KC3": alg.group_algebra(2, alg.cyclic_group(3)),
    }[name]
    el = st.lists(st.integers(0, A.p - 1), min_size=A.dim, max_size=A.dim)
    a, b, c = (np.array(data.draw(el)) for _ in range(3))
    assert np.array_equal(A.mul(A.mul(a, b), c), A.mul(a, A.mul(b, c)))
    assert np.array_equal(A.mul(A.unit, a), a) and np.array_equal(A.mul(a, A.unit), a)
    if A.is_unit(a):
        assert np.array_equal(A.mul(a, A.inverse(a)), A.unit)


def test_group_presets():
    S3 = alg.symmetric_group(3)
    assert S3.order == 6
    assert sorted(alg.sign_hom(S3)).count(1) == 3
    C4 = alg.cyclic_group(4)
    assert len(C4.generators()) == 1
    assert alg.trivial_group().order == 1
