from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from coring_lab import algebra as alg
from coring_lab import constructions as cons
from coring_lab import coring as cor
from coring_lab import modules as mod
from coring_lab.errors import NotACocycle, NotAComoduleAlgebra, NotAHopfAlgebra

C3_INNER = [
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    [[0, 1, 0, 1], [1, 1, 1, 1], [0, 1, 0, 0], [1, 1, 0, 0]],
    [[0, 0, 1, 1], [0, 0, 1, 0], [1, 1, 1, 1], [1, 0, 1, 0]],
]


def c3_inner_action():
    return alg.build_action(alg.cyclic_group(3), alg.matrix_algebra(2, 2), C3_INNER)


def s3_sign_action():
    F4 = alg.finite_field(2, 2)
    S3 = alg.symmetric_group(3)
    return alg.pullback_action(alg.frobenius_action(F4, alg.cyclic_group(2)), S3, alg.sign_hom(S3))


# ---------------------------------------------------------------- Sweedler and psi


def test_sweedler_over_whole_ring_is_trivial(F4):
    C, g = cons.sweedler(F4, alg.whole_ring(F4))
    assert C.dim == 2 and [h.coords for h in cor.grouplikes(C)] == [g.coords]


def test_sweedler_coinvariants_are_the_base(F4):
    M2 = alg.matrix_algebra(2, 2)
    D = alg.subring_closure(M2, [[1, 0, 0, 0]])
    for A, B in ((F4, alg.prime_subring(F4)), (M2, alg.prime_subring(M2)), (M2, D)):
        C, one = cons.sweedler(A, B)
        assert cor.coinvariants(C, one) == B


def test_psi_identity_and_iso(F4):
    B = alg.prime_subring(F4)
    assert np.array_equal(cons.psi_matrix(F4, B, F4.unit).matrix, np.eye(4, dtype=np.int64))
    M2 = alg.matrix_algebra(2, 2)
    D = alg.subring_closure(M2, [[1, 0, 0, 0]])
    f = cons.psi_iso(M2, D, [1, 1, 0, 1])
    assert mod.is_bijective(f)


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_psi_composes_contravariantly(data):
    M2 = alg.matrix_algebra(2, 2)
    D = alg.subring_closure(M2, [[1, 0, 0, 0]])
    U = M2.units()
    a = U.elements[data.draw(st.integers(0, len(U) - 1))]
    b = U.elements[data.draw(st.integers(0, len(U) - 1))]
    first = cons.psi_matrix(M2, D, a).matrix
    second = cons.psi_matrix(M2, alg.conjugate_subring(M2, a, D), b).matrix
    both = cons.psi_matrix(M2, D, M2.mul(a, b)).matrix
    assert np.array_equal(second @ first % 2, both)


# ---------------------------------------------------------------- crossed products


def test_crossed_product(frobenius_c2):
    R = cons.crossed_product(frobenius_c2)
    assert R.dim == 4 and R.p == 2
    xs, emb = cons.crossed_embeddings(frobenius_c2)
    sigma = xs[1]
    assert alg.key(R.mul(sigma, sigma)) == alg.key(xs[0]) == alg.key(R.unit)
    triv = alg.trivial_action(alg.trivial_group(), frobenius_c2.algebra)
    assert cons.crossed_product(triv).dim == 2


@pytest.mark.parametrize("make", [lambda: alg.frobenius_action(alg.finite_field(2, 2), alg.cyclic_group(2)), c3_inner_action, s3_sign_action])
def test_crossed_product_commutation(make):
    action = make()
    R = cons.crossed_product(action)
    xs, emb = cons.crossed_embeddings(action)
    A = action.algebra
    for i, x in itertools.product(range(A.dim), range(action.group.order)):
        a = emb @ A.basis(i)
        ax = emb @ action.apply(x, A.basis(i))
        assert np.array_equal(R.mul(a, xs[x]), R.mul(xs[x], ax))


# ---------------------------------------------------------------- dual coring and cocycles


def test_dual_coring_trace(dual_f4, frobenius_c2):
    C, t = dual_f4
    assert C.dim == 4 and t.coords == (1, 0, 1, 0)
    assert cor.coinvariants(C, t) == alg.fixed_subring(frobenius_c2)
    assert cons.theta(C, t).is_trivial()
    triv = alg.trivial_action(alg.trivial_group(), alg.finite_field(2, 2))
    T, t0 = cons.dual_coring(triv)
    assert [h.coords for h in cor.grouplikes(T)] == [t0.coords]


def test_upsilon_is_an_isomorphism(dual_f4):
    C, _ = dual_f4
    cons.check_upsilon(C)
    cons.check_upsilon(cons.dual_coring(c3_inner_action())[0])


def test_cocycle_w(frobenius_c2, dual_f4):
    C, _ = dual_f4
    f = cons.build_cocycle(frobenius_c2, [[1, 0], [0, 1]])
    assert cor.as_grouplike(C, cons.theta_inv(C, f).coords)
    with pytest.raises(NotACocycle):
        cons.build_cocycle(frobenius_c2, [[0, 1], [0, 1]])


def test_z1_hilbert90(frobenius_c2):
    expected = sorted(tuple(map(tuple, c)) for c in oracles.c2_frobenius_cocycles())
    assert [c.values for c in cons.z1(frobenius_c2)] == expected
    assert [c.values for c in cons.z1_brute_force(frobenius_c2)] == expected
    H = cons.h1(frobenius_c2)
    assert len(H) == 1 and H.is_trivial()
    for f, h in itertools.product(cons.z1(frobenius_c2), repeat=2):
        assert cons.are_cohomologous(f, h) == oracles.c2_frobenius_cohomologous(
            dict(enumerate(f.values)), dict(enumerate(h.values))
        )


def test_z1_trivial_group(F4):
    triv = alg.trivial_action(alg.trivial_group(), F4)
    assert len(cons.z1(triv)) == 1 and len(cons.h1(triv)) == 1


@pytest.mark.parametrize("make", [s3_sign_action, c3_inner_action])
def test_z1_matches_brute_force_nonabelian(make):
    action = make()
    assert [c.values for c in cons.z1(action)] == [c.values for c in cons.z1_brute_force(action)]


def test_nonabelian_cocycle_counts():
    s3 = s3_sign_action()
    assert len(cons.z1(s3)) == 9 and sorted(cons.h1(s3).sizes()) == [3, 3, 3]
    c3 = c3_inner_action()
    assert len(cons.z1(c3)) == 3 and sorted(cons.h1(c3).sizes()) == [1, 2]


@pytest.mark.parametrize("make", [lambda: alg.frobenius_action(alg.finite_field(2, 2), alg.cyclic_group(2)), c3_inner_action])
def test_theta_round_trip(make):
    action = make()
    C, _ = cons.dual_coring(action)
    cocycles = cons.z1(action)
    gl = cor.grouplikes(C)
    assert len(gl) == len(cocycles)
    for f in cocycles:
        assert cons.theta(C, cons.theta_inv(C, f)).values == f.values
    for h in gl:
        assert cons.theta_inv(C, cons.theta(C, h)).coords == h.coords


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_twisting_preserves_cocycles(data):
    action = c3_inner_action()
    cocycles = cons.z1(action)
    f = cocycles[data.draw(st.integers(0, len(cocycles) - 1))]
    U = action.algebra.units()
    a = U.elements[data.draw(st.integers(0, len(U) - 1))]
    g = cons.twist(f, a)
    assert cons.cocycle_defect(action, g.values) is None
    assert cons.are_cohomologous(g, f) and cons.are_cohomologous(f, g)


def test_h0(frobenius_c2):
    assert cons.h0(frobenius_c2).keys() == [(1, 0)]
    # the centralizer of an order-3 element in GL2(F2) is F2[u]^x, of order 3
    assert len(cons.h0(c3_inner_action())) == 3


# ---------------------------------------------------------------- Hopf and comodule algebras


def test_hopf_validation(KC2):
    H = cons.hopf_group_algebra(3, alg.cyclic_group(2))
    bad = H.antipode.copy()
    bad[0, 0] = 2
    with pytest.raises(NotAHopfAlgebra):
        cons.build_hopf(H.algebra, H.comul, H.counit, bad)
    with pytest.raises(NotAHopfAlgebra):
        cons.build_hopf(H.algebra, H.comul, [1, 0], H.antipode)


def test_comodule_algebra_validation(hopf_c2):
    A = hopf_c2.algebra
    with pytest.raises(NotAComoduleAlgebra):
        cons.build_comodule_algebra(A, hopf_c2, np.eye(4, 2, dtype=int))


def test_trivial_hopf_gives_trivial_coring():
    C, g = cons.coalgebra_coring(cons.trivial_hopf(3))
    assert C.dim == 1 and [h.coords for h in cor.grouplikes(C)] == [g.coords] == [(1,)]


def test_hopf_coring_grouplikes_match_oracle(kc2_coring):
    C, one = kc2_coring
    assert one.coords == (1, 0, 0, 0)
    found = [g.coords for g in cor.grouplikes(C)]
    assert found == oracles.hopf_c2_grouplikes() == oracles.closed_form_family()


def test_transported_group_law(kc2_coring):
    C, one = kc2_coring
    mul, ok = cons.conjugation_product(C, one)
    g = (0, 1, 0, 0)
    assert ok and mul(g, g) == one.coords and mul(one.coords, g) == g


def test_gl_embedding(hopf_c2):
    rep = cons.gl_embedding_check(hopf_c2)
    assert rep.passed, rep.as_dict()
    assert rep.data["images"] == [[0, 1, 0, 0], [1, 0, 0, 0]]
    triv = cons.gl_embedding_check(cons.hopf_group_algebra(2, alg.trivial_group()))
    assert triv.passed and triv.data["images"] == [[1]]


def test_direct_sum_and_coalgebra_coring():
    C, _ = cons.direct_sum_coring(alg.prime_field(3), copies=3)
    assert C.dim == 3 and len(cor.grouplikes(C)) == 3
    H = cons.hopf_group_algebra(2, alg.cyclic_group(3))
    Hc, _ = cons.coalgebra_coring(H)
    assert len(cor.grouplikes(Hc)) == 3
