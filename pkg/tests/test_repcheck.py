import cmath
import math

import numpy as np
import pytest

from mdlab.params import OmegaParams
from mdlab.repcheck import (
    ALL_RELATIONS,
    RepresentationError,
    ShiftOperator,
    TestFunction,
    apply_operator,
    build_generator,
    compose,
    gz_indices,
    relation_index_pairs,
    sample_point,
    verify_all,
    verify_relation,
)

P = OmegaParams(0.83, 1.0 / 0.83)


def const_one(_):
    return 1.0


def test_identity_operator():
    g = {(1, 1): 0.4 + 0j, (2, 1): 1.0 + 0j, (2, 2): -0.6 + 0j}
    I = ShiftOperator.identity()
    f = TestFunction({(1, 1): 0.3 + 0.1j}, {(1, 1): 0.02})
    assert apply_operator(I, f, g, P) == pytest.approx(f(g))


def test_k1_multiplication():
    g = {(1, 1): 0.3 + 0j, (2, 1): 1.0 + 0j, (2, 2): -0.6 + 0j}
    K1 = build_generator("K", 1, 2, P)
    assert apply_operator(K1, const_one, g, P) == pytest.approx(
        cmath.exp(math.pi * 0.3 / P.omega2)
    )
    tK1 = build_generator("tK", 1, 2, P)
    assert apply_operator(tK1, const_one, g, P) == pytest.approx(
        cmath.exp(math.pi * 0.3 / P.omega1)
    )


def test_e_raise_hand_evaluation():
    # N = 2, single term, empty denominator product: independent hand oracle
    g = {(1, 1): 0.3 + 0j, (2, 1): 0.5 + 0j, (2, 2): -0.7 + 0j}
    E = build_generator("E_raise", 1, 2, P)
    s = math.pi / P.omega2
    hs = 0.5j * (P.omega1 + P.omega2)
    expected = (
        2.0
        / (P.q - 1.0 / P.q)
        * cmath.sinh(s * (0.3 - 0.5 - hs))
        * cmath.sinh(s * (0.3 + 0.7 - hs))
    )
    assert apply_operator(E, const_one, g, P) == pytest.approx(expected)


def test_shift_bookkeeping():
    for n, kind, pair in ((1, "E_raise", (1, 0)), (2, "E_raise", (1, 0)),
                          (1, "tE_raise", (0, 1)), (2, "tE_lower", (0, -1))):
        op = build_generator(kind, n, 3, P)
        assert len(op.terms) == n
        for t in op.terms:
            assert len(t.shift) == 1
            ((row, _), ab), = t.shift.items()
            assert row == n and ab == pair


def test_k_has_no_shift():
    for n in (1, 2, 3):
        op = build_generator("K", n, 3, P)
        assert len(op.terms) == 1 and not op.terms[0].shift


def test_index_guards():
    with pytest.raises(RepresentationError):
        build_generator("E_raise", 2, 2, P)
    with pytest.raises(RepresentationError):
        build_generator("K", 4, 3, P)
    with pytest.raises(RepresentationError):
        build_generator("nonsense", 1, 2, P)


def test_compose_k_operators_commute():
    g = sample_point(3, np.random.default_rng(0))
    f = TestFunction.random(3, np.random.default_rng(1))
    K1, K2 = build_generator("K", 1, 3, P), build_generator("K", 2, 3, P)
    a = apply_operator(compose(K1, K2, P), f, g, P)
    b = apply_operator(compose(K2, K1, P), f, g, P)
    assert a == pytest.approx(b)


def test_compose_associativity():
    rng = np.random.default_rng(7)
    g = sample_point(3, rng)
    f = TestFunction.random(3, rng)
    A = build_generator("E_raise", 1, 3, P)
    B = build_generator("E_lower", 2, 3, P)
    C = build_generator("K", 2, 3, P)
    left = apply_operator(compose(compose(A, B, P), C, P), f, g, P)
    right = apply_operator(compose(A, compose(B, C, P), P), f, g, P)
    assert abs(left - right) <= 1e-12 * max(abs(left), 1.0)


def test_k_raise_q_commutation_pointwise():
    # K_1 E_{1,2} = q E_{1,2} K_1 directly at a point
    rng = np.random.default_rng(3)
    g = sample_point(2, rng)
    f = TestFunction.random(2, rng)
    K1 = build_generator("K", 1, 2, P)
    E = build_generator("E_raise", 1, 2, P)
    lhs = apply_operator(compose(K1, E, P), f, g, P)
    rhs = P.q * apply_operator(compose(E, K1, P), f, g, P)
    assert lhs == pytest.approx(rhs)


def test_sample_point_separation():
    rng = np.random.default_rng(11)
    for _ in range(20):
        g = sample_point(3, rng)
        assert set(g) == set(gz_indices(3))
        for n in (2, 3):
            xs = sorted(g[(n, j)].real for j in range(1, n + 1))
            assert all(b - a >= 0.1 for a, b in zip(xs, xs[1:]))


def test_relation_catalogue_coverage():
    assert len(ALL_RELATIONS) == 22
    # every cross-relation exercises all its delta-coincidence cases at N = 3
    pairs = relation_index_pairs("cross_raise_traise", 3)
    assert set(pairs) == {(1, 1), (1, 2), (2, 1), (2, 2)}
    pairs = relation_index_pairs("cross_raise_tk", 3)
    assert set(pairs) == {(n, m) for n in (1, 2) for m in (1, 2, 3)}
    # Serre relations need N = 3 and run both index orders
    assert relation_index_pairs("serre_raise", 2) == []
    assert set(relation_index_pairs("serre_raise", 3)) == {(1, 2), (2, 1)}


def test_single_relations():
    assert verify_relation("ef_commutator", 2, P, trials=5).passed
    assert verify_relation("serre_raise", 3, P, trials=3).passed
    assert verify_relation("cross_raise_traise", 3, P, trials=3).passed
    assert verify_relation("tilde_ef_commutator", 2, P, trials=5).passed


def test_verify_all_n2_n3():
    for N in (2, 3):
        reports = verify_all(N, P, trials=4, seed=123)
        assert all(r.passed for r in reports)
        assert max(r.rel_error for r in reports) < 1e-10


def test_seed_determinism():
    a = verify_all(2, P, trials=4, seed=9)
    b = verify_all(2, P, trials=4, seed=9)
    assert [r.rel_error for r in a] == [r.rel_error for r in b]
    c = verify_all(2, P, trials=4, seed=10)
    assert [r.rel_error for r in a] != [r.rel_error for r in c]


def test_unknown_relation():
    with pytest.raises(RepresentationError):
        verify_relation("no_such_relation", 2, P)
