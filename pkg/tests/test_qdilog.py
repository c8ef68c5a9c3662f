import cmath
import math

import numpy as np
import pytest

from mdlab.params import BParam
from mdlab.qdilog import (
    PoleError,
    check_asymptotics,
    classify,
    gb,
    gb_q_exponential,
    log_gb_strip,
    residue_coeff,
    residue_limit,
    shift_product,
)
from mdlab.quadrature import QuadratureConfig

P = BParam(0.83)
CFG = QuadratureConfig()


def test_strip_value_against_independent_quadrature():
    # Independent oracle: evaluate the defining integral with mpmath's
    # adaptive quadrature on the same elevated contour.
    import mpmath as mp

    mp.mp.dps = 30
    z = mp.mpc(0.9, 0.2)
    b = mp.mpf(P.b)
    Q = b + 1 / b
    eps = mp.mpf(0.25)

    def integrand(u):
        t = u + 1j * eps
        return mp.e ** (z * t) / ((1 - mp.e ** (b * t)) * (1 - mp.e ** (t / b)) * t)

    integral = mp.quad(integrand, [-60, 0, 60])
    zeta = mp.e ** (1j * mp.pi / 4 + 1j * mp.pi * (b**2 + b**-2) / 12)
    expected = mp.conj(zeta) * mp.e ** (-integral)
    ours = gb(complex(0.9, 0.2), P, CFG)
    assert abs(ours - complex(expected)) < 1e-12


def test_functional_equation_single_shifts():
    for z in (0.4 + 0.3j, 1.1 - 0.5j, 0.9):
        z = complex(z)
        for s in (P.b, 1.0 / P.b):
            lhs = gb(z + s, P, CFG)
            rhs = (1.0 - cmath.exp(2j * math.pi * s * z)) * gb(z, P, CFG)
            assert abs(lhs - rhs) / abs(rhs) < 1e-12


def test_far_shift_reduction():
    z = 5.3 + 0.2j
    lhs = gb(z, P, CFG)
    # walk down by hand with the shift equation from inside the strip
    w = z
    mult = 1.0 + 0.0j
    while w.real > P.Q - 0.2:
        w -= P.b
        mult *= 1.0 - cmath.exp(2j * math.pi * P.b * w)
    rhs = mult * gb(w, P, CFG)
    assert abs(lhs - rhs) / abs(rhs) < 1e-11


def test_reflection():
    for z in (0.3 + 0.1j, 0.8 - 0.4j, 1.2 + 0.7j):
        z = complex(z)
        lhs = gb(z, P, CFG) * gb(P.Q - z, P, CFG)
        rhs = cmath.exp(1j * math.pi * z * (z - P.Q))
        assert abs(lhs - rhs) < 1e-12


def test_special_values():
    assert abs(gb(P.b, P, CFG) - (-1j * P.b)) < 1e-13
    assert abs(gb(1.0 / P.b, P, CFG) - (-1j / P.b)) < 1e-13
    assert gb(complex(P.Q), P, CFG) == 0.0


def test_classification():
    assert classify(complex(0.0), P).kind == "pole"
    c = classify(-2 * P.b - 1 / P.b, P)
    assert (c.kind, c.n1, c.n2) == ("pole", 2, 1)
    c = classify(P.Q + P.b, P)
    assert (c.kind, c.n1, c.n2) == ("zero", 1, 0)
    assert classify(0.5 + 0.0j, P).kind == "regular"
    assert classify(complex(0.0, 1.0), P).kind == "regular"


def test_pole_raises():
    with pytest.raises(PoleError):
        gb(complex(0.0), P, CFG)
    with pytest.raises(PoleError):
        gb(-P.b, P, CFG)


def test_zero_lattice_exact():
    zs = np.array([P.Q, P.Q + P.b, P.Q + P.b + 1 / P.b], dtype=complex)
    vals = gb(zs, P, CFG)
    assert np.all(vals == 0.0)


def test_batch_matches_scalar():
    zs = np.array([0.4 + 0.3j, 1.0 - 0.2j, 2.5 + 1.0j, -0.3 + 0.4j])
    batch = gb(zs, P, CFG)
    for zi, vi in zip(zs, batch):
        assert abs(gb(complex(zi), P, CFG) - vi) < 1e-13 * abs(vi)


def test_strip_guard():
    with pytest.raises(ValueError):
        log_gb_strip(complex(-0.5, 0.0), P, CFG)


def test_residues_match_closed_form():
    for n1 in range(3):
        for n2 in range(3):
            closed = residue_coeff(n1, n2, P)
            numeric = residue_limit(n1, n2, P, CFG)
            assert abs(numeric - closed) / abs(closed) < 1e-4


def test_residue_near_degenerate_spacing():
    # b = 0.7: the poles at -3b and -b-1/b are only ~0.03 apart; the
    # sampling radius must shrink accordingly.
    p = BParam(0.7)
    closed = residue_coeff(2, 0, p)
    numeric = residue_limit(2, 0, p, CFG)
    assert abs(numeric - closed) / abs(closed) < 1e-4


def test_shift_product_vs_direct():
    z = 0.37 + 0.21j
    for n1, n2 in ((1, 0), (0, 2), (2, 3)):
        lhs = gb(z + n1 * P.b + n2 / P.b, P, CFG)
        rhs = shift_product(z, n1, n2, P) * gb(z, P, CFG)
        assert abs(lhs - rhs) / abs(lhs) < 1e-11


def test_asymptotics():
    for T in (8.0, 12.0):
        rep = check_asymptotics(P.Q / 2, T, P, CFG)
        assert rep.passed and rep.rel_error < 1e-9


def test_q_exponential_functional_equation():
    # g_b(q^{-1} x) = (1 + x) g_b(q x)
    for x in (0.4, 0.9 + 0.3j, 2.0 - 1.0j):
        x = complex(x)
        lhs = gb_q_exponential(x / P.q, P, CFG)
        rhs = (1.0 + x) * gb_q_exponential(x * P.q, P, CFG)
        assert abs(lhs - rhs) / abs(rhs) < 1e-12


def test_q_exponential_branch_cut():
    with pytest.raises(ValueError):
        gb_q_exponential(-1.0, P, CFG)
