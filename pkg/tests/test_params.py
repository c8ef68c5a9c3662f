import cmath
import math
import warnings

import pytest

from mdlab.params import BParam, OmegaParams


def test_derived_constants():
    p = BParam(0.83)
    assert p.Q == pytest.approx(0.83 + 1 / 0.83)
    assert p.q == pytest.approx(cmath.exp(1j * math.pi * 0.83**2))
    assert p.qtilde == pytest.approx(cmath.exp(1j * math.pi / 0.83**2))
    assert abs(p.q) == pytest.approx(1.0)
    assert abs(p.zeta_b) == pytest.approx(1.0)
    assert (p.omega1, p.omega2) == (0.83, 1 / 0.83)


def test_invalid_b():
    for bad in (0.0, -1.0, math.inf, math.nan):
        with pytest.raises(ValueError):
            BParam(bad)


def test_degenerate_b_warns():
    with pytest.warns(RuntimeWarning):
        BParam(1.0)  # b^2 = 1: q^2 = 1 exactly
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        BParam(0.83)  # fine


def test_omega_params():
    p = OmegaParams(0.83, 1 / 0.83)
    b = BParam(0.83)
    assert p.q == pytest.approx(b.q)
    assert p.qtilde == pytest.approx(b.qtilde)
    assert OmegaParams.from_b(0.83) == p


def test_omega_near_rational_warns():
    with pytest.warns(RuntimeWarning):
        OmegaParams(1.0, 2.0)
    with pytest.raises(ValueError):
        OmegaParams(-1.0, 1.0)
