import math

import numpy as np
import pytest

from mdlab.quadrature import (
    DecayValidationError,
    NonConvergenceError,
    QuadratureConfig,
    QuadratureError,
    integrate_line,
)

CFG = QuadratureConfig()


def test_gaussian_on_real_line():
    val = integrate_line(lambda t: np.exp(-(t**2)), 0.0, CFG)
    assert val == pytest.approx(math.sqrt(math.pi), rel=1e-12)


def test_gaussian_contour_shift_invariance():
    # exp(-t^2) is entire with uniform decay: the integral cannot depend on
    # the elevation of the line.
    vals = [integrate_line(lambda t: np.exp(-(t**2)), off, CFG) for off in (0.0, 0.3, 1.0)]
    for v in vals[1:]:
        assert v == pytest.approx(vals[0], rel=1e-11)


def test_sech_integral():
    # int dt / cosh(t) = pi, with genuine exponential decay; also on an
    # elevated line strictly below the pole at i*pi/2.
    val = integrate_line(lambda t: 1.0 / np.cosh(t), 0.0, CFG)
    assert val == pytest.approx(math.pi, rel=1e-11)
    val = integrate_line(lambda t: 1.0 / np.cosh(t), 0.5, CFG)
    assert val == pytest.approx(math.pi, rel=1e-11)


def test_oscillatory_integrand():
    # int exp(-t^2) cos(8 t) dt = sqrt(pi) exp(-16)
    val = integrate_line(lambda t: np.exp(-(t**2)) * np.cos(8.0 * t), 0.0, CFG)
    assert val == pytest.approx(math.sqrt(math.pi) * math.exp(-16.0), rel=1e-6)


def test_decay_validation_rejects_growth():
    with pytest.raises(DecayValidationError):
        integrate_line(lambda t: np.exp(np.abs(t.real) * 0.1), 0.0, CFG)


def test_nonfinite_integrand_rejected():
    def f(t):
        out = np.exp(-(t**2))
        with np.errstate(divide="ignore", invalid="ignore"):
            return out / (t.real - 0.123456789)  # pole on the contour

    with pytest.raises(QuadratureError):
        integrate_line(f, 0.0, CFG)


def test_refinement_budget():
    tight = QuadratureConfig(abs_tol=1e-13, rel_tol=1e-13, max_refinements=1)
    with pytest.raises(NonConvergenceError):
        integrate_line(lambda t: np.exp(-np.abs(t.real) ** 1.1) * np.cos(40 * t), 0.0, tight)


try:
    from hypothesis import given, settings
    from hypothesis import strategies as st

    @settings(max_examples=25, deadline=None)
    @given(
        a=st.floats(min_value=0.2, max_value=3.0),
        c=st.floats(min_value=-2.0, max_value=2.0),
        offset=st.floats(min_value=0.0, max_value=1.0),
    )
    def test_gaussian_family_property(a, c, offset):
        # int exp(-a (t - c)^2) dt = sqrt(pi / a) for any contour elevation
        val = integrate_line(lambda t: np.exp(-a * (t - c) ** 2), offset, CFG)
        assert val == pytest.approx(math.sqrt(math.pi / a), rel=1e-10)

except ImportError:  # pragma: no cover - hypothesis is an optional extra
    pass


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(abs_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureConfig(max_refinements=0)
