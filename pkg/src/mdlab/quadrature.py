"""Adaptive quadrature along horizontal lines in the complex plane.

All contour integrals in this package run over lines Im(tau) = offset with
integrands that decay exponentially at both ends.  The driver below picks a
truncation window by sampling the integrand envelope, then refines panels
adaptively with nested Gauss-Legendre rules.  Integrand callbacks must be
vectorized over numpy arrays of complex points.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np


class QuadratureError(Exception):
    """Base class for line-integral failures."""


class DecayValidationError(QuadratureError):
    """The integrand does not decay at one or both ends of the line."""


class NonConvergenceError(QuadratureError):
    """Refinement budget exhausted before the error target was met."""


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and contour policy for line integrals.

    abs_tol / rel_tol bound the quadrature error of the final estimate;
    contour_offset is the default imaginary elevation when the caller does
    not dictate one; max_T caps the truncation half-width; strip_margin is
    the minimum distance kept from the boundary of the evaluation strip of
    the quantum dilogarithm; offset_fraction scales the default elevation
    of its defining integral.
    """

    abs_tol: float = 1e-11
    rel_tol: float = 1e-10
    contour_offset: float = 0.25
    max_T: float = 512.0
    max_refinements: int = 4000
    strip_margin: float = 0.05
    offset_fraction: float = 0.5

    def __post_init__(self) -> None:
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.contour_offset < 0:
            raise ValueError("contour_offset must be >= 0")
        if self.max_refinements < 1:
            raise ValueError("max_refinements must be >= 1")


@lru_cache(maxsize=None)
def _leggauss(n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def _panel_values(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    offset: float,
    n: int,
) -> complex:
    x, w = _leggauss(n)
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    tau = mid + half * x + 1j * offset
    y = np.asarray(f(tau), dtype=complex)
    if not np.all(np.isfinite(y)):
        raise QuadratureError(
            f"integrand returned non-finite values on [{a}, {b}] + {offset}i "
            "(pole on or near the contour?)"
        )
    return complex(half * np.sum(w * y))


def _choose_truncation(
    f: Callable[[np.ndarray], np.ndarray],
    offset: float,
    cfg: QuadratureConfig,
    initial_T: float,
) -> float:
    """Double T until the sampled envelope implies a negligible tail."""
    T = initial_T
    while True:
        ok = True
        for sign in (+1.0, -1.0):
            pts = sign * np.array([T - 1.0, T - 0.5, T]) + 1j * offset
            vals = np.abs(np.asarray(f(pts), dtype=complex))
            if not np.all(np.isfinite(vals)):
                raise QuadratureError("non-finite integrand while probing decay")
            v_in, v_out = vals[0], vals[-1]
            if v_out < 1e-300:
                continue
            if v_out >= v_in:
                if T >= cfg.max_T:
                    raise DecayValidationError(
                        f"integrand does not decay towards tau = {sign:+.0f}inf "
                        f"(|f| = {v_in:.3e} -> {v_out:.3e} at T = {T})"
                    )
                ok = False
                continue
            rate = np.log(v_in / v_out)  # decay per unit length
            tail = v_out / max(rate, 1e-3)
            if tail > 0.1 * cfg.abs_tol:
                ok = False
        if ok or T >= cfg.max_T:
            return min(T, cfg.max_T)
        T = min(2.0 * T, cfg.max_T)


def integrate_line(
    f: Callable[[np.ndarray], np.ndarray],
    offset: float,
    cfg: QuadratureConfig,
    initial_T: float = 8.0,
    initial_panels: int = 16,
) -> complex:
    """Integrate ``f`` over the line Im(tau) = offset.

    The caller guarantees two-sided exponential decay; this is validated by
    envelope sampling before any panel is refined.  Panels are bisected
    greedily, worst error first, using a 20/30-point Gauss-Legendre pair as
    the error estimator.
    """
    T = _choose_truncation(f, offset, cfg, initial_T)
    edges = np.linspace(-T, T, initial_panels + 1)

    panels: list[tuple[float, float, complex, float]] = []
    for a, b in zip(edges[:-1], edges[1:]):
        coarse = _panel_values(f, a, b, offset, 20)
        fine = _panel_values(f, a, b, offset, 30)
        panels.append((a, b, fine, abs(fine - coarse)))

    for _ in range(cfg.max_refinements):
        total = sum(p[2] for p in panels)
        err = sum(p[3] for p in panels)
        target = max(cfg.abs_tol, cfg.rel_tol * abs(total))
        if err <= target:
            return total
        worst = max(range(len(panels)), key=lambda i: panels[i][3])
        a, b, _, _ = panels.pop(worst)
        m = 0.5 * (a + b)
        for lo, hi in ((a, m), (m, b)):
            coarse = _panel_values(f, lo, hi, offset, 20)
            fine = _panel_values(f, lo, hi, offset, 30)
            panels.append((lo, hi, fine, abs(fine - coarse)))

    raise NonConvergenceError(
        f"line integral did not converge after {cfg.max_refinements} refinements "
        f"(estimated error {err:.3e}, target {target:.3e})"
    )
