"""Exact scalar coefficients for the symbolic engine.

Coefficients live in the field of rational functions over Q(i) in one
formal variable v standing for q^{1/2}; q itself is v**2.  Half-integer
powers of q and the factor q^{-n^2/2} appearing in the straightening
identities are then plain Laurent monomials in v.  The variable is
injectable so the dual-parameter twin of every check is a re-execution
with a different symbol, not new code.
"""

from __future__ import annotations

import sympy as sp

#: Default formal variable, v = q^{1/2}.
V = sp.Symbol("v")

#: Formal variable for the dual-parameter re-runs, standing for qtilde^{1/2}.
V_TILDE = sp.Symbol("w")


def q_of(v: sp.Symbol = V) -> sp.Expr:
    return v ** 2


def canon(expr: sp.Expr) -> sp.Expr:
    """Canonical rational form; equality of coefficients is syntactic on it.

    together() first collects the sum over a common denominator, which is
    much cheaper than letting cancel() expand the raw accumulation tree.
    """
    return sp.cancel(sp.together(expr))


def is_zero(expr: sp.Expr) -> bool:
    return canon(expr) == 0


def qpow(k: int, v: sp.Symbol = V) -> sp.Expr:
    """q^k as a Laurent monomial in v."""
    return v ** (2 * k)


def qhalf_pow(k: int, v: sp.Symbol = V) -> sp.Expr:
    """q^{k/2} as a Laurent monomial in v."""
    return v ** k


def qbracket_product(n: int, v: sp.Symbol = V) -> sp.Expr:
    """The product of (q^k - q^{-k}) for k = 1..n."""
    return sp.Mul(*[v ** (2 * k) - v ** (-2 * k) for k in range(1, n + 1)])


def one_minus_qneg_product(n: int, v: sp.Symbol = V) -> sp.Expr:
    """The product of (1 - q^{-2k}) for k = 1..n."""
    return sp.Mul(*[1 - v ** (-4 * k) for k in range(1, n + 1)])


def gauss_binomial(N: int, n: int, v: sp.Symbol = V) -> sp.Expr:
    """Gauss q-binomial coefficient in the (1 - q^{-2k}) normalization."""
    if not 0 <= n <= N:
        raise ValueError("need 0 <= n <= N")
    return canon(
        one_minus_qneg_product(N, v)
        / (one_minus_qneg_product(n, v) * one_minus_qneg_product(N - n, v))
    )
