"""Exact verification of the integer-power quantum-group identities.

Every check builds both sides as noncommutative polynomials, normal-orders
the difference and reports pass iff the normal form is identically zero.
All equalities are exact in the coefficient field Q(i)(v); the reported
rel_error is 0.0 or 1.0 and the tolerance is 0.0.

Each verifier takes the formal coefficient variable as a parameter, so the
dual-parameter twin of a check (coefficients read as powers of the modular
dual deformation parameter) is literally a re-execution with a different
symbol.
"""

from __future__ import annotations

import time

import sympy as sp

from ..report import CheckReport
from .coeffs import V, gauss_binomial, qpow
from .ncpoly import (
    NCPoly,
    NCTensor,
    commuting_pair_preset,
    coproduct,
    coproduct_on_leg,
    divided_power,
    qweyl_pair_preset,
    sl2_preset,
    sl3_preset,
)


def _exact_report(
    identity_id: str,
    params: dict,
    diffs: list,
    start: float,
) -> CheckReport:
    """Pass iff every difference normal-orders to zero (NCPoly or NCTensor)."""
    offenders = []
    for label, diff in diffs:
        nf = diff.normal_order()
        if not nf.is_zero():
            offenders.append(f"{label}: {nf!r}")
    passed = not offenders
    return CheckReport(
        identity_id=identity_id,
        params=params,
        lhs=0.0,
        rhs=0.0,
        rel_error=0.0 if passed else 1.0,
        tolerance=0.0,
        passed=passed,
        wall_time=time.perf_counter() - start,
        detail="exact" if passed else "; ".join(offenders),
    )


def _sl2_gens(v: sp.Symbol):
    P = sl2_preset(v)
    return (
        P,
        NCPoly.gen(P, "E1"),
        NCPoly.gen(P, "F1"),
        NCPoly.gen(P, "K1"),
        NCPoly.gen(P, "K1i"),
    )


def verify_kac(N: int, M: int, v: sp.Symbol = V) -> CheckReport:
    """Divided-power product identity
    E^(N) F^(M) = sum_n F^(M-n) prod_k (q^{-N-M+n+k} K - q^{N+M-n-k} K^-1)
                  / (q^k - q^-k) E^(N-n)."""
    start = time.perf_counter()
    if not (0 <= N and 0 <= M):
        raise ValueError("N and M must be non-negative")
    P, E, F, K, Ki = _sl2_gens(v)
    lhs = divided_power(P, "E1", N) * divided_power(P, "F1", M)
    rhs = NCPoly.zero(P)
    for n in range(min(N, M) + 1):
        middle = NCPoly.one(P)
        for k in range(1, n + 1):
            middle = middle * (
                (qpow(-N - M + n + k, v) * K - qpow(N + M - n - k, v) * Ki)
                * (sp.S.One / (qpow(k, v) - qpow(-k, v)))
            )
        rhs = rhs + divided_power(P, "F1", M - n) * middle * divided_power(P, "E1", N - n)
    return _exact_report(
        "kac_identity", {"N": N, "M": M, "variable": str(v)}, [("kac", lhs - rhs)], start
    )


def verify_mixed_commutators(m: int, v: sp.Symbol = V) -> CheckReport:
    """Commutators of an integer power of one rescaled generator
    (calE = -i(q - q^-1) E, calF likewise) with the opposite one:

        [calE^m, calF] = -(q^m - q^-m)(q^{1-m} K - q^{m-1} K^-1) calE^{m-1}
        [calE, calF^m] = -(q^m - q^-m) calF^{m-1} (q^{1-m} K - q^{m-1} K^-1)
    """
    start = time.perf_counter()
    if m < 1:
        raise ValueError("m must be >= 1")
    P, E, F, K, Ki = _sl2_gens(v)
    scale = -sp.I * (qpow(1, v) - qpow(-1, v))
    calE, calF = E * scale, F * scale
    bracket = -(qpow(m, v) - qpow(-m, v))
    cartan = qpow(1 - m, v) * K - qpow(m - 1, v) * Ki
    lhs1 = calE**m * calF - calF * calE**m
    rhs1 = (bracket * cartan) * calE ** (m - 1)
    lhs2 = calE * calF**m - calF**m * calE
    rhs2 = bracket * (calF ** (m - 1) * cartan)
    return _exact_report(
        "mixed_commutators",
        {"m": m, "variable": str(v)},
        [("[calE^m, calF]", lhs1 - rhs1), ("[calE, calF^m]", lhs2 - rhs2)],
        start,
    )


def verify_serre_sum(N: int, M: int, v: sp.Symbol = V) -> CheckReport:
    """Straightening of calE_1^N calE_2^M through the non-simple root:

        calE_i^N calE_j^M = q^{NM} sum_n (-1)^n q^{-n^2/2 + n}
            * [N]!_{q^-2} [M]!_{q^-2} / ([N-n]! [M-n]! [n]!)_{q^-2}
            * calE_j^{M-n} calE_{ij}^n calE_i^{N-n}

    with (i, j) = (1, 2), where [n]!_{q^-2} = prod_{k<=n}(1 - q^{-2k}),
    and the mirror identity for the F family.  The rescaled generators
    calX = -i(q - q^-1) X are used on both sides; the non-simple-root
    letter scales the same way, so calE_{12} = -i(q - q^-1) E12.
    """
    start = time.perf_counter()
    if N < 0 or M < 0:
        raise ValueError("N and M must be non-negative")
    P = sl3_preset(v)
    scale = -sp.I * (qpow(1, v) - qpow(-1, v))
    diffs = []
    for fam in ("E", "F"):
        g1 = NCPoly.gen(P, f"{fam}1") * scale
        g2 = NCPoly.gen(P, f"{fam}2") * scale
        g12 = NCPoly.gen(P, f"{fam}12") * scale
        lhs = g1**N * g2**M
        rhs = NCPoly.zero(P)
        for n in range(min(N, M) + 1):
            coeff = (-1) ** n * v ** (-n * n + 2 * n) * qpow(N * M, v)
            num = sp.S.One
            for k in range(1, N + 1):
                num *= 1 - qpow(-k, v) ** 2
            for k in range(1, M + 1):
                num *= 1 - qpow(-k, v) ** 2
            den = sp.S.One
            for bound in (N - n, M - n, n):
                for k in range(1, bound + 1):
                    den *= 1 - qpow(-k, v) ** 2
            rhs = rhs + (coeff * num / den) * (g2 ** (M - n) * g12**n * g1 ** (N - n))
        diffs.append((f"{fam}-family", lhs - rhs))
    return _exact_report(
        "serre_sum", {"N": N, "M": M, "variable": str(v)}, diffs, start
    )


def verify_commuting_cases(v: sp.Symbol = V) -> CheckReport:
    """Vanishing commutators: [E_i, E_j] and [F_i, F_j] when the Cartan
    pairing is zero, and [E_i, F_j] for i != j in both presets."""
    start = time.perf_counter()
    C = commuting_pair_preset(v)
    e1, e2 = NCPoly.gen(C, "E1"), NCPoly.gen(C, "E2")
    f1, f2 = NCPoly.gen(C, "F1"), NCPoly.gen(C, "F2")
    diffs = [
        ("[E1,E2] a12=0", e1 * e2 - e2 * e1),
        ("[F1,F2] a12=0", f1 * f2 - f2 * f1),
        ("[E1,F2] a12=0", e1 * f2 - f2 * e1),
        ("[E2,F1] a12=0", e2 * f1 - f1 * e2),
    ]
    S = sl3_preset(v)
    E1, E2 = NCPoly.gen(S, "E1"), NCPoly.gen(S, "E2")
    F1, F2 = NCPoly.gen(S, "F1"), NCPoly.gen(S, "F2")
    diffs += [
        ("[E1,F2] rank2", E1 * F2 - F2 * E1),
        ("[E2,F1] rank2", E2 * F1 - F1 * E2),
    ]
    return _exact_report("commuting_cases", {"variable": str(v)}, diffs, start)


def verify_qbinomial(N: int, v: sp.Symbol = V) -> CheckReport:
    """q-binomial theorem for a q-Weyl pair uv = q^2 vu:
    (u + v)^N = sum_n C_q(N, n) u^{N-n} v^n with the Gauss coefficient in
    the (1 - q^{-2k}) factorial normalization."""
    start = time.perf_counter()
    if N < 0:
        raise ValueError("N must be non-negative")
    W = qweyl_pair_preset(v)
    u, w = NCPoly.gen(W, "u"), NCPoly.gen(W, "v")
    lhs = (u + w) ** N
    rhs = NCPoly.zero(W)
    for n in range(N + 1):
        rhs = rhs + gauss_binomial(N, n, v) * (u ** (N - n) * w**n)
    return _exact_report(
        "qbinomial", {"N": N, "variable": str(v)}, [("binomial", lhs - rhs)], start
    )


def _defining_relations(preset) -> list:
    """Defining relations R = 0 of a preset, as (label, NCPoly) pairs."""
    v = preset.v
    q, qi = qpow(1, v), qpow(-1, v)
    qcomm = sp.S.One / (q - qi)
    nodes = [s[1:] for s in preset.symbols if s.startswith("E") and "12" not in s]
    rels = []
    gen = lambda name: NCPoly.gen(preset, name)
    for i in nodes:
        E, F, K, Ki = gen(f"E{i}"), gen(f"F{i}"), gen(f"K{i}"), gen(f"K{i}i")
        rels.append((f"[E{i},F{i}]", E * F - F * E - qcomm * (K - Ki)))
        rels.append((f"K{i}E{i}", K * E - q**2 * (E * K)))
        rels.append((f"K{i}F{i}", K * F - qi**2 * (F * K)))
        rels.append((f"K{i}K{i}i", K * Ki - NCPoly.one(preset)))
    if len(nodes) == 2:
        i, j = nodes
        Ei, Ej = gen(f"E{i}"), gen(f"E{j}")
        Fi, Fj = gen(f"F{i}"), gen(f"F{j}")
        Ki, Kj = gen(f"K{i}"), gen(f"K{j}")
        rels.append((f"[E{i},F{j}]", Ei * Fj - Fj * Ei))
        rels.append((f"[E{j},F{i}]", Ej * Fi - Fi * Ej))
        rels.append((f"K{i}E{j}", Ki * Ej - qi * (Ej * Ki)))
        rels.append((f"K{i}F{j}", Ki * Fj - q * (Fj * Ki)))
        rels.append(
            (
                "serre_E",
                Ei**2 * Ej - (q + qi) * (Ei * Ej * Ei) + Ej * Ei**2,
            )
        )
        rels.append(
            (
                "serre_F",
                Fi**2 * Fj - (q + qi) * (Fi * Fj * Fi) + Fj * Fi**2,
            )
        )
    return rels


def verify_coproduct_hom(v: sp.Symbol = V) -> CheckReport:
    """The coproduct is an algebra homomorphism and is coassociative:
    every defining relation maps to zero in the tensor square, and
    applying the coproduct to either leg of a coproduct agrees on all
    generators."""
    start = time.perf_counter()
    diffs = []
    for preset in (sl2_preset(v), sl3_preset(v)):
        for label, rel in _defining_relations(preset):
            diffs.append((f"{preset.name} Delta({label})", coproduct(rel)))
        for g in preset.symbols:
            if "12" in g:
                continue
            d = coproduct(NCPoly.gen(preset, g))
            diffs.append(
                (
                    f"{preset.name} coassoc {g}",
                    coproduct_on_leg(d, 0) - coproduct_on_leg(d, 1),
                )
            )
    return _exact_report("coproduct_hom", {"variable": str(v)}, diffs, start)
