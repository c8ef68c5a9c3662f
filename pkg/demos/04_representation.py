"""Difference-operator representation of the modular double of gl(N).

Generators act on functions of the triangular variable array gamma_{nj} by
meromorphic coefficients and imaginary shifts.  Both quantum-group families
(deformation parameters q and its modular dual) and all sign cross-relations
between them are verified pointwise on random entire test functions.
"""

import numpy as np

from mdlab.params import OmegaParams
from mdlab.repcheck import (
    TestFunction,
    apply_operator,
    build_generator,
    compose,
    sample_point,
    verify_all,
    verify_relation,
)

p = OmegaParams(0.83, 1 / 0.83)
print(f"omega1 = {p.omega1}, omega2 = {p.omega2:.6f}")
print(f"q = {p.q:.6f}, dual q = {p.qtilde:.6f}")

print("\n-- generators are sums of coefficient x shift terms --")
for kind in ("E_raise", "E_lower", "K", "tK"):
    op = build_generator(kind, 2, 3, p)
    shifts = [dict(t.shift) for t in op.terms]
    print(f"  {kind:8s} (n = 2, N = 3): {len(op.terms)} terms, shifts {shifts}")

print("\n-- a q-commutation relation, checked at one random point --")
rng = np.random.default_rng(0)
x = sample_point(2, rng)
f = TestFunction.random(2, rng)
K1 = build_generator("K", 1, 2, p)
E = build_generator("E_raise", 1, 2, p)
lhs = apply_operator(compose(K1, E, p), f, x, p)
rhs = p.q * apply_operator(compose(E, K1, p), f, x, p)
print(f"  K_1 E_12 f = {lhs:.6g}")
print(f"  q E_12 K_1 f = {rhs:.6g}   rel err {abs(lhs - rhs) / abs(lhs):.2e}")

print("\n-- one full relation over all its index pairs --")
rep = verify_relation("ef_commutator", 3, p, trials=10)
print(f"  {rep.identity_id}: max rel err {rep.rel_error:.2e} over "
      f"{rep.params['index_pairs']} index pairs x 10 trials")

print("\n-- entire catalogue at N = 2 and N = 3 --")
for N in (2, 3):
    reports = verify_all(N, p, trials=10, seed=42)
    worst = max(r.rel_error for r in reports)
    print(f"  N = {N}: {len(reports)} relations verified, worst rel err {worst:.2e}")
