"""Warm-up example: the monatomic ideal gas in the same formalism.

S(U, V) = (3r/2) log U + r log V + s0 satisfies U S_U - (3/2) V S_V = 0,
and inverting the gradient returns the familiar equations of state
U = (3/2) r T and p V = r T. Everything here is closed-form, so the
residuals sit at machine precision.
"""
import numpy as np

from isingcusp import GasState, gas_entropy, gas_gradient, gas_hj_residual, gas_recover_eos

rng = np.random.default_rng(42)

print(f"{'U':>8} {'V':>8} {'S':>12} {'residual':>10} {'T':>10} {'pV/rT':>8}")
for _ in range(6):
    g = GasState(u=float(rng.uniform(0.5, 5.0)),
                 v=float(rng.uniform(0.5, 5.0)))
    t, pressure = gas_recover_eos(g)
    print(f"{g.u:8.4f} {g.v:8.4f} {gas_entropy(g):12.6f} "
          f"{gas_hj_residual(g):10.1e} {t:10.6f} "
          f"{pressure * g.v / (g.r * t):8.5f}")

# the gradient components are 1/T and p/T, the usual thermodynamic duals
g = GasState(u=3.0, v=2.0)
du, dv = gas_gradient(g)
t, pressure = gas_recover_eos(g)
print(f"\nat (U, V) = (3, 2): dS/dU = {du:.6f} = 1/T, "
      f"dS/dV = {dv:.6f} = p/T")
print(f"recovered T = {t:.6f}, p = {pressure:.6f}")
