"""Measuring the shared idler turns signal coherence into entanglement.

Two pumps squeeze (a, b) and (b, c). Before any measurement the signal
pair (a, c) is coherent but never entangled. Conditioning on a quadrature
of b trades part of that coherence for entanglement.

Run with ``python demos/homodyne_conversion.py``.
"""
import numpy as np

from bisqueeze import PumpParameters, ThermalSpec, bisqueezed_state, homodyne_condition
from bisqueeze.measures import first_order_coherence, negativity, pair_negativity

spec = ThermalSpec.from_hz(4.99e9, 5e9, 5.01e9, temperature=0.015)
print("thermal eigenvalues", spec.nus())

print(f"{'r':>5} {'N_ac':>6} {'<a+c>':>9} {'N_out':>8} {'<a+c>_out':>10}")
for r in np.linspace(0.25, 2.0, 8):
    sigma = bisqueezed_state(PumpParameters(r, r), spec)
    out = homodyne_condition(sigma, measured=1, theta=0.0)
    pre = first_order_coherence(sigma, 0, 2).pair_coherence
    post = first_order_coherence(out, 0, 1).pair_coherence
    print(f"{r:5.2f} {pair_negativity(sigma, 'ac'):6.3f} {pre:9.4f} "
          f"{negativity(out).negativity:8.4f} {post:10.4f}")

# the measured angle only rotates the conditional state locally
sigma = bisqueezed_state(PumpParameters(1.0, 1.0), spec)
for theta in (0.0, np.pi / 4, np.pi / 2):
    print(f"theta={theta:.3f}  nu_minus={negativity(homodyne_condition(sigma, 1, theta)).nu_tilde_minus:.12f}")
