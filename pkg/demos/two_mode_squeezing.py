"""Warm-up: one two-mode squeezer acting on the vacuum.

Run with ``python demos/two_mode_squeezing.py``.
"""
import numpy as np

from bisqueeze.generation import two_mode_squeezer
from bisqueeze.measures import first_order_coherence, negativity
from bisqueeze.symplectic import apply_transform, partial_transpose, symplectic_eigenvalues, vacuum

for r in (0.1, 0.5, 1.0, 2.0):
    sigma = apply_transform(vacuum(2), two_mode_squeezer((0, 1), r, n_modes=2))
    pt = symplectic_eigenvalues(partial_transpose(sigma, 1))
    rep = negativity(sigma)
    coh = first_order_coherence(sigma, 0, 1)
    # the partial transpose has eigenvalues exp(+-2r), so the log-negativity is 2r
    print(f"r={r:4}  PT eigenvalues {pt.round(4)}  E_N={rep.log_negativity:.4f}  "
          f"<a+b>={coh.pair_coherence:.1f}  C={coh.relative_entropy_coherence:.4f}")

# squeezing correlates a with b-dagger, never a with b: the pair has no
# first-order coherence however strongly it is squeezed
print(np.round(sigma.real, 3))
