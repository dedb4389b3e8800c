"""Compare the covariance-matrix pipeline with a brute-force Fock simulation.

Run with ``python demos/fock_cross_check.py``.
"""
from bisqueeze import PumpParameters, bisqueezed_state
from bisqueeze.fock import TruncatedSpace, evolve_vacuum, oracle_expectations
from bisqueeze.measures import number_expectation

space = TruncatedSpace(n_max=12)
for r in (0.1, 0.3, 0.5):
    p = PumpParameters(r, r)
    fock = oracle_expectations(evolve_vacuum(p, space), space)
    sigma = bisqueezed_state(p)
    gauss = [number_expectation(sigma, m) for m in range(3)]
    print(f"r={r}")
    for name, f, g in zip("abc", (fock.n_a, fock.n_b, fock.n_c), gauss):
        print(f"  <n_{name}>  fock {f:.10f}  gaussian {g:.10f}  diff {f - g:+.1e}")
    print(f"  <a+c>  fock {abs(fock.a_dag_c):.10f}  gaussian {sigma[0, 2].real / 2:.10f}")
