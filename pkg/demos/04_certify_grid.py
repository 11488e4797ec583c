"""Certificates for single families and a full parameter sweep.

Run with:  python demos/04_certify_grid.py
"""
import time
from collections import Counter

from expdioph.certifier import certify_grid, replay_proof

cert = replay_proof((11, 1, 3))
print("family (11, 1, 3):", cert.verdict.value)
for step in cert.steps:
    print(f"  {step.status:4}  {step.name:14} {step.claim}")

# Outside the proven range the oracle still runs; the certificate says so.
small = replay_proof((5, 1, 3))
print("family (5, 1, 3):", small.verdict.value, "oracle:", small.oracle_solutions)

# Even m takes the mod-2 route; steps 5 and 6 are skipped.
print("family (7, 4, 3):", replay_proof((7, 4, 3)).step_bitmap())

grid = [(ell, m, r)
        for ell in range(5, 100) if ell % 2 and ell % 3
        for m in range(1, 11) if m % 3
        for r in range(3, ell, 3)]
t0 = time.perf_counter()
certs = certify_grid(grid, z_max=8)
print(f"{len(certs)} families in {time.perf_counter() - t0:.1f}s:",
      dict(Counter(c.verdict.value for c in certs)))
