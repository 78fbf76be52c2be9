"""
Randomized checks of the bialgebra identities
=============================================

Each report is reproducible from its seed. A short run is shown here; the
acceptance suite uses 1000 samples per identity and character.
"""

from sharbly.verify import AXIOMS, verify

for chi in ("triv", "det"):
    for axiom in AXIOMS:
        r = verify(axiom, samples=30, seed=42, max_n=4, max_k=2, chi=chi)
        status = "ok" if r.passed else "FAILED"
        print(f"{chi:4} {axiom:10} {status:6} nonzero={r.nonzero_samples:3} {r.wall_time:.2f}s")
