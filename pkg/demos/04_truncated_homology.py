"""
Homology of pool-truncated complexes
====================================

Fix a finite pool of vectors and keep only sharblies whose columns come from
it. These subcomplexes are small enough to handle with exact linear algebra.
"""

from sharbly import DET, TRIV, boundary, build_complex, find_boundary_witness, homology_dims, sharbly_element
from sharbly.truncation import pool_from_vectors

# Rank one: subsets of {1..6} form a full simplex, so only H_0 survives.
pool = pool_from_vectors([(v,) for v in range(1, 7)])
c = build_complex(1, TRIV, pool, 5)
print("rank 1 chain dims   ", c.chain_dims)
print("rank 1 homology     ", homology_dims(c))

# Rank two, a few short vectors, both characters.
six = pool_from_vectors([(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2)])
for chi, name in ((TRIV, "triv"), (DET, "det")):
    c = build_complex(2, chi, six, 3)
    print(f"rank 2 {name:4} dims    ", c.chain_dims, "homology", homology_dims(c))

# [e1, 2e2] bounds on the pool {e1, e2, 2e2}.
y = sharbly_element([(1, 0), (0, 2)])
x = find_boundary_witness(y, pool_from_vectors([(1, 0), (0, 1), (0, 2)]))
print("witness             ", x)
print("d(witness) == target", boundary(x) == y)
