"""
Canonical representatives of coinvariant sharblies
===================================================

A basic sharbly is a list of nonzero integer columns. Two lists that differ
by a unimodular change of basis, a reordering, or column signs name the same
generator up to a sign. ``canonicalize`` finds the representative.
"""

from sharbly import DET, TRIV, basic, canonicalize, sharbly_element

# The standard basis of Z^2 is equivalent to itself with the columns swapped,
# which flips the sign, so the generator vanishes.
print("[e1, e2]          ", canonicalize(basic([(1, 0), (0, 1)])))

# Doubling the second column breaks that symmetry.
print("[e1, 2e2]         ", canonicalize(basic([(1, 0), (0, 2)])))

# The triangle e1, e2, e1 + e2 survives only with the determinant character.
tri = [(1, 0), (0, 1), (1, 1)]
print("triangle, triv    ", canonicalize(basic(tri, TRIV)))
print("triangle, det     ", canonicalize(basic(tri, DET)))

# Elements are rational combinations; like terms collect after canonicalizing.
x = sharbly_element([(1, 0), (0, 2)]) + sharbly_element([(0, 2), (1, 0)])
print("x + swapped x     ", x)
