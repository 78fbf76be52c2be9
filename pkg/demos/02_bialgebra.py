"""
Boundary, product, coproduct and antipode
=========================================

The operations all act on canonical representatives and extend linearly.
"""

from sharbly import Element, antipode, boundary, coproduct, product, reduced_coproduct, sharbly_element

one = sharbly_element([(1,)])
two = sharbly_element([(2,)])

# Juxtaposing the rank-one generators gives a rank-two sharbly.
x = product(one, two)
print("[1] * [2]          =", x)

# The boundary drops one column at a time with alternating signs.
y = sharbly_element([(1, 0), (0, 1), (0, 2)])
print("d[e1, e2, 2e2]     =", boundary(y))

# The coproduct splits along sublattices spanned by the columns.
print("coproduct(x)       =", coproduct(x))
print("reduced part       =", reduced_coproduct(x))

# The antipode happens to fix x.
print("S(x)               =", antipode(x))
print("S(1)               =", antipode(Element.unit(x.chi)))
