"""
The extended Schur algebra
==========================

S(d, n) is the dual of the polynomials of degree at most n in the d x d
matrix coordinates.  Its basis xi_{alpha,beta} is indexed by column
multisets, and products come from the coproduct of the coordinates.
"""

from math import comb

from rookschur import schur
from rookschur.linalg import RationalMatrix

for d, n in [(1, 1), (2, 2), (2, 3), (3, 2)]:
    print("dim S(%d, %d) = %d = C(%d, %d)" % (d, n, len(schur.enumerate_basis(d, n)), d * d + n, n))

# degree one is the matrix algebra M_d
a = schur.SchurElement(2, 1, {schur.xi((2,), (1,)): 1})
b = schur.SchurElement(2, 1, {schur.xi((1,), (1,)): 1})
print("xi_21 xi_11 =", (a * b).to_json())
print("xi_11 xi_21 =", (b * a).to_json())

# %%
# the unit is the sum of the diagonal classes, one per degree
print(schur.unit(1, 1))

# evaluation at a matrix is a group-like element: e_g e_h = e_gh
g = RationalMatrix.from_dense([[1, 2], [0, 1]])
h = RationalMatrix.from_dense([[3, 0], [1, 1]])
eg, eh = schur.group_element(g, 2), schur.group_element(h, 2)
print("e_g e_h == e_gh:", eg * eh == schur.group_element(g @ h, 2))
