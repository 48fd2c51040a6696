"""
Duality on the tensor space
===========================

U = V + Q e_inf with dim V = d.  S(d, n) acts on the left of (x)^n U
and R_n acts on the right by moving and deleting tensor factors.  The two
actions commute, and each image is the full centralizer of the other when
d >= n.
"""

from rookschur import schur
from rookschur.duality import isotypic_multiplicities, verify_duality
from rookschur.rook import PartialPerm
from rookschur.rook_algebra import phi
from rookschur.tensor import (INF, format_index, left_schur_action, right_algebra_action,
                              right_rook_action)

# letters equal to INF mark the positions outside the support
t = (5, INF, INF, 2, 2)
s = PartialPerm.parse("[5,-,1,2,4]")
for w, c in right_rook_action(t, s).items():
    print(format_index(t), ".", s, "=", c, "*", format_index(w))

# the same result through the matrix algebra
print(right_algebra_action(t, phi(s)) == right_rook_action(t, s))

x = schur.SchurElement(2, 2, {schur.xi((1,), (2,)): 1})
print(left_schur_action(x, (2, INF)))

# %%
# the centralizer dimensions, computed as exact nullspaces
for d, n in [(2, 2), (3, 2), (1, 2)]:
    r = verify_duality(d, n)
    print("(d=%d, n=%d) schur image %d, rook image %d, commutants %d / %d, rook kernel %d"
          % (d, n, r.schur_image_dim, r.rook_image_dim, r.commutant_of_rook_dim,
             r.commutant_of_schur_dim, r.rook_kernel_dim))

# how the tensor space splits into irreducibles of R_2
print(isotypic_multiplicities(2, 2))
