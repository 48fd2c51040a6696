"""
The rook monoid and its matrix algebra
======================================

Partial injections of {1..n}, how they multiply, and the change of basis
that turns the monoid algebra into a direct sum of matrix algebras over
symmetric group algebras.
"""

from math import comb, factorial

from rookschur.rook import PartialPerm, compose, enumerate_rook, inverse, p_map
from rookschur.rook_algebra import phi, phi_inverse

# one-line notation, '-' where the map is undefined
s = PartialPerm.parse("[-,4,5,2,-]")
t = PartialPerm.parse("[3,1,2,-,-]")
print("s =", s, " domain", s.domain, " range", s.range)
print("t =", t)
print("s t =", compose(s, t))          # first t, then s
print("s^-1 =", inverse(s))
print("pattern of s:", p_map(s))        # s read as a permutation of 1..rank

# counting: choose domain, choose range, choose a bijection
for n in range(1, 6):
    print(n, len(enumerate_rook(n)), sum(comb(n, r) ** 2 * factorial(r) for r in range(n + 1)))

# %%
# phi sends a partial permutation to a sum over subsets of its domain
swap = PartialPerm.parse("[2,1]")
for coeff, term in phi(swap).to_json():
    print(coeff, "*", term)

# and the inverse uses an alternating sum over subsets
x = phi(swap)
print("round trip:", phi_inverse(x).to_json())

# phi is multiplicative; check it on every pair in R_3
R3 = enumerate_rook(3)
images = {a: phi(a) for a in R3}
bad = [(a, b) for a in R3 for b in R3 if images[compose(a, b)] != images[a] * images[b]]
print("pairs checked:", len(R3) ** 2, "failures:", len(bad))
