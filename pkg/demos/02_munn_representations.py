"""
Irreducible representations of R_n
==================================

Each partition mu of r <= n gives a representation of R_n whose blocks are
indexed by r-subsets.  The symmetric group pieces come from Specht modules
in Young's natural basis, so every matrix is integral.
"""

from math import comb

from rookschur.combinatorics import partitions
from rookschur.rook import PartialPerm, enumerate_rook
from rookschur.rook_algebra import munn_check, rho_star
from rookschur.specht import character_table, specht_rep

print("characters of S_4")
table = character_table(4)
print("classes", table["classes"])
for mu, row in table["characters"].items():
    print(mu, row)

# %%
# the (2,1) representation of S_3, extended to R_3
s = PartialPerm.parse("[2,3,-]")
print(rho_star((2, 1), PartialPerm.parse("[2,3,1]")))
print(rho_star((1, 1), s))       # blocks (s(X), X) for 2-subsets X of the domain

# %%
# dimensions square up to |R_n|
for n in range(1, 5):
    dims = [specht_rep(mu).dim * comb(n, r) for r in range(n + 1) for mu in partitions(r)]
    print(n, dims, sum(d * d for d in dims), len(enumerate_rook(n)))

for name, ok, detail in munn_check(3):
    print("%-28s %s  (%s)" % (name, "ok" if ok else "FAILED", detail))
