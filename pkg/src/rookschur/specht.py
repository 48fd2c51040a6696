"""
Irreducible representations of S_r over Q in Young's natural basis.

The Specht module of shape mu is spanned by the polytabloids
e_T = sum_{q in C_T} sign(q) {qT}, and the standard tableaux give a basis.
We compute the images of the adjacent transpositions by expanding
e_{sT} in that basis, then fill in every element of S_r by multiplying
generator images along a breadth-first search of the Cayley graph.  All
matrices are integral.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from threading import Lock

from .combinatorics import conjugate, is_partition, partitions, standard_tableaux
from .errors import ResourceLimitError
from .linalg import RationalMatrix, commutant_basis, solve
from .rook import PartialPerm, compose, identity, symmetric_group

MAX_DEGREE = 6

REALIZATION = "young-natural"


def sign(p):
    """Sign of a permutation given as a total PartialPerm."""
    seen = set()
    s = 1
    for start in range(1, p.n + 1):
        if start in seen:
            continue
        length = 0
        i = start
        while i not in seen:
            seen.add(i)
            i = p(i)
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def cycle_type(p):
    seen = set()
    lengths = []
    for start in range(1, p.n + 1):
        if start in seen:
            continue
        length = 0
        i = start
        while i not in seen:
            seen.add(i)
            i = p(i)
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def adjacent_transposition(i, r):
    images = list(range(1, r + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return PartialPerm(tuple(images))


def _act(p, T):
    return tuple(tuple(p(k) for k in row) for row in T)


def _tabloid(T):
    return tuple(tuple(sorted(row)) for row in T)


def _columns(T):
    mu = tuple(len(row) for row in T)
    return [tuple(T[i][j] for i in range(len(mu)) if mu[i] > j) for j in range(len(T[0]))]


def polytabloid(T):
    """e_T as a dict from tabloids to integer coefficients."""
    if not T:
        return {(): 1}
    r = sum(len(row) for row in T)
    cols = _columns(T)
    vec = {}
    for choice in product(*(permutations(c) for c in cols)):
        images = list(range(1, r + 1))
        for col, perm in zip(cols, choice):
            for a, b in zip(col, perm):
                images[a - 1] = b
        q = PartialPerm(tuple(images))
        key = _tabloid(_act(q, T))
        vec[key] = vec.get(key, 0) + sign(q)
    return {k: v for k, v in vec.items() if v}


@dataclass
class SpechtRep:
    """
    The Specht representation of shape ``mu``; ``matrices`` maps every
    element of S_r (a total PartialPerm) to its dim x dim matrix.
    """

    mu: tuple
    dim: int
    tableaux: list
    matrices: dict = field(repr=False)
    realization: str = REALIZATION

    @property
    def degree(self):
        return sum(self.mu)

    def __call__(self, p):
        return self.matrices[p]

    def character(self, p):
        return self.matrices[p].trace()

    def generator_images(self):
        r = self.degree
        return [self.matrices[adjacent_transposition(i, r)] for i in range(1, r)]


class _Coordinates:
    """Expands Specht module vectors in the standard polytabloid basis."""

    def __init__(self, tableaux):
        self.basis = [polytabloid(T) for T in tableaux]
        # the standard tabloids index a square block of the basis matrix
        # which is unitriangular, hence invertible
        self.keys = [_tabloid(T) for T in tableaux]
        self.block = [[e.get(k, 0) for e in self.basis] for k in self.keys]

    def __call__(self, vec):
        return solve(self.block, [vec.get(k, 0) for k in self.keys])


def _generator_matrix(tableaux, coords, s):
    columns = []
    for T in tableaux:
        x = coords(polytabloid(_act(s, T)))
        columns.append({i: v for i, v in enumerate(x) if v})
    return RationalMatrix.from_columns(len(tableaux), columns)


def natural_matrix(mu, p):
    """
    rho_mu(p) computed directly from polytabloids, without going through
    generators.  Slow; used to cross-check ``specht_rep``.
    """
    tableaux = standard_tableaux(mu)
    coords = _Coordinates(tableaux)
    return _generator_matrix(tableaux, coords, p)


_lock = Lock()


def specht_rep(mu):
    mu = tuple(mu)
    if not is_partition(mu):
        raise ValueError("not a partition: %r" % (mu,))
    if sum(mu) > MAX_DEGREE:
        raise ResourceLimitError("Specht matrices are limited to r <= %d" % MAX_DEGREE)
    with _lock:
        return _specht_rep(mu)


@lru_cache(maxsize=None)
def _specht_rep(mu):
    r = sum(mu)
    tableaux = standard_tableaux(mu)
    dim = len(tableaux)
    one = identity(r)
    if r <= 1:
        return SpechtRep(mu, dim, tableaux, {one: RationalMatrix.identity(1)})
    coords = _Coordinates(tableaux)
    gens = [adjacent_transposition(i, r) for i in range(1, r)]
    gen_mats = [_generator_matrix(tableaux, coords, s) for s in gens]
    mats = {one: RationalMatrix.identity(dim)}
    frontier = [one]
    while frontier:
        nxt = []
        for p in frontier:
            for s, S in zip(gens, gen_mats):
                q = compose(p, s)
                if q not in mats:
                    mats[q] = mats[p] @ S
                    nxt.append(q)
        frontier = nxt
    assert len(mats) == factorial(r)
    return SpechtRep(mu, dim, tableaux, mats)


def verify_irreducible(rep):
    """
    True iff the commutant of the representation's image is the scalars.

    ``rep`` is a SpechtRep or any iterable of equally sized square matrices.
    """
    mats = list(rep.matrices.values()) if isinstance(rep, SpechtRep) else list(rep)
    if isinstance(rep, SpechtRep) and rep.degree >= 2:
        mats = rep.generator_images()
    return len(commutant_basis(mats, size=mats[0].rows if mats else None)) == 1


def character_table(r):
    """
    Characters of S_r: ``{"classes": [...], "characters": {mu: [...]}}``
    indexed by cycle type, classes in the order of ``partitions(r)``.
    """
    classes = partitions(r)
    reps = {}
    for p in symmetric_group(r):
        reps.setdefault(cycle_type(p) if r else (), p)
    table = {}
    for mu in partitions(r):
        rho = specht_rep(mu)
        table[mu] = [int(rho.character(reps[c])) for c in classes]
    return {"classes": classes, "characters": table}


def class_sizes(r):
    sizes = {}
    for p in symmetric_group(r):
        c = cycle_type(p) if r else ()
        sizes[c] = sizes.get(c, 0) + 1
    return sizes
