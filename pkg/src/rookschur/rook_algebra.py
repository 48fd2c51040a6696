"""
The matrix algebra R_n = (+)_r M_{C(n,r)}(Q S_r), its isomorphism with the
monoid algebra Q R_n, and the irreducible representations of R_n induced
from those of the symmetric groups.

A basis element sigma E_{I,J} of R_n is a BasisTerm(r, sigma, I, J) with
sigma a permutation of {1..r} and I, J subsets of size r.  Products follow

    (s E_{I,J}) (t E_{K,L}) = [J == K] (s t) E_{I,L}

inside one block, and vanish between blocks.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .combinatorics import enumerate_subsets, partitions
from .linalg import RationalMatrix, commutant_basis, format_rational
from .rook import (PartialPerm, compose, embed, enumerate_rook, idempotent, inverse,
                   iota, p_map, rook_size, symmetric_group)
from .specht import specht_rep


def _subset_str(X):
    return "[" + ",".join(str(x) for x in X) + "]"


def _parse_subset(text):
    body = text.strip().strip("[]{}()")
    return tuple(sorted(int(x) for x in body.split(",") if x.strip()))


@dataclass(frozen=True)
class BasisTerm:
    r: int
    sigma: PartialPerm
    I: tuple
    J: tuple

    def __post_init__(self):
        I = tuple(sorted(self.I))
        J = tuple(sorted(self.J))
        object.__setattr__(self, "I", I)
        object.__setattr__(self, "J", J)
        if len(I) != self.r or len(J) != self.r or self.sigma.n != self.r:
            raise ValueError("inconsistent basis term %s" % self)
        if not self.sigma.is_total():
            raise ValueError("sigma must be a permutation of 1..r")

    def sort_key(self):
        return (self.r, self.I, self.J, self.sigma.images)

    def __str__(self):
        return "%d; sigma=%s; I=%s; J=%s" % (
            self.r, self.sigma.one_line(), _subset_str(self.I), _subset_str(self.J))

    @classmethod
    def parse(cls, text):
        parts = [p.strip() for p in text.split(";")]
        fields = dict(p.split("=", 1) for p in parts[1:])
        return cls(int(parts[0]), PartialPerm.parse(fields["sigma"]),
                   _parse_subset(fields["I"]), _parse_subset(fields["J"]))


def E(I, J, sigma=None):
    """sigma E_{I,J}; sigma defaults to the identity of S_|I|."""
    r = len(I)
    if sigma is None:
        sigma = PartialPerm(tuple(range(1, r + 1)))
    return BasisTerm(r, sigma, tuple(I), tuple(J))


class _LinearCombination:
    """Sparse formal combination with Fraction coefficients and no zeros."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for k, v in terms.items():
                v = Fraction(v)
                if v:
                    self.terms[k] = v

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError("cannot combine %s with %s" % (type(self).__name__, type(other).__name__))
        if other.n != self.n:
            raise ValueError("n mismatch: %d vs %d" % (self.n, other.n))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return type(self)(self.n, out)

    def __neg__(self):
        return type(self)(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return type(self)(self.n, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms


class RookAlgebraElement(_LinearCombination):
    """An element of the matrix algebra R_n."""

    @classmethod
    def from_term(cls, n, term, coeff=1):
        return cls(n, {term: coeff})

    def __mul__(self, other):
        if not isinstance(other, RookAlgebraElement):
            return self.scale(other)
        return multiply(self, other)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def to_json(self):
        return [[format_rational(c), str(t)] for t, c in self.sorted_terms()]

    def __repr__(self):
        return "RookAlgebraElement(n=%d, %s)" % (
            self.n, " + ".join("%s*(%s)" % (format_rational(c), t) for t, c in self.sorted_terms()))


class MonoidAlgebraElement(_LinearCombination):
    """An element of the monoid algebra Q R_n."""

    @classmethod
    def from_perm(cls, s, coeff=1):
        return cls(s.n, {s: coeff})

    def __mul__(self, other):
        if not isinstance(other, MonoidAlgebraElement):
            return self.scale(other)
        self._check(other)
        out = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                k = compose(a, b)
                out[k] = out.get(k, 0) + x * y
        return MonoidAlgebraElement(self.n, out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0].rank, kv[0].domain,
                                                          kv[0].range, kv[0].images))

    def to_json(self):
        return [[format_rational(c), s.one_line()] for s, c in self.sorted_terms()]

    def __repr__(self):
        return "MonoidAlgebraElement(%s)" % " + ".join(
            "%s*%s" % (format_rational(c), s) for s, c in self.sorted_terms())


def multiply(x, y):
    x._check(y)
    # bucket y by (degree, row subset) so each term of x meets only its partners
    by_row = {}
    for t, c in y.terms.items():
        by_row.setdefault((t.r, t.I), []).append((t, c))
    out = {}
    for s, a in x.terms.items():
        for t, b in by_row.get((s.r, s.J), ()):
            key = BasisTerm(s.r, compose(s.sigma, t.sigma), s.I, t.J)
            out[key] = out.get(key, 0) + a * b
    return RookAlgebraElement(x.n, out)


def one(n):
    """The unit: sum over all subsets Y of id E_{Y,Y}."""
    return RookAlgebraElement(n, {E(Y, Y): 1 for r in range(n + 1)
                                  for Y in enumerate_subsets(n, r)})


def basis(n):
    """All basis terms of R_n, ordered by (r, I, J, sigma)."""
    out = []
    for r in range(n + 1):
        subsets = enumerate_subsets(n, r)
        group = symmetric_group(r)
        for I in subsets:
            for J in subsets:
                for s in group:
                    out.append(BasisTerm(r, s, I, J))
    return out


def dimension(n):
    return rook_size(n)


def _subsets_of(X):
    X = tuple(X)
    for k in range(len(X) + 1):
        yield from combinations(X, k)


def phi(s):
    """
    The isomorphism Q R_n -> R_n on a monoid element:

        phi(s) = sum_{X subset D(s)} p(s eps_X) E_{s(X), X}.
    """
    if isinstance(s, MonoidAlgebraElement):
        out = RookAlgebraElement(s.n)
        for t, c in s.terms.items():
            out = out + phi(t).scale(c)
        return out
    n = s.n
    terms = {}
    for X in _subsets_of(s.domain):
        t = compose(s, idempotent(X, n))
        terms[BasisTerm(len(X), p_map(t), s.image_of(X), X)] = Fraction(1)
    return RookAlgebraElement(n, terms)


def phi_inverse(x, n=None):
    """
    Inverse of phi, on a BasisTerm (then ``n`` is required) or on a
    RookAlgebraElement:

        phi^-1(s E_{I,J}) = sum_{X subset J} (-1)^{|J|-|X|} (iota_I s iota_J^-) eps_X.
    """
    if isinstance(x, RookAlgebraElement):
        out = MonoidAlgebraElement(x.n)
        for t, c in x.terms.items():
            out = out + phi_inverse(t, x.n).scale(c)
        return out
    if n is None:
        raise ValueError("ambient n is required for a bare basis term")
    t = x
    core = compose(iota(t.I, n), compose(embed(t.sigma, n), inverse(iota(t.J, n))))
    terms = {}
    for X in _subsets_of(t.J):
        key = compose(core, idempotent(X, n))
        sgn = -1 if (len(t.J) - len(X)) % 2 else 1
        terms[key] = terms.get(key, 0) + sgn
    return MonoidAlgebraElement(n, terms)


def rho_star(mu, s):
    """
    The irreducible representation of R_n attached to mu |- r, evaluated
    at s.  The matrix has C(n, r) x C(n, r) blocks of size f^mu, with blocks
    indexed by the r-subsets in lexicographic order; block (s(X), X) is
    rho_mu(p(s eps_X)) for every r-subset X of the domain of s.
    """
    if isinstance(s, MonoidAlgebraElement):
        out = None
        for t, c in s.terms.items():
            M = rho_star(mu, t) * c
            out = M if out is None else out + M
        if out is None:
            raise ValueError("empty combination")
        return out
    mu = tuple(mu)
    n = s.n
    r = sum(mu)
    if r > n:
        raise ValueError("partition of %d does not fit R_%d" % (r, n))
    rho = specht_rep(mu)
    f = rho.dim
    subsets = enumerate_subsets(n, r)
    index = {X: k for k, X in enumerate(subsets)}
    dom = set(s.domain)
    data = {}
    for X in subsets:
        if not dom.issuperset(X):
            continue
        t = compose(s, idempotent(X, n))
        block = rho(p_map(t))
        i0 = index[s.image_of(X)] * f
        j0 = index[X] * f
        for (i, j), v in block.items():
            data.setdefault(i0 + i, {})[j0 + j] = v
    return RationalMatrix._from_rows(f * len(subsets), f * len(subsets), data)


def irreducible_labels(n):
    """All (r, mu) with mu |- r <= n."""
    return [(r, mu) for r in range(n + 1) for mu in partitions(r)]


def munn_check(n, elements=None):
    """
    Checks on the family {rho*_mu}: multiplicativity on all pairs of
    ``elements`` (default all of R_n), unitality, the Wedderburn count
    sum (f^mu C(n,r))^2 = |R_n|, irreducibility (scalar commutant) and
    pairwise distinct characters.  Returns a list of (name, pass, detail).
    """
    elems = list(elements) if elements is not None else enumerate_rook(n)
    one_n = PartialPerm(tuple(range(1, n + 1)))
    checks = []
    total = 0
    characters = {}
    for r, mu in irreducible_labels(n):
        mats = {s: rho_star(mu, s) for s in elems}
        ok = all(rho_star(mu, compose(a, b)) == mats[a] @ mats[b]
                 for a in elems for b in elems)
        dim = specht_rep(mu).dim * comb(n, r)
        total += dim ** 2
        unital = rho_star(mu, one_n) == RationalMatrix.identity(dim)
        irreducible = len(commutant_basis(list(mats.values()))) == 1
        characters[mu] = tuple(mats[s].trace() for s in elems)
        checks.append(("homomorphism %s" % (mu,), ok, len(elems) ** 2))
        checks.append(("unital %s" % (mu,), unital, dim))
        checks.append(("irreducible %s" % (mu,), irreducible, dim))
    checks.append(("sum of squares", total == rook_size(n), "%d vs %d" % (total, rook_size(n))))
    distinct = len(set(characters.values())) == len(characters)
    checks.append(("distinct characters", distinct, len(characters)))
    return checks
