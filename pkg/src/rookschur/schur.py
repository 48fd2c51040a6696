"""
The extended Schur algebra S(d, n) = (+)_{r=0}^{n} S(d, r).

S(d, n) is the linear dual of the space of polynomials of degree at most n
in the d*d matrix coordinates c_{ij}.  A monomial c_{alpha,beta} depends only
on the multiset of columns (alpha_i, beta_i), so monomials and dual basis
elements are both keyed by a canonical orbit pair (a sorted tuple of column
pairs); its length is the degree.

Products are evaluated straight from the coalgebra structure,

    (xi eta)(c_{a,b}) = sum_{g in [d]^r} xi(c_{a,g}) eta(c_{g,b}),

at one representative (a, b) of every degree-r class.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from .combinatorics import (canonical_orbit_pair, enumerate_orbit_pairs, enumerate_words,
                            parse_word, split_pair)
from .errors import ResourceLimitError
from .linalg import RationalMatrix, format_rational

MAX_BASIS = 5000


def _word_str(w):
    return "(" + ",".join(str(a) for a in w) + ")"


@dataclass(frozen=True, order=True)
class Monomial:
    """The monomial c_{alpha,beta}, stored by its canonical orbit pair."""

    pair: tuple

    @property
    def degree(self):
        return len(self.pair)

    @classmethod
    def of(cls, alpha, beta):
        return cls(canonical_orbit_pair(alpha, beta))

    @classmethod
    def on(cls, X, alpha, beta):
        """
        The monomial of two maps X -> [d] given as dicts (or full words of
        length n indexed from 1), normalized through the order-preserving
        enumeration of X.
        """
        X = sorted(X)
        a = [alpha[x] if isinstance(alpha, dict) else alpha[x - 1] for x in X]
        b = [beta[x] if isinstance(beta, dict) else beta[x - 1] for x in X]
        return cls.of(a, b)

    def words(self):
        return split_pair(self.pair)


@dataclass(frozen=True, order=True)
class XiBasisElement:
    """The dual basis element xi_{alpha,beta} of S(d, n)."""

    pair: tuple

    @property
    def degree(self):
        return len(self.pair)

    @classmethod
    def of(cls, alpha, beta):
        return cls(canonical_orbit_pair(alpha, beta))

    def words(self):
        return split_pair(self.pair)

    def sort_key(self):
        return (self.degree, self.pair)

    def __str__(self):
        a, b = self.words()
        return "%d; alpha=%s; beta=%s" % (self.degree, _word_str(a), _word_str(b))

    @classmethod
    def parse(cls, text):
        parts = [p.strip() for p in text.split(";")]
        fields = dict(p.split("=", 1) for p in parts[1:])
        xi = cls.of(parse_word(fields["alpha"]), parse_word(fields["beta"]))
        if xi.degree != int(parts[0]):
            raise ValueError("degree %s does not match words in %r" % (parts[0], text))
        return xi


def xi(alpha, beta):
    return XiBasisElement.of(alpha, beta)


class SchurElement:
    """A sparse rational combination of xi-basis elements of S(d, n)."""

    __slots__ = ("d", "n", "terms")

    def __init__(self, d, n, terms=None):
        self.d = d
        self.n = n
        self.terms = {}
        if terms:
            for k, v in terms.items():
                if k.degree > n:
                    raise ValueError("degree %d exceeds n=%d" % (k.degree, n))
                if any(not (1 <= a <= d and 1 <= b <= d) for a, b in k.pair):
                    raise ValueError("%s has letters outside 1..%d" % (k, d))
                v = Fraction(v)
                if v:
                    self.terms[k] = v

    @classmethod
    def basis_element(cls, d, n, x):
        return cls(d, n, {x: 1})

    def _check(self, other):
        if not isinstance(other, SchurElement):
            raise TypeError("expected a SchurElement")
        if (self.d, self.n) != (other.d, other.n):
            raise ValueError("(d, n) mismatch: %s vs %s" % ((self.d, self.n), (other.d, other.n)))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return SchurElement(self.d, self.n, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return SchurElement(self.d, self.n, {k: c * v for k, v in self.terms.items()})

    __rmul__ = scale

    def __mul__(self, other):
        if isinstance(other, SchurElement):
            return product(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, SchurElement):
            return NotImplemented
        return (self.d, self.n) == (other.d, other.n) and self.terms == other.terms

    __hash__ = None

    def __call__(self, m):
        return evaluate(self, m)

    def degrees(self):
        return sorted({k.degree for k in self.terms})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def to_json(self):
        return [[format_rational(c), str(k)] for k, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, d, n, data):
        return cls(d, n, {XiBasisElement.parse(t): Fraction(c) for c, t in data})

    def __repr__(self):
        return "SchurElement(d=%d, n=%d, %s)" % (self.d, self.n, " + ".join(
            "%s*xi[%s]" % (format_rational(c), k) for k, c in self.sorted_terms()))


def dimension(d, n):
    return comb(d * d + n, n)


def enumerate_basis(d, n):
    """The xi-basis of S(d, n), by degree and then canonical pair."""
    if d < 1 or n < 1:
        raise ValueError("need d, n >= 1")
    if dimension(d, n) > MAX_BASIS:
        raise ResourceLimitError("dim S(%d, %d) = %d exceeds %d" % (d, n, dimension(d, n), MAX_BASIS))
    return [XiBasisElement(p) for r in range(n + 1) for p in enumerate_orbit_pairs(r, d)]


def evaluate(x, m):
    """
    The pairing of x (XiBasisElement or SchurElement) with the monomial m:
    a basis element gives 1 exactly on its own class and degree.
    """
    if isinstance(x, XiBasisElement):
        return Fraction(1) if x.pair == m.pair else Fraction(0)
    if any(not (1 <= a <= x.d and 1 <= b <= x.d) for a, b in m.pair):
        raise ValueError("monomial letters outside 1..%d" % x.d)
    if m.degree > x.n:
        return Fraction(0)
    return x.terms.get(XiBasisElement(m.pair), Fraction(0))


def product(x, y):
    x._check(y)
    d = x.d
    out = {}
    xdeg = {k.degree for k in x.terms}
    ydeg = {k.degree for k in y.terms}
    xt = {k.pair: v for k, v in x.terms.items()}
    yt = {k.pair: v for k, v in y.terms.items()}
    for r in sorted(xdeg & ydeg):
        gammas = enumerate_words(r, d)
        for pair in enumerate_orbit_pairs(r, d):
            alpha, beta = split_pair(pair)
            s = 0
            for g in gammas:
                u = xt.get(canonical_orbit_pair(alpha, g))
                if u is None:
                    continue
                v = yt.get(canonical_orbit_pair(g, beta))
                if v is not None:
                    s += u * v
            if s:
                out[XiBasisElement(pair)] = s
    return SchurElement(d, x.n, out)


def _nondecreasing_words(r, d):
    return list(combinations_with_replacement(range(1, d + 1), r))


def unit(d, n):
    """sum_r sum_{alpha nondecreasing} xi_{alpha,alpha}; evaluates c at I_d."""
    return SchurElement(d, n, {XiBasisElement.of(a, a): 1
                               for r in range(n + 1) for a in _nondecreasing_words(r, d)})


def degree_unit(d, n, r):
    """The identity of the degree-r block S(d, r)."""
    return SchurElement(d, n, {XiBasisElement.of(a, a): 1 for a in _nondecreasing_words(r, d)})


def evaluate_group_element(g, m):
    """c_{alpha,beta}(g) = prod_i g[alpha_i, beta_i] (indices from 1)."""
    if not isinstance(g, RationalMatrix):
        g = RationalMatrix.from_dense(g)
    if g.rows != g.cols:
        raise ValueError("g must be square")
    d = g.rows
    out = Fraction(1)
    for a, b in m.pair:
        if not (1 <= a <= d and 1 <= b <= d):
            raise ValueError("monomial letters outside 1..%d" % d)
        out *= g[a - 1, b - 1]
    return out


def group_element(g, n):
    """The functional e_g : c -> c(g) as an element of S(d, n)."""
    if not isinstance(g, RationalMatrix):
        g = RationalMatrix.from_dense(g)
    d = g.rows
    terms = {}
    for r in range(n + 1):
        for pair in enumerate_orbit_pairs(r, d):
            v = evaluate_group_element(g, Monomial(pair))
            if v:
                terms[XiBasisElement(pair)] = v
    return SchurElement(d, n, terms)
