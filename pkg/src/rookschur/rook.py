"""
The rook monoid R_n: partial injective maps of {1..n} to itself.

Products compose right to left, ``(s * t)(i) == s(t(i))``; the product is
undefined at ``i`` when ``t(i)`` is undefined or falls outside the domain of
``s``.  A permutation of {1..r} is a total PartialPerm of ambient size r, so
the symmetric groups S_r are handled by the same type.
"""

from dataclasses import dataclass
from itertools import permutations
from math import comb, factorial

from .combinatorics import enumerate_subsets
from .errors import ResourceLimitError

MAX_ENUMERATION_N = 6


@dataclass(frozen=True)
class PartialPerm:
    """
    ``images[i - 1]`` is the image of ``i``, or None where undefined.

    >>> s = PartialPerm.parse("[-,4,5,2,-]")
    >>> s.domain, s.range, s.rank
    ((2, 3, 4), (2, 4, 5), 3)
    """

    images: tuple

    def __post_init__(self):
        images = tuple(None if a is None else int(a) for a in self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        seen = set()
        for a in images:
            if a is None:
                continue
            if not 1 <= a <= n:
                raise ValueError("image %d outside 1..%d" % (a, n))
            if a in seen:
                raise ValueError("not injective: %d hit twice" % a)
            seen.add(a)

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    @property
    def domain(self):
        return tuple(i + 1 for i, a in enumerate(self.images) if a is not None)

    @property
    def range(self):
        return tuple(sorted(a for a in self.images if a is not None))

    @property
    def rank(self):
        return sum(1 for a in self.images if a is not None)

    def is_total(self):
        return None not in self.images

    def image_of(self, X):
        """sigma(X) as a sorted tuple; every element of X must be in the domain."""
        out = []
        for i in X:
            a = self.images[i - 1]
            if a is None:
                raise ValueError("%d is not in the domain" % i)
            out.append(a)
        return tuple(sorted(out))

    def __mul__(self, other):
        return compose(self, other)

    def one_line(self):
        return "[" + ",".join("-" if a is None else str(a) for a in self.images) + "]"

    __str__ = one_line

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError("expected '[a,b,-,...]', got %r" % text)
        body = text[1:-1].strip()
        if not body:
            return cls(())
        return cls(tuple(None if tok.strip() == "-" else int(tok) for tok in body.split(",")))


def compose(s, t):
    """The product s t: first apply t, then s."""
    if s.n != t.n:
        raise ValueError("ambient sizes differ: %d vs %d" % (s.n, t.n))
    si = s.images
    return PartialPerm(tuple(None if a is None else si[a - 1] for a in t.images))


def inverse(s):
    out = [None] * s.n
    for i, a in enumerate(s.images, 1):
        if a is not None:
            out[a - 1] = i
    return PartialPerm(tuple(out))


def identity(n):
    return PartialPerm(tuple(range(1, n + 1)))


def zero(n):
    """The empty map eps_0, a zero element of R_n."""
    return PartialPerm((None,) * n)


def idempotent(X, n):
    """The partial identity on X."""
    X = set(X)
    if any(not 1 <= x <= n for x in X):
        raise ValueError("%r is not a subset of 1..%d" % (sorted(X), n))
    return PartialPerm(tuple(i if i in X else None for i in range(1, n + 1)))


def iota(X, n):
    """
    Order-preserving bijection {1..|X|} -> X, inside ambient n.

    k maps to the k-th smallest element of X for k <= |X|, and positions
    beyond |X| are undefined.
    """
    X = sorted(X)
    if any(not 1 <= x <= n for x in X) or len(set(X)) != len(X):
        raise ValueError("%r is not a subset of 1..%d" % (X, n))
    return PartialPerm(tuple(X) + (None,) * (n - len(X)))


def embed(perm, n):
    """A permutation of {1..r} viewed in R_n, acting on {1..r} only."""
    r = perm.n
    if r > n:
        raise ValueError("cannot embed S_%d into R_%d" % (r, n))
    return PartialPerm(perm.images + (None,) * (n - r))


def restrict_ambient(s, r):
    """Drop the trailing positions r+1..n, which must be undefined and unused."""
    if any(a is not None for a in s.images[r:]) or any(
            a is not None and a > r for a in s.images[:r]):
        raise ValueError("%s does not live on 1..%d" % (s, r))
    return PartialPerm(s.images[:r])


def p_map(s):
    """
    The permutation pattern of s in S_rank(s).

    This is iota(R)^- s iota(D) with D, R the domain and range of s, returned
    as a total PartialPerm of ambient size rank(s).
    """
    n = s.n
    r = s.rank
    X = s.domain
    Y = s.range
    p = compose(inverse(iota(Y, n)), compose(s, iota(X, n)))
    p = restrict_ambient(p, r)
    assert p.is_total()
    return p


def from_pattern(pattern, X, Y, n):
    """The unique element with domain X, range Y and p_map equal to pattern."""
    return compose(iota(Y, n), compose(embed(pattern, n), inverse(iota(X, n))))


def symmetric_group(r):
    """S_r as total PartialPerms, in lexicographic one-line order."""
    return [PartialPerm(p) for p in permutations(range(1, r + 1))]


def enumerate_rook(n):
    """
    All of R_n: by rank, then domain, then range, then pattern.

    The count is sum_r C(n, r)^2 r!.
    """
    if n > MAX_ENUMERATION_N:
        raise ResourceLimitError("enumerate_rook is limited to n <= %d" % MAX_ENUMERATION_N)
    if n < 0:
        raise ValueError("negative n")
    out = []
    for r in range(n + 1):
        subsets = enumerate_subsets(n, r)
        group = symmetric_group(r)
        for X in subsets:
            for Y in subsets:
                for pattern in group:
                    out.append(from_pattern(pattern, X, Y, n))
    return out


def rook_size(n):
    return sum(comb(n, r) ** 2 * factorial(r) for r in range(n + 1))


def is_idempotent(s):
    return compose(s, s) == s


def monoid_closure(gens, n):
    """The submonoid of R_n generated by gens (identity included)."""
    seen = {identity(n)}
    frontier = list(seen)
    gens = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen
