"""
Index sets: subsets of {1..n}, words over {1..d}, partitions, standard
Young tableaux and canonical orbit pairs.

Everything is a plain tuple so it hashes and sorts.  All enumerations are
in lexicographic order; matrix layouts elsewhere in the package rely on
that.
"""

from itertools import combinations, combinations_with_replacement, product
from math import factorial


def enumerate_subsets(n, r):
    """All r-element subsets of {1..n} as sorted tuples, lexicographically."""
    if r < 0 or r > n:
        raise ValueError("need 0 <= r <= n, got r=%d, n=%d" % (r, n))
    return list(combinations(range(1, n + 1), r))


def all_subsets(n):
    """Subsets of {1..n} ordered by size, then lexicographically."""
    return [X for r in range(n + 1) for X in enumerate_subsets(n, r)]


def enumerate_words(r, d):
    """All d**r words of length r over {1..d}, lexicographically."""
    if d < 1:
        raise ValueError("alphabet size must be positive, got %d" % d)
    if r < 0:
        raise ValueError("word length must be non-negative, got %d" % r)
    return list(product(range(1, d + 1), repeat=r))


def canonical_orbit_pair(alpha, beta):
    """
    Canonical representative of the simultaneous S_r-orbit of (alpha, beta).

    The orbit of a pair of words under position permutations is determined
    by the multiset of columns (alpha_i, beta_i); we return that multiset as
    a sorted tuple of pairs.
    """
    alpha = tuple(alpha)
    beta = tuple(beta)
    if len(alpha) != len(beta):
        raise ValueError("words of different lengths: %r, %r" % (alpha, beta))
    return tuple(sorted(zip(alpha, beta)))


def split_pair(pair):
    """Inverse of canonical_orbit_pair on a representative: (alpha, beta)."""
    alpha = tuple(a for a, _ in pair)
    beta = tuple(b for _, b in pair)
    return alpha, beta


def enumerate_orbit_pairs(r, d):
    """
    Canonical orbit pairs of degree r over {1..d}.

    These are the multisets of size r drawn from the d*d columns, so there
    are C(d*d + r - 1, r) of them.
    """
    cols = [(a, b) for a in range(1, d + 1) for b in range(1, d + 1)]
    return list(combinations_with_replacement(cols, r))


# partitions -----------------------------------------------------------------

def is_partition(mu):
    mu = tuple(mu)
    return all(p > 0 for p in mu) and all(
        mu[i] >= mu[i + 1] for i in range(len(mu) - 1))


def partitions(r):
    """Partitions of r, largest first: (r), (r-1,1), ...; () for r == 0."""
    if r < 0:
        raise ValueError("negative size %d" % r)

    def gen(rest, bound):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, bound), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return list(gen(r, r))


def conjugate(mu):
    mu = tuple(mu)
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p > j) for j in range(mu[0]))


def hook_length_dimension(mu):
    """Number of standard tableaux of shape mu by the hook length formula."""
    mu = tuple(mu)
    conj = conjugate(mu)
    size = sum(mu)
    hooks = 1
    for i, row in enumerate(mu):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(size) // hooks


def standard_tableaux(mu):
    """
    All standard Young tableaux of shape mu, each a tuple of row tuples.

    Built by adding 1, 2, ..., |mu| one at a time to any row where the
    result is still a Young diagram contained in mu.  The output is sorted.
    """
    mu = tuple(mu)
    if not is_partition(mu):
        raise ValueError("not a partition: %r" % (mu,))
    size = sum(mu)
    found = []

    def grow(rows, k):
        if k > size:
            found.append(tuple(tuple(row) for row in rows))
            return
        for i in range(len(mu)):
            if len(rows[i]) < mu[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                grow(rows, k + 1)
                rows[i].pop()

    grow([[] for _ in mu], 1)
    return sorted(found)


# serialization ---------------------------------------------------------------

def format_partition(mu):
    return ",".join(str(p) for p in mu) if mu else "0"


def parse_partition(text):
    text = text.strip()
    if text in ("", "0", "()"):
        return ()
    mu = tuple(int(p) for p in text.strip("()[]").split(",") if p.strip())
    mu = tuple(p for p in mu if p != 0)
    if not is_partition(mu):
        raise ValueError("not a weakly decreasing list of positive parts: %r" % text)
    return mu


def parse_word(text):
    text = text.strip().strip("()[]")
    if not text:
        return ()
    return tuple(int(a) for a in text.split(","))
