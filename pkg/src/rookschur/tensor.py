"""
The tensor space (x)^n U with U = V + Q e_inf, dim V = d.

A basis vector is a word of length n over 1..d and INF.  Its support X (the
positions not equal to INF) and the letters read along X in increasing
position order recover the pair (X, alpha).  Basis order is lexicographic
with INF after d.

Vectors are plain dicts ``{word: Fraction}`` without zero entries.

Matrices built here act on column vectors: column t holds the image of the
basis vector t.  For the right rook action that means
``action_matrix_right(s t) == action_matrix_right(t) @ action_matrix_right(s)``.
"""

import math
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .combinatorics import canonical_orbit_pair, enumerate_words
from .errors import ResourceLimitError
from .linalg import RationalMatrix
from .rook import inverse, iota, compose, embed

INF = math.inf

MAX_TENSOR_DIM = 4096


def format_index(t):
    return ",".join("inf" if a == INF else str(a) for a in t)


def parse_index(text):
    out = []
    for tok in text.strip().strip("()[]").split(","):
        tok = tok.strip()
        out.append(INF if tok in ("inf", "oo", "∞") else int(tok))
    return tuple(out)


def check_index(t, d, n):
    if len(t) != n or any(a != INF and not 1 <= a <= d for a in t):
        raise ValueError("%s is not a basis index for d=%d, n=%d" % (format_index(t), d, n))


@lru_cache(maxsize=None)
def tensor_basis(d, n):
    """All (d+1)**n basis words in lexicographic order, INF last."""
    if (d + 1) ** n > MAX_TENSOR_DIM:
        raise ResourceLimitError("(d+1)^n = %d exceeds %d" % ((d + 1) ** n, MAX_TENSOR_DIM))
    return tuple(product(tuple(range(1, d + 1)) + (INF,), repeat=n))


@lru_cache(maxsize=None)
def _index(d, n):
    return {t: i for i, t in enumerate(tensor_basis(d, n))}


def support(t):
    return tuple(i for i, a in enumerate(t, 1) if a != INF)


def t_x_isomorphism(t):
    """The letters of t on its support, in increasing position order."""
    return tuple(a for a in t if a != INF)


def place(X, alpha, n):
    """The basis word with letters alpha on the positions X (sorted)."""
    out = [INF] * n
    for x, a in zip(sorted(X), alpha):
        out[x - 1] = a
    return tuple(out)


def basis_by_support(d, n):
    """Basis words grouped by support: {X: [words]}, the spaces W_X."""
    groups = {}
    for t in tensor_basis(d, n):
        groups.setdefault(support(t), []).append(t)
    return groups


# left action of the extended Schur algebra ---------------------------------

def left_schur_action(x, t):
    """
    x e_beta = sum_{alpha on X} x(c_{alpha,beta}) e_alpha for a SchurElement x.
    The result stays inside W_X, X the support of t.
    """
    check_index(t, x.d, x.n)
    X = support(t)
    beta = t_x_isomorphism(t)
    r = len(X)
    terms = {k.pair: v for k, v in x.terms.items() if k.degree == r}
    out = {}
    if not terms:
        return out
    for alpha in enumerate_words(r, x.d):
        v = terms.get(canonical_orbit_pair(alpha, beta))
        if v:
            out[place(X, alpha, x.n)] = v
    return out


def action_matrix_left(x):
    d, n = x.d, x.n
    basis = tensor_basis(d, n)
    idx = _index(d, n)
    columns = []
    for t in basis:
        columns.append({idx[w]: v for w, v in left_schur_action(x, t).items()})
    return RationalMatrix.from_columns(len(basis), columns)


# right actions -------------------------------------------------------------

def right_rook_action(t, s):
    """
    e_alpha . s = e_{alpha s} when the support X of t lies in the range of s,
    else zero.  The new letter at i is alpha(s(i)), so the new support is
    s^-1(X).
    """
    if len(t) != s.n:
        raise ValueError("index length %d does not match R_%d" % (len(t), s.n))
    X = support(t)
    rng = set(s.range)
    if not rng.issuperset(X):
        return {}
    word = tuple(INF if a is None else t[a - 1] for a in s.images)
    return {word: Fraction(1)}


def right_matrix_action(t, b):
    """
    e_alpha . (s E_{I,J}) = [X == I] e_{alpha iota_I s iota_J^-}, a basis
    vector supported on J.
    """
    n = len(t)
    X = support(t)
    if X != tuple(b.I):
        return {}
    # alpha o iota_I o s o iota_J^- : J -> [d]
    path = compose(iota(b.I, n), compose(embed(b.sigma, n), inverse(iota(b.J, n))))
    word = tuple(INF if a is None else t[a - 1] for a in path.images)
    return {word: Fraction(1)}


def right_algebra_action(t, x):
    """Linear extension of right_matrix_action to a RookAlgebraElement."""
    out = {}
    for b, c in x.terms.items():
        for w, v in right_matrix_action(t, b).items():
            s = out.get(w, 0) + c * v
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return out


def _matrix_from_action(d, n, act):
    basis = tensor_basis(d, n)
    idx = _index(d, n)
    columns = [{idx[w]: v for w, v in act(t).items()} for t in basis]
    return RationalMatrix.from_columns(len(basis), columns)


def action_matrix_right(s, d):
    """Matrix of z -> z . s on (x)^n U, column convention."""
    return _matrix_from_action(d, s.n, lambda t: right_rook_action(t, s))


def action_matrix_right_algebra(x, d):
    """Matrix of z -> z . x for x in the matrix algebra R_n."""
    return _matrix_from_action(d, x.n, lambda t: right_algebra_action(t, x))


# vectors -------------------------------------------------------------------

def decomposable(vectors):
    """
    Expand u_1 (x) ... (x) u_n in the word basis.  Each u_i is a sequence of
    d+1 coordinates, the last one along e_inf.
    """
    vectors = [list(map(Fraction, u)) for u in vectors]
    d = len(vectors[0]) - 1
    letters = tuple(range(1, d + 1)) + (INF,)
    out = {}
    for word in product(letters, repeat=len(vectors)):
        c = Fraction(1)
        for u, a in zip(vectors, word):
            c *= u[d if a == INF else a - 1]
            if not c:
                break
        if c:
            out[word] = c
    return out


def act_right(v, s):
    """Right rook action extended linearly to a vector."""
    out = {}
    for t, c in v.items():
        for w, x in right_rook_action(t, s).items():
            val = out.get(w, 0) + c * x
            if val:
                out[w] = val
            else:
                out.pop(w, None)
    return out


def act_left(x, v):
    out = {}
    for t, c in v.items():
        for w, y in left_schur_action(x, t).items():
            val = out.get(w, 0) + c * y
            if val:
                out[w] = val
            else:
                out.pop(w, None)
    return out


def vector_to_json(v):
    from .linalg import format_rational
    return [[format_rational(c), format_index(t)] for t, c in sorted(v.items())]
