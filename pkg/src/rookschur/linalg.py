"""
Exact linear algebra over the rationals.

Matrices are sparse (row -> {col: Fraction}) because every action matrix
in this package is close to a partial permutation matrix.  Elimination is
done on integer rows: a rational row is cleared of denominators first,
and afterwards every row operation is fraction-free with the row content
divided out.  Narrow matrices (fewer than ``DENSE_CUTOFF`` columns) use
dense Bareiss elimination for rank.

The echelon form used for nullspaces is the reduced row echelon form with
pivots at leading entries, which is unique for a given row space; bases
returned from here therefore depend only on the span of the input rows,
not on their order.
"""

import json
from fractions import Fraction
from math import gcd

Rational = Fraction

DENSE_CUTOFF = 64


def format_rational(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def parse_rational(text):
    return Fraction(str(text).strip())


class RationalMatrix:
    """
    A rows x cols matrix over Q with only the nonzero entries stored.

    >>> A = RationalMatrix.from_dense([[1, 2], [0, Fraction(1, 3)]])
    >>> A[0, 1], A[1, 0]
    (Fraction(2, 1), Fraction(0, 1))
    """

    __slots__ = ("rows", "cols", "_rows")

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions %dx%d" % (rows, cols))
        self.rows = rows
        self.cols = cols
        self._rows = {}
        if entries:
            for (i, j), v in entries.items():
                self._set(i, j, Fraction(v))

    def _set(self, i, j, v):
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError("entry (%d, %d) outside %dx%d" % (i, j, self.rows, self.cols))
        row = self._rows.get(i)
        if v:
            if row is None:
                row = self._rows[i] = {}
            row[j] = v
        elif row is not None and j in row:
            del row[j]
            if not row:
                del self._rows[i]

    @classmethod
    def _from_rows(cls, rows, cols, data):
        M = cls(rows, cols)
        M._rows = {i: r for i, r in data.items() if r}
        return M

    @classmethod
    def from_dense(cls, data):
        data = [list(row) for row in data]
        rows = len(data)
        cols = len(data[0]) if rows else 0
        M = cls(rows, cols)
        for i, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                v = Fraction(v)
                if v:
                    M._rows.setdefault(i, {})[j] = v
        return M

    @classmethod
    def identity(cls, m):
        return cls._from_rows(m, m, {i: {i: Fraction(1)} for i in range(m)})

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def from_columns(cls, rows, columns):
        """Matrix whose j-th column is the sparse vector ``columns[j]``."""
        M = cls(rows, len(columns))
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v:
                    M._rows.setdefault(i, {})[j] = Fraction(v)
        return M

    # access --------------------------------------------------------------

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        return self._rows.get(i, {}).get(j, Fraction(0))

    def items(self):
        """Nonzero entries as ((i, j), value), in row-major order."""
        for i in sorted(self._rows):
            row = self._rows[i]
            for j in sorted(row):
                yield (i, j), row[j]

    def row(self, i):
        return dict(self._rows.get(i, {}))

    def column(self, j):
        return {i: row[j] for i, row in self._rows.items() if j in row}

    def nnz(self):
        return sum(len(r) for r in self._rows.values())

    def is_zero(self):
        return not self._rows

    def to_dense(self):
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for i, row in self._rows.items():
            for j, v in row.items():
                out[i][j] = v
        return out

    def flatten(self):
        """Row-major vector of length rows*cols, as a sparse dict."""
        c = self.cols
        return {i * c + j: v for i, row in self._rows.items() for j, v in row.items()}

    def trace(self):
        return sum((row.get(i, 0) for i, row in self._rows.items()), Fraction(0))

    def transpose(self):
        data = {}
        for i, row in self._rows.items():
            for j, v in row.items():
                data.setdefault(j, {})[i] = v
        return RationalMatrix._from_rows(self.cols, self.rows, data)

    # arithmetic ----------------------------------------------------------

    def __matmul__(self, other):
        return matmul(self, other)

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch %s vs %s" % (self.shape, other.shape))

    def __add__(self, other):
        self._check_same_shape(other)
        data = {i: dict(r) for i, r in self._rows.items()}
        for i, row in other._rows.items():
            acc = data.setdefault(i, {})
            for j, v in row.items():
                s = acc.get(j, 0) + v
                if s:
                    acc[j] = s
                else:
                    acc.pop(j, None)
        return RationalMatrix._from_rows(self.rows, self.cols, data)

    def __neg__(self):
        return RationalMatrix._from_rows(
            self.rows, self.cols,
            {i: {j: -v for j, v in r.items()} for i, r in self._rows.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        if not scalar:
            return RationalMatrix(self.rows, self.cols)
        return RationalMatrix._from_rows(
            self.rows, self.cols,
            {i: {j: scalar * v for j, v in r.items()} for i, r in self._rows.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    __hash__ = None

    def __repr__(self):
        return "RationalMatrix(%d, %d, nnz=%d)" % (self.rows, self.cols, self.nnz())

    def __str__(self):
        dense = self.to_dense()
        return "\n".join("[" + " ".join(format_rational(v) for v in row) + "]" for row in dense)

    # serialization ---------------------------------------------------------

    def to_json(self):
        """Row-major nested lists of rational strings."""
        return [[format_rational(v) for v in row] for row in self.to_dense()]

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_dense([[parse_rational(v) for v in row] for row in data])


def matmul(A, B):
    if A.cols != B.rows:
        raise ValueError("cannot multiply %dx%d by %dx%d" % (A.rows, A.cols, B.rows, B.cols))
    out = {}
    brows = B._rows
    for i, arow in A._rows.items():
        acc = {}
        for k, a in arow.items():
            brow = brows.get(k)
            if brow is None:
                continue
            for j, b in brow.items():
                acc[j] = acc.get(j, 0) + a * b
        acc = {j: v for j, v in acc.items() if v}
        if acc:
            out[i] = acc
    return RationalMatrix._from_rows(A.rows, B.cols, out)


def kron(A, B):
    """Kronecker product, row index i*B.rows + k, column j*B.cols + l."""
    data = {}
    for i, arow in A._rows.items():
        for k, brow in B._rows.items():
            row = data.setdefault(i * B.rows + k, {})
            for j, a in arow.items():
                for l, b in brow.items():
                    row[j * B.cols + l] = a * b
    return RationalMatrix._from_rows(A.rows * B.rows, A.cols * B.cols, data)


def block_diagonal(blocks):
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    data = {}
    r0 = c0 = 0
    for b in blocks:
        for i, row in b._rows.items():
            data[r0 + i] = {c0 + j: v for j, v in row.items()}
        r0 += b.rows
        c0 += b.cols
    return RationalMatrix._from_rows(rows, cols, data)


# integer row machinery -------------------------------------------------------

def _lcm(a, b):
    return a // gcd(a, b) * b


def _integer_row(row):
    """Scale a sparse rational row to a primitive integer row."""
    den = 1
    for v in row.values():
        den = _lcm(den, Fraction(v).denominator)
    out = {j: int(Fraction(v) * den) for j, v in row.items() if v}
    return _primitive(out)


def _primitive(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {j: v // g for j, v in row.items()}
    return row


def _combine(row, brow, c):
    """Eliminate column c of ``row`` using ``brow`` (which has c), fraction-free."""
    p = brow[c]
    v = row[c]
    g = gcd(p, v)
    a, b = p // g, v // g
    out = {j: a * x for j, x in row.items()}
    for j, y in brow.items():
        s = out.get(j, 0) - b * y
        if s:
            out[j] = s
        else:
            out.pop(j, None)
    return _primitive(out)


class Echelon:
    """
    Incremental reduced row echelon form of a growing set of rows.

    Rows are primitive integer vectors.  Each stored row owns one pivot
    column (its leading entry, kept positive), and no stored row has a
    nonzero entry in another row's pivot column.  Up to the positive
    scaling of each row this is the RREF of the span, so the object's state
    after adding a set of rows is independent of insertion order.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = {}            # pivot col -> row
        self._occ = {}              # col -> set of pivot cols whose row has it

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, row):
        for c in [c for c in row if c in self.pivots]:
            if c in row:
                row = _combine(row, self.pivots[c], c)
        return row

    def add(self, row):
        """Add a row (sparse dict, rational or integer); True if the rank grew."""
        if not row:
            return False
        row = _integer_row(row)
        row = self.reduce(row)
        if not row:
            return False
        lead = min(row)
        if row[lead] < 0:
            row = {j: -v for j, v in row.items()}
        for pc in list(self._occ.get(lead, ())):
            old = self.pivots[pc]
            new = _combine(old, row, lead)
            if new[pc] < 0:
                new = {j: -v for j, v in new.items()}
            self._replace(pc, old, new)
        self.pivots[lead] = row
        for j in row:
            if j != lead:
                self._occ.setdefault(j, set()).add(lead)
        return True

    def _replace(self, pc, old, new):
        for j in old:
            if j != pc and j not in new:
                s = self._occ.get(j)
                if s is not None:
                    s.discard(pc)
        for j in new:
            if j != pc:
                self._occ.setdefault(j, set()).add(pc)
        self.pivots[pc] = new

    def rref_rows(self):
        """Normalized rows (pivot entry 1) as Fraction dicts, by pivot column."""
        out = []
        for pc in sorted(self.pivots):
            row = self.pivots[pc]
            p = row[pc]
            out.append({j: Fraction(v, p) for j, v in sorted(row.items())})
        return out

    def nullspace(self):
        """Canonical kernel basis, one sparse vector per free column."""
        free = [j for j in range(self.ncols) if j not in self.pivots]
        basis = []
        for f in free:
            vec = {f: Fraction(1)}
            for pc in self._occ.get(f, ()):
                row = self.pivots[pc]
                vec[pc] = Fraction(-row[f], row[pc])
            basis.append(dict(sorted(vec.items())))
        return basis


def _bareiss_rank(rows, ncols):
    """Rank of a dense integer matrix by fraction-free Bareiss elimination."""
    M = [list(r) for r in rows]
    nrows = len(M)
    rank = 0
    prev = 1
    for c in range(ncols):
        if rank == nrows:
            break
        cands = [r for r in range(rank, nrows) if M[r][c]]
        if not cands:
            continue
        p = min(cands, key=lambda r: (abs(M[r][c]).bit_length(), r))
        M[rank], M[p] = M[p], M[rank]
        piv = M[rank]
        pv = piv[c]
        for r in range(rank + 1, nrows):
            row = M[r]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (row[j] * pv - f * piv[j]) // prev
            row[c] = 0
        prev = pv
        rank += 1
    return rank


def _as_rows(A):
    if isinstance(A, RationalMatrix):
        return [A.row(i) for i in range(A.rows)], A.cols
    dense = [list(r) for r in A]
    ncols = len(dense[0]) if dense else 0
    return [{j: Fraction(v) for j, v in enumerate(r) if v} for r in dense], ncols


def rank(A):
    """Exact rank over Q."""
    rows, ncols = _as_rows(A)
    rows = [r for r in rows if r]
    if not rows:
        return 0
    if ncols < DENSE_CUTOFF:
        dense = []
        for r in rows:
            ir = _integer_row(r)
            dense.append([ir.get(j, 0) for j in range(ncols)])
        return _bareiss_rank(dense, ncols)
    ech = Echelon(ncols)
    for r in rows:
        ech.add(r)
    return ech.rank


def echelon_of(A):
    rows, ncols = _as_rows(A)
    ech = Echelon(ncols)
    for r in rows:
        ech.add(r)
    return ech


def nullspace_basis(A):
    """Basis of {v : A v = 0} as dense lists of Fractions (canonical)."""
    ech = echelon_of(A)
    return [[vec.get(j, Fraction(0)) for j in range(ech.ncols)] for vec in ech.nullspace()]


def solve(A, b):
    """
    One exact solution x of A x = b (free variables set to zero).

    Raises ValueError when the system is inconsistent.
    """
    rows, ncols = _as_rows(A)
    b = list(b)
    if len(b) != len(rows):
        raise ValueError("right-hand side has length %d, expected %d" % (len(b), len(rows)))
    ech = Echelon(ncols + 1)
    for r, bi in zip(rows, b):
        aug = dict(r)
        if bi:
            aug[ncols] = Fraction(bi)
        ech.add(aug)
    if ncols in ech.pivots:
        raise ValueError("inconsistent linear system")
    x = [Fraction(0)] * ncols
    for pc, row in ech.pivots.items():
        x[pc] = Fraction(row.get(ncols, 0), row[pc])
    return x


def span_dimension(mats):
    """Dimension of the linear span of equally sized matrices."""
    mats = list(mats)
    if not mats:
        return 0
    shape = mats[0].shape
    for M in mats:
        if M.shape != shape:
            raise ValueError("size mismatch %s vs %s" % (M.shape, shape))
    return rank(_FlatRows(mats))


class _FlatRows(RationalMatrix):
    """Flattened matrices as the rows of one matrix (internal helper)."""

    def __init__(self, mats):
        r, c = mats[0].shape
        super().__init__(len(mats), r * c)
        self._rows = {i: M.flatten() for i, M in enumerate(mats) if not M.is_zero()}


def span_basis(mats):
    """Canonical basis (RREF of flattenings) of the span of the given matrices."""
    mats = list(mats)
    if not mats:
        return []
    r, c = mats[0].shape
    ech = Echelon(r * c)
    for M in mats:
        ech.add(M.flatten())
    return [_unflatten(v, r, c) for v in ech.rref_rows()]


def _unflatten(vec, r, c):
    data = {}
    for k, v in vec.items():
        i, j = divmod(k, c)
        data.setdefault(i, {})[j] = Fraction(v)
    return RationalMatrix._from_rows(r, c, data)


def commutator_equations(G):
    """
    Linear equations in the m*m entries of T (index i*m + j) expressing
    T G - G T = 0, one sparse row per nonzero equation.
    """
    m = G.rows
    if G.cols != m:
        raise ValueError("generator is not square: %dx%d" % G.shape)
    cols = {}
    for i, row in G._rows.items():
        for j, v in row.items():
            cols.setdefault(j, {})[i] = v
    eqs = []
    live_i = set(G._rows)
    live_j = set(cols)
    for i in range(m):
        grow = G._rows.get(i, {})
        for j in range(m):
            if i not in live_i and j not in live_j:
                continue
            eq = {}
            # (T G)[i, j] = sum_k T[i, k] G[k, j]
            for k, v in cols.get(j, {}).items():
                eq[i * m + k] = eq.get(i * m + k, 0) + v
            # (G T)[i, j] = sum_k G[i, k] T[k, j]
            for k, v in grow.items():
                key = k * m + j
                s = eq.get(key, 0) - v
                if s:
                    eq[key] = s
                else:
                    eq.pop(key, None)
            if eq:
                eqs.append(eq)
    return eqs


def commutant_basis(gens, size=None):
    """
    Basis of {T : T G = G T for all G in gens}.

    Computed as the kernel of the stacked commutator equations.  The basis
    is the canonical RREF kernel basis, so it does not depend on the order
    of the generators.  With no generators, ``size`` gives m and the result
    is the basis of all m x m matrices.
    """
    gens = list(gens)
    if not gens:
        if size is None:
            raise ValueError("need size when no generators are given")
        m = size
    else:
        m = gens[0].rows
    for G in gens:
        if G.shape != (m, m):
            raise ValueError("generators must all be %dx%d" % (m, m))
    ech = Echelon(m * m)
    for G in gens:
        for eq in commutator_equations(G):
            ech.add(eq)
    return [_unflatten(v, m, m) for v in ech.nullspace()]


def commutant_dimension(gens, size=None):
    gens = list(gens)
    m = gens[0].rows if gens else size
    ech = Echelon(m * m)
    for G in gens:
        for eq in commutator_equations(G):
            ech.add(eq)
    return m * m - ech.rank
