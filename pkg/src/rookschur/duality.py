"""
Brute-force checks of the double centralizer property on (x)^n U.

The left action of S(d, n) and the right action of R_n are turned into
explicit (d+1)^n square matrices; images are measured by span dimension and
centralizers by exact nullspaces of the commutator equations.
"""

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import schur
from .errors import ResourceLimitError
from .linalg import commutant_basis, solve, span_dimension
from .rook import enumerate_rook, idempotent, inverse, monoid_closure, rook_size
from .rook_algebra import irreducible_labels, rho_star
from .specht import adjacent_transposition
from .tensor import action_matrix_left, action_matrix_right

log = logging.getLogger(__name__)

# without big=True, (d+1)^n must stay below this, i.e. fewer than 4096
# unknowns in each commutant system; (d, n) = (3, 3) is the first case cut off
DEFAULT_TENSOR_DIM_LIMIT = 64
THREADS_ENV = "ROOKSCHUR_THREADS"


def rook_generators(n):
    """Adjacent transpositions together with the partial identity on 1..n-1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    gens = [adjacent_transposition(i, n) for i in range(1, n)]
    gens.append(idempotent(range(1, n), n))
    return gens


def generated_monoid(n):
    return monoid_closure(rook_generators(n), n)


@dataclass
class DualityReport:
    d: int
    n: int
    dim_tensor_end: int
    schur_image_dim: int
    rook_image_dim: int
    commutant_of_rook_dim: int
    commutant_of_schur_dim: int
    rook_kernel_dim: int
    schur_kernel_dim: int = 0
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(ok for _, _, _, ok in self.checks)

    def to_dict(self):
        out = asdict(self)
        out["checks"] = [{"name": a, "expected": b, "actual": c, "pass": ok}
                         for a, b, c, ok in self.checks]
        out["pass"] = self.passed
        return out

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)


def _check_size(d, n, big):
    m = (d + 1) ** n
    if m >= DEFAULT_TENSOR_DIM_LIMIT and not big:
        raise ResourceLimitError(
            "(d+1)^n = %d reaches the default limit %d; pass big=True (--big) to run it"
            % (m, DEFAULT_TENSOR_DIM_LIMIT))
    return m


def schur_matrices(d, n):
    return [action_matrix_left(schur.SchurElement.basis_element(d, n, x))
            for x in schur.enumerate_basis(d, n)]


def rook_matrices(d, n, elements=None):
    elements = enumerate_rook(n) if elements is None else elements
    return [action_matrix_right(s, d) for s in elements]


# workers for the process pool; they rebuild their own matrices so nothing
# large crosses the process boundary

def _job(name, d, n):
    if name == "schur_image":
        return span_dimension(schur_matrices(d, n))
    if name == "rook_image":
        return span_dimension(rook_matrices(d, n))
    if name == "rook_commutant":
        return len(commutant_basis(rook_matrices(d, n, rook_generators(n))))
    if name == "schur_commutant":
        return len(commutant_basis(schur_matrices(d, n)))
    raise KeyError(name)


JOBS = ("schur_image", "rook_image", "rook_commutant", "schur_commutant")


def _workers():
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def verify_duality(d, n, big=False, workers=None):
    m = _check_size(d, n, big)
    workers = _workers() if workers is None else workers
    if workers > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(JOBS))) as pool:
            futures = {k: pool.submit(_job, k, d, n) for k in JOBS}
            res = {k: f.result() for k, f in futures.items()}
    else:
        res = {}
        for k in JOBS:
            log.info("duality (%d, %d): %s", d, n, k)
            res[k] = _job(k, d, n)

    schur_dim = schur.dimension(d, n)
    size = rook_size(n)
    report = DualityReport(
        d=d, n=n, dim_tensor_end=m * m,
        schur_image_dim=res["schur_image"],
        rook_image_dim=res["rook_image"],
        commutant_of_rook_dim=res["rook_commutant"],
        commutant_of_schur_dim=res["schur_commutant"],
        rook_kernel_dim=size - res["rook_image"],
        schur_kernel_dim=schur_dim - res["schur_image"],
    )

    def check(name, expected, actual):
        report.checks.append((name, expected, actual, expected == actual))

    check("commutant_of_rook_dim = C(d^2+n, n)", schur_dim, report.commutant_of_rook_dim)
    check("schur_image_dim = C(d^2+n, n)", schur_dim, report.schur_image_dim)
    check("commutant_of_schur_dim = rook_image_dim", report.rook_image_dim,
          report.commutant_of_schur_dim)
    if d >= n:
        check("commutant_of_schur_dim = |R_n|", size, report.commutant_of_schur_dim)
        check("rook_image_dim = |R_n|", size, report.rook_image_dim)
        check("rook_kernel_dim = 0", 0, report.rook_kernel_dim)
    return report


def commuting_images(d, n):
    """True iff every Schur basis matrix commutes with every rook generator matrix."""
    S = schur_matrices(d, n)
    R = rook_matrices(d, n, rook_generators(n))
    return all(A @ B == B @ A for A in S for B in R)


def tensor_character(d, n, elements=None):
    """sigma -> trace of z -> z.sigma on (x)^n U."""
    elements = enumerate_rook(n) if elements is None else elements
    return {s: action_matrix_right(s, d).trace() for s in elements}


def isotypic_multiplicities(d, n, big=False):
    """
    Multiplicity of each rho*_mu in (x)^n U, as {(r, mu): m}.

    The right module is read as a left one through sigma -> M(sigma^-1); the
    trace is unchanged because sigma and its inverse have conjugate patterns.
    The irreducible characters are linearly independent on R_n, so the
    multiplicities are the unique rational solution of
    chi = sum_mu m_mu chi*_mu over all of R_n.
    """
    _check_size(d, n, big)
    elems = enumerate_rook(n)
    chi = tensor_character(d, n, elems)
    labels = irreducible_labels(n)
    rows = []
    for s in elems:
        rows.append([rho_star(mu, s).trace() for _, mu in labels])
    x = solve(rows, [chi[inverse(s)] for s in elems])
    out = {}
    for (r, mu), v in zip(labels, x):
        if v.denominator != 1 or v < 0:
            raise ArithmeticError("non-integral multiplicity %s for %s" % (v, mu))
        out[(r, mu)] = int(v)
    return out
