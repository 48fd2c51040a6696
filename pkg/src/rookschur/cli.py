"""
Command line front end.  Every subcommand prints one JSON document to
stdout; diagnostics go to stderr.

Exit status: 0 on success, 1 when a verification check fails, 2 on a usage
error (bad arguments, out-of-range parameters, resource guards).
"""

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import duality, rook_algebra, schur, tensor
from .combinatorics import format_partition, parse_partition
from .errors import ResourceLimitError
from .rook import PartialPerm, compose, enumerate_rook, rook_size

log = logging.getLogger("rookschur")

MAX_N = 6


class UsageError(Exception):
    pass


def _num(q):
    """Integral rationals as JSON numbers, the rest as "p/q" strings."""
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


def _matrix(M):
    return [[_num(v) for v in row] for row in M.to_dense()]


def _vector(v):
    return [{"coeff": _num(c), "index": tensor.format_index(t)} for t, c in sorted(v.items())]


def _perm(text, n):
    try:
        s = PartialPerm.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc))
    if s.n != n:
        raise UsageError("sigma %s has length %d, expected n=%d" % (text, s.n, n))
    return s


def _schur_element(text, d, n):
    text = text.strip()
    try:
        if text.startswith("["):
            return schur.SchurElement.from_json(d, n, json.loads(text))
        return schur.SchurElement.basis_element(d, n, schur.XiBasisElement.parse(text))
    except (ValueError, KeyError) as exc:
        raise UsageError("cannot read Schur element %r: %s" % (text, exc))


def _index(text, d, n):
    try:
        t = tensor.parse_index(text)
        tensor.check_index(t, d, n)
    except ValueError as exc:
        raise UsageError(str(exc))
    return t


def _need_n(n, big=False):
    if n < 0:
        raise UsageError("n must be non-negative")
    if n > MAX_N and not big:
        raise UsageError("n = %d exceeds %d" % (n, MAX_N))


# subcommands ---------------------------------------------------------------
# each returns (payload, ok)

def cmd_rook_size(a):
    _need_n(a.n, big=True)
    return {"n": a.n, "size": rook_size(a.n)}, True


def cmd_enumerate(a):
    _need_n(a.n)
    elems = enumerate_rook(a.n)
    return {"n": a.n, "size": len(elems), "elements": [s.one_line() for s in elems]}, \
        len(elems) == rook_size(a.n)


def cmd_phi(a):
    s = _perm(a.sigma, a.n)
    return {"n": a.n, "sigma": s.one_line(), "phi": rook_algebra.phi(s).to_json()}, True


def cmd_phi_roundtrip(a):
    _need_n(a.n)
    elems = enumerate_rook(a.n)
    bad = [s.one_line() for s in elems
           if rook_algebra.phi_inverse(rook_algebra.phi(s))
           != rook_algebra.MonoidAlgebraElement.from_perm(s)]
    mult = None
    if a.multiplicative:
        images = {s: rook_algebra.phi(s) for s in elems}
        mult = all(images[compose(x, y)] == images[x] * images[y] for x in elems for y in elems)
    out = {"n": a.n, "elements": len(elems), "failures": bad, "pass": not bad and mult is not False}
    if mult is not None:
        out["multiplicative"] = mult
    return out, out["pass"]


def cmd_irrep(a):
    s = _perm(a.sigma, a.n)
    try:
        mu = parse_partition(a.mu)
    except ValueError as exc:
        raise UsageError(str(exc))
    if sum(mu) > a.n:
        raise UsageError("mu = %s is a partition of %d > n" % (a.mu, sum(mu)))
    M = rook_algebra.rho_star(mu, s)
    return {"n": a.n, "mu": format_partition(mu), "sigma": s.one_line(),
            "dim": M.rows, "matrix": _matrix(M)}, True


def cmd_munn_check(a):
    _need_n(a.n)
    if a.n > 4 and not a.big:
        raise UsageError("munn-check beyond n=4 needs --big")
    checks = rook_algebra.munn_check(a.n)
    ok = all(c[1] for c in checks)
    return {"n": a.n, "checks": [{"name": nm, "pass": p, "detail": det} for nm, p, det in checks],
            "pass": ok}, ok


def cmd_schur_dim(a):
    formula = schur.dimension(a.d, a.n)
    out = {"d": a.d, "n": a.n, "dim": formula}
    if a.enumerate:
        out["enumerated"] = len(schur.enumerate_basis(a.d, a.n))
        return out, out["enumerated"] == formula
    return out, True


def cmd_schur_product(a):
    x = _schur_element(a.xi, a.d, a.n)
    y = _schur_element(a.eta, a.d, a.n)
    return {"d": a.d, "n": a.n, "product": schur.product(x, y).to_json()}, True


def cmd_act_left(a):
    x = _schur_element(a.xi, a.d, a.n)
    t = _index(a.index, a.d, a.n)
    return {"d": a.d, "n": a.n, "index": tensor.format_index(t),
            "result": _vector(tensor.left_schur_action(x, t))}, True


def cmd_act_right(a):
    t = _index(a.index, a.d, a.n)
    out = {"d": a.d, "n": a.n, "index": tensor.format_index(t)}
    if (a.sigma is None) == (a.term is None):
        raise UsageError("give exactly one of --sigma or --term")
    if a.sigma is not None:
        s = _perm(a.sigma, a.n)
        out["sigma"] = s.one_line()
        out["result"] = _vector(tensor.right_rook_action(t, s))
    else:
        try:
            b = rook_algebra.BasisTerm.parse(a.term)
        except (ValueError, KeyError) as exc:
            raise UsageError("cannot read basis term %r: %s" % (a.term, exc))
        if any(x > a.n for x in b.I + b.J):
            raise UsageError("term %s does not live in R_%d" % (b, a.n))
        out["term"] = str(b)
        out["result"] = _vector(tensor.right_matrix_action(t, b))
    return out, True


def cmd_verify_duality(a):
    report = duality.verify_duality(a.d, a.n, big=a.big, workers=a.workers)
    return report.to_dict(), report.passed


def build_parser():
    p = argparse.ArgumentParser(prog="rookschur", description=__doc__.strip().splitlines()[0])
    p.add_argument("--pretty", action="store_true", help="indented JSON")
    p.add_argument("--out", metavar="FILE", help="also write the JSON to FILE")
    p.add_argument("-v", "--verbose", action="store_true")
    # the same flags are accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS)
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *args, help=None):
        sp = sub.add_parser(name, help=help, parents=[common])
        for flag in args:
            if flag in ("d", "n"):
                sp.add_argument("--" + flag, type=int, required=True)
            else:
                sp.add_argument("--" + flag, required=True)
        sp.set_defaults(func=fn)
        return sp

    add("rook-size", cmd_rook_size, "n", help="|R_n| from the counting formula")
    add("enumerate", cmd_enumerate, "n", help="list R_n in one-line notation")
    add("phi", cmd_phi, "n", "sigma", help="image of sigma in the matrix algebra")
    rt = add("phi-roundtrip", cmd_phi_roundtrip, "n", help="check phi^-1 phi = id on R_n")
    rt.add_argument("--multiplicative", action="store_true", help="also check phi(st) = phi(s)phi(t)")
    add("irrep", cmd_irrep, "n", "mu", "sigma", help="matrix of rho*_mu(sigma)")
    mc = add("munn-check", cmd_munn_check, "n", help="homomorphism and sum-of-squares checks")
    mc.add_argument("--big", action="store_true")
    sd = add("schur-dim", cmd_schur_dim, "d", "n", help="dimension of S(d, n)")
    sd.add_argument("--enumerate", action="store_true", help="also count the basis")
    add("schur-product", cmd_schur_product, "d", "n", "xi", "eta", help="product in S(d, n)")
    add("act-left", cmd_act_left, "d", "n", "xi", "index", help="Schur element on a basis tensor")
    ar = sub.add_parser("act-right", help="rook element or matrix unit on a basis tensor",
                        parents=[common])
    ar.add_argument("--d", type=int, required=True)
    ar.add_argument("--n", type=int, required=True)
    ar.add_argument("--index", required=True)
    ar.add_argument("--sigma")
    ar.add_argument("--term")
    ar.set_defaults(func=cmd_act_right)
    vd = add("verify-duality", cmd_verify_duality, "d", "n", help="double centralizer checks")
    vd.add_argument("--big", action="store_true", help="lift the (d+1)^n < 64 guard")
    vd.add_argument("--workers", type=int, default=None,
                    help="process count (default from $%s)" % duality.THREADS_ENV)
    return p


def run(argv=None, stdout=None):
    stdout = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(name)s: %(message)s")
    for k in ("d", "n"):
        v = getattr(args, k, None)
        if v is not None and v < (1 if k == "d" else 0):
            print("error: --%s must be at least %d" % (k, 1 if k == "d" else 0), file=sys.stderr)
            return 2
    try:
        payload, ok = args.func(args)
    except (UsageError, ResourceLimitError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    if args.pretty:
        text = json.dumps(payload, indent=2)
    else:
        text = json.dumps(payload, separators=(",", ":"))
    print(text, file=stdout)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    if not ok:
        print("verification failed", file=sys.stderr)
    return 0 if ok else 1


def main():
    sys.exit(run())
