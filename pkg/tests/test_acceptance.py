"""
One test per acceptance criterion.  Each prints a single PASS/FAIL line
(visible under ``pytest -v`` or ``pytest -s``) and then asserts.
All comparisons are exact; the tolerance is zero throughout.
"""

import random
import time
from math import comb, factorial

import pytest

from rookschur import schur
from rookschur.combinatorics import partitions
from rookschur.duality import verify_duality
from rookschur.rook import compose, enumerate_rook, identity, symmetric_group
from rookschur.rook_algebra import MonoidAlgebraElement, phi, phi_inverse, rho_star
from rookschur.specht import specht_rep
from rookschur.tensor import (INF, act_left, act_right, decomposable, left_schur_action,
                              right_algebra_action, right_rook_action, tensor_basis)

from oracles import expand, place_permute


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print("\nCRITERION %d: %s  %s" % (number, "PASS" if ok else "FAIL", detail))
        assert ok, detail
    return emit


def test_criterion_1_cardinality(report):
    t0 = time.perf_counter()
    sizes = [len(enumerate_rook(n)) for n in range(1, 6)]
    formula = [sum(comb(n, r) ** 2 * factorial(r) for r in range(n + 1)) for n in range(1, 6)]
    dt = time.perf_counter() - t0
    ok = sizes == formula == [2, 7, 34, 209, 1546] and dt < 10
    report(1, ok, "sizes %s, %.2fs (< 10s)" % (sizes, dt))


def test_criterion_2_phi_isomorphism(report):
    t0 = time.perf_counter()
    R3 = enumerate_rook(3)
    images = {s: phi(s) for s in R3}
    pairs = sum(1 for s in R3 for t in R3 if images[compose(s, t)] == images[s] * images[t])
    R4 = enumerate_rook(4)
    round_trips = sum(1 for s in R4 if phi_inverse(phi(s)) == MonoidAlgebraElement.from_perm(s))
    dt = time.perf_counter() - t0
    ok = pairs == 1156 and round_trips == 209 and dt < 30
    report(2, ok, "multiplicative on %d/1156 pairs, round trip on %d/209, %.2fs (< 30s)"
           % (pairs, round_trips, dt))


def test_criterion_3_munn_representations(report):
    R3 = enumerate_rook(3)
    hom = True
    for r in range(4):
        for mu in partitions(r):
            mats = {s: rho_star(mu, s) for s in R3}
            hom &= all(mats[compose(s, t)] == mats[s] @ mats[t] for s in R3 for t in R3)
    squares = {n: sum((specht_rep(mu).dim * comb(n, r)) ** 2
                      for r in range(n + 1) for mu in partitions(r)) for n in range(1, 5)}
    sizes = {n: len(enumerate_rook(n)) for n in range(1, 5)}
    ok = hom and squares == sizes
    report(3, ok, "homomorphism on R_3 for all mu |- r <= 3: %s; sum of squares %s vs %s"
           % (hom, squares, sizes))


def test_criterion_4_extended_schur(report):
    dims = {(d, n): len(schur.enumerate_basis(d, n)) for d, n in [(1, 1), (2, 2), (2, 3), (3, 2)]}
    dims_ok = dims == {(1, 1): 2, (2, 2): 15, (2, 3): 35, (3, 2): 55} and all(
        v == comb(d * d + n, n) for (d, n), v in dims.items())
    B = [schur.SchurElement.basis_element(2, 2, x) for x in schur.enumerate_basis(2, 2)]
    prod = {(i, j): B[i] * B[j] for i in range(15) for j in range(15)}
    triples = sum(1 for i in range(15) for j in range(15) for k in range(15)
                  if prod[(i, j)] * B[k] == B[i] * prod[(j, k)])
    unit_ok = True
    for d, n in [(2, 2), (3, 2)]:
        u = schur.unit(d, n)
        for x in schur.enumerate_basis(d, n):
            e = schur.SchurElement.basis_element(d, n, x)
            unit_ok &= (u * e == e == e * u)
    ok = dims_ok and triples == 15 ** 3 and unit_ok
    report(4, ok, "dims %s; associative on %d/3375 triples; unit laws %s"
           % (sorted(dims.values()), triples, unit_ok))


def test_criterion_5_commuting_actions(report):
    counts = {}
    for d in (2, 3):
        n = 2
        good = total = 0
        for x in schur.enumerate_basis(d, n):
            xi = schur.SchurElement.basis_element(d, n, x)
            for t in tensor_basis(d, n):
                for s in enumerate_rook(n):
                    total += 1
                    good += act_right(left_schur_action(xi, t), s) == act_left(xi, right_rook_action(t, s))
        counts[d] = (good, total)
    ok = counts[2] == (15 * 9 * 7,) * 2 and counts[3][0] == counts[3][1] == 55 * 16 * 7
    report(5, ok, "(d=2,n=2) %d/%d, (d=3,n=2) %d/%d" % (counts[2] + counts[3]))


def test_criterion_6_double_centralizer(report):
    t0 = time.perf_counter()
    r22 = verify_duality(2, 2)
    dt22 = time.perf_counter() - t0
    t0 = time.perf_counter()
    r32 = verify_duality(3, 2)
    dt32 = time.perf_counter() - t0
    ok = ((r22.commutant_of_rook_dim, r22.commutant_of_schur_dim) == (15, 7)
          and (r32.commutant_of_rook_dim, r32.commutant_of_schur_dim) == (55, 7)
          and r22.rook_kernel_dim == r22.schur_kernel_dim == 0
          and r32.rook_kernel_dim == r32.schur_kernel_dim == 0
          and r22.passed and r32.passed and dt22 < 60 and dt32 < 60)
    report(6, ok, "(2,2): %d/%d in %.2fs; (3,2): %d/%d in %.2fs; kernels 0"
           % (r22.commutant_of_rook_dim, r22.commutant_of_schur_dim, dt22,
              r32.commutant_of_rook_dim, r32.commutant_of_schur_dim, dt32))


def test_criterion_6_big_case(report):
    t0 = time.perf_counter()
    r = verify_duality(3, 3, big=True)
    dt = time.perf_counter() - t0
    ok = (r.commutant_of_rook_dim, r.commutant_of_schur_dim) == (220, 34) and r.passed
    report(6, ok, "(3,3) with big=True: %d/%d, kernel %d, %.2fs (no bound)"
           % (r.commutant_of_rook_dim, r.commutant_of_schur_dim, r.rook_kernel_dim, dt))


def test_criterion_7_boundary(report):
    r = verify_duality(1, 2)
    ok = r.rook_image_dim == 6 and r.rook_kernel_dim > 0
    report(7, ok, "(d=1,n=2): rook image %d < 7, kernel %d" % (r.rook_image_dim, r.rook_kernel_dim))


def test_criterion_8_place_permutations(report):
    rnd = random.Random(2024)
    checked = 0
    ok = True
    for _ in range(25):
        vectors = [[rnd.randint(-3, 3) for _ in range(3)] for _ in range(2)]
        v = decomposable(vectors)
        for s in symmetric_group(2):
            ok &= act_right(v, s) == expand(place_permute(vectors, s.images), INF)
            checked += 1
    report(8, ok, "%d random decomposable tensors x |S_2| agree with factor permutation" % (checked // 2))


def test_criterion_9_actions_through_phi(report):
    good = total = 0
    for s in enumerate_rook(2):
        image = phi(s)
        for t in tensor_basis(2, 2):
            total += 1
            good += right_rook_action(t, s) == right_algebra_action(t, image)
    report(9, good == total == 7 * 9, "t.s = t.phi(s) on %d/%d (sigma, t) pairs" % (good, total))
