import random
from math import comb

import pytest

from rookschur.combinatorics import partitions
from rookschur.linalg import RationalMatrix
from rookschur.rook import PartialPerm, compose, enumerate_rook, idempotent, identity, zero
from rookschur.rook_algebra import (BasisTerm, E, MonoidAlgebraElement, RookAlgebraElement, basis,
                                    dimension, multiply, munn_check, one, phi, phi_inverse,
                                    rho_star)
from rookschur.specht import specht_rep

P = PartialPerm.parse


def el(n, *terms):
    return RookAlgebraElement(n, {t: 1 for t in terms})


def test_multiply_rules():
    s, t = P("[2,1]"), P("[1,2]")
    a = el(3, E((1, 2), (1, 3), s))
    b = el(3, E((1, 3), (2, 3), t))
    assert multiply(a, b) == el(3, E((1, 2), (2, 3), compose(s, t)))
    c = el(3, E((1, 2), (2, 3), t))
    assert (a * c).is_zero()
    d = el(3, E((1,), (3,)))
    assert (a * d).is_zero()


def test_unit():
    for n in range(4):
        u = one(n)
        for b in basis(n):
            x = el(n, b)
            assert u * x == x == x * u


@pytest.mark.parametrize("n,dim", [(1, 2), (2, 7), (3, 34), (4, 209)])
def test_dimension(n, dim):
    assert dimension(n) == len(basis(n)) == dim


def test_phi_examples():
    assert phi(zero(2)) == el(2, E((), ()))
    assert phi(idempotent((1,), 1)) == el(1, E((), ()), E((1,), (1,)))
    swap = P("[2,1]")
    image = phi(swap)
    assert len(image) == 4
    assert E((1, 2), (1, 2), swap) in image.terms
    assert phi(identity(3)) == one(3)


def test_phi_inverse_examples():
    assert phi_inverse(E((), ()), 2) == MonoidAlgebraElement.from_perm(zero(2))
    x = phi_inverse(E((1,), (1,)), 1)
    assert x == MonoidAlgebraElement(1, {identity(1): 1, zero(1): -1})
    assert phi(x) == el(1, E((1,), (1,)))
    with pytest.raises(ValueError):
        phi_inverse(E((1,), (1,)))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_phi_multiplicative_exhaustive(n):
    R = enumerate_rook(n)
    images = {s: phi(s) for s in R}
    for s in R:
        for t in R:
            assert images[compose(s, t)] == images[s] * images[t]


def test_phi_multiplicative_random_n4():
    R = enumerate_rook(4)
    images = {s: phi(s) for s in R}
    rnd = random.Random(4)
    for _ in range(2000):
        s, t = rnd.choice(R), rnd.choice(R)
        assert images[compose(s, t)] == images[s] * images[t]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_phi_bijection(n):
    for s in enumerate_rook(n):
        assert phi_inverse(phi(s)) == MonoidAlgebraElement.from_perm(s)
    for b in basis(n):
        assert phi(phi_inverse(b, n)) == el(n, b)


def test_monoid_algebra_product_maps_to_matrix_product():
    R = enumerate_rook(2)
    rnd = random.Random(0)
    x = MonoidAlgebraElement(2, {s: rnd.randint(-2, 2) for s in R})
    y = MonoidAlgebraElement(2, {s: rnd.randint(-2, 2) for s in R})
    assert phi(x * y) == phi(x) * phi(y)


def test_basis_term_text():
    b = E((1, 3), (2, 3), P("[2,1]"))
    assert str(b) == "2; sigma=[2,1]; I=[1,3]; J=[2,3]"
    assert BasisTerm.parse(str(b)) == b
    with pytest.raises(ValueError):
        BasisTerm(2, P("[1]"), (1, 2), (1, 2))


def test_rho_star_examples():
    for s in enumerate_rook(2):
        assert rho_star((), s) == RationalMatrix.identity(1)
    assert rho_star((1,), P("[2,1]")) == RationalMatrix.from_dense([[0, 1], [1, 0]])
    assert rho_star((1,), P("[1,-]")) == RationalMatrix.from_dense([[1, 0], [0, 0]])
    with pytest.raises(ValueError):
        rho_star((2, 1), identity(2))


@pytest.mark.parametrize("r", range(4))
def test_rho_star_multiplicative_r3(r):
    R = enumerate_rook(3)
    for mu in partitions(r):
        mats = {s: rho_star(mu, s) for s in R}
        assert mats[identity(3)] == RationalMatrix.identity(specht_rep(mu).dim * comb(3, r))
        for s in R:
            for t in R:
                assert mats[compose(s, t)] == mats[s] @ mats[t]


@pytest.mark.parametrize("n", range(5))
def test_wedderburn_count(n):
    total = sum((specht_rep(mu).dim * comb(n, r)) ** 2 for r in range(n + 1) for mu in partitions(r))
    assert total == dimension(n)


def test_munn_check():
    for n in (1, 2, 3):
        for name, ok, detail in munn_check(n):
            assert ok, (n, name, detail)
