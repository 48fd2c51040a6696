import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from rookschur import schur
from rookschur.combinatorics import enumerate_words
from rookschur.linalg import RationalMatrix, rank
from rookschur.rook import PartialPerm, compose, enumerate_rook, identity, symmetric_group, zero
from rookschur.rook_algebra import E, RookAlgebraElement, basis, one, phi
from rookschur.tensor import (INF, act_left, act_right, action_matrix_left, action_matrix_right,
                              action_matrix_right_algebra, basis_by_support, decomposable,
                              format_index, left_schur_action, parse_index, right_algebra_action,
                              right_matrix_action, right_rook_action, support, t_x_isomorphism,
                              tensor_basis)

from oracles import expand, place_permute

P = PartialPerm.parse


def basis_elements(d, n):
    return [schur.SchurElement.basis_element(d, n, x) for x in schur.enumerate_basis(d, n)]


def test_index_text():
    t = (6, INF, 2, INF, 2)
    assert format_index(t) == "6,inf,2,inf,2"
    assert parse_index("6,inf,2,inf,2") == t
    assert t_x_isomorphism(t) == (6, 2, 2)
    assert support(t) == (1, 3, 5)
    assert t_x_isomorphism((INF, INF)) == ()
    assert t_x_isomorphism((1, 2, 1)) == (1, 2, 1)


def test_basis_order_and_decomposition():
    B = tensor_basis(2, 2)
    assert B[:3] == ((1, 1), (1, 2), (1, INF)) and B[-1] == (INF, INF)
    for d, n in [(1, 3), (2, 2), (3, 3)]:
        groups = basis_by_support(d, n)
        assert sum(len(v) for v in groups.values()) == (d + 1) ** n
        assert sum(comb(n, r) * d ** r for r in range(n + 1)) == (d + 1) ** n
        for X, words in groups.items():
            assert sorted(t_x_isomorphism(t) for t in words) == enumerate_words(len(X), d)


def test_left_examples():
    u = schur.unit(2, 2)
    for t in tensor_basis(2, 2):
        assert left_schur_action(u, t) == {t: 1}
    x = schur.SchurElement(2, 2, {schur.xi((1,), (2,)): 1})
    assert left_schur_action(x, (2, INF)) == {(1, INF): 1}
    assert left_schur_action(x, (INF, INF)) == {}
    with pytest.raises(ValueError):
        left_schur_action(x, (1, 2, 3))


def test_left_preserves_support():
    for x in basis_elements(2, 2):
        for t in tensor_basis(2, 2):
            assert all(support(w) == support(t) for w in left_schur_action(x, t))


def test_left_matrices():
    B = basis_elements(2, 2)
    mats = [action_matrix_left(x) for x in B]
    assert action_matrix_left(schur.unit(2, 2)) == RationalMatrix.identity(9)
    for i, x in enumerate(B):
        for j, y in enumerate(B):
            assert action_matrix_left(x * y) == mats[i] @ mats[j]
    # linear in x
    assert action_matrix_left(B[3] + B[7].scale(2)) == mats[3] + mats[7] * 2


def test_left_block_diagonal_by_support():
    basis_ = tensor_basis(3, 2)
    for x in basis_elements(3, 2)[::5]:
        A = action_matrix_left(x)
        for (i, j), _ in A.items():
            assert support(basis_[i]) == support(basis_[j])


def test_t_x_intertwines():
    for x in basis_elements(2, 2):
        for t in tensor_basis(2, 2):
            r = len(support(t))
            inner = t_x_isomorphism(t)
            if r == 0:
                continue
            y = schur.SchurElement(2, r, {k: v for k, v in x.terms.items() if k.degree == r})
            image = {t_x_isomorphism(w): c for w, c in left_schur_action(x, t).items()}
            assert image == left_schur_action(y, inner)


def test_right_rook_example():
    t = (5, INF, INF, 2, 2)
    s = P("[5,-,1,2,4]")
    assert right_rook_action(t, s) == {(2, INF, 5, INF, 2): 1}
    assert right_rook_action((1, INF), zero(2)) == {}
    assert right_rook_action((INF, INF), zero(2)) == {(INF, INF): 1}


def test_right_rook_support_rule():
    for s in enumerate_rook(3):
        for t in tensor_basis(2, 3):
            out = right_rook_action(t, s)
            X = set(support(t))
            if not X <= set(s.range):
                assert out == {}
            else:
                (w,) = out
                assert set(support(w)) == {i for i in s.domain if s(i) in X}
                assert all(w[i - 1] == t[s(i) - 1] for i in support(w))


coords = st.lists(st.integers(-2, 2), min_size=3, max_size=3)


@given(st.lists(coords, min_size=2, max_size=3), st.data())
def test_place_permutations(vectors, data):
    n = len(vectors)
    s = data.draw(st.sampled_from(symmetric_group(n)))
    v = decomposable(vectors)
    assert v == expand(vectors, INF)
    assert act_right(v, s) == expand(place_permute(vectors, s.images), INF)


def test_right_matrix_examples():
    assert right_matrix_action((3, INF), E((1,), (2,))) == {(INF, 3): 1}
    assert right_matrix_action((3, INF), E((2,), (1,))) == {}
    u = one(2)
    for t in tensor_basis(3, 2):
        assert right_algebra_action(t, u) == {t: 1}


def test_right_matrix_support_rule():
    for b in basis(3):
        for t in tensor_basis(2, 3):
            out = right_matrix_action(t, b)
            if support(t) != b.I:
                assert out == {}
            else:
                (w,) = out
                assert support(w) == b.J


def test_right_matrix_is_module():
    B = basis(2)
    for t in tensor_basis(2, 2):
        for a in B:
            for b in B:
                x = RookAlgebraElement(2, {a: 1})
                y = RookAlgebraElement(2, {b: 1})
                step = {}
                for w, c in right_algebra_action(t, x).items():
                    for w2, c2 in right_algebra_action(w, y).items():
                        step[w2] = step.get(w2, 0) + c * c2
                step = {k: v for k, v in step.items() if v}
                assert step == right_algebra_action(t, x * y)


def test_right_actions_agree_through_phi():
    for d, n in [(2, 2), (2, 3)]:
        for s in enumerate_rook(n):
            for t in tensor_basis(d, n):
                assert right_rook_action(t, s) == right_algebra_action(t, phi(s))
            assert action_matrix_right(s, d) == action_matrix_right_algebra(phi(s), d)


def test_right_matrices():
    R = enumerate_rook(2)
    assert action_matrix_right(identity(2), 2) == RationalMatrix.identity(9)
    Z = action_matrix_right(zero(2), 2)
    assert rank(Z) == 1
    last = len(tensor_basis(2, 2)) - 1
    assert Z == RationalMatrix(9, 9, {(last, last): 1})
    for s in R:
        for t in R:
            assert action_matrix_right(compose(s, t), 2) == action_matrix_right(t, 2) @ action_matrix_right(s, 2)


def test_right_action_axiom_random_n3():
    R = enumerate_rook(3)
    rnd = random.Random(7)
    for _ in range(300):
        s, u = rnd.choice(R), rnd.choice(R)
        t = rnd.choice(tensor_basis(2, 3))
        assert right_rook_action(t, compose(s, u)) == act_right(right_rook_action(t, s), u)


@pytest.mark.parametrize("d", [2, 3])
def test_actions_commute(d):
    n = 2
    for x in basis_elements(d, n):
        for t in tensor_basis(d, n):
            for s in enumerate_rook(n):
                assert act_right(left_schur_action(x, t), s) == act_left(x, right_rook_action(t, s))


def test_left_action_commutes_with_matrix_units():
    for x in basis_elements(2, 2):
        for t in tensor_basis(2, 2):
            for b in basis(2):
                lhs = {}
                for w, c in left_schur_action(x, t).items():
                    for w2, c2 in right_matrix_action(w, b).items():
                        lhs[w2] = lhs.get(w2, 0) + c * c2
                lhs = {k: v for k, v in lhs.items() if v}
                assert lhs == act_left(x, right_matrix_action(t, b))


def test_group_elements_act_diagonally():
    # e_g acts on decomposable tensors by g on V and trivially on e_inf
    g = [[1, 2], [0, 3]]
    G = RationalMatrix.from_dense(g)
    eg = schur.group_element(G, 2)
    vectors = [[1, -1, 2], [2, 0, 1]]

    def apply_g(u):
        return [sum(g[i][j] * u[j] for j in range(2)) for i in range(2)] + [u[2]]

    expected = expand([apply_g(u) for u in vectors], INF)
    assert act_left(eg, decomposable(vectors)) == expected
