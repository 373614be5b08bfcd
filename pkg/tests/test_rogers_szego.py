from itertools import permutations

import pytest

from oracles import word_rs
from qflag.bigpoly import MPoly
from qflag.errors import InvalidArguments
from qflag.qkernel import galois_general
from qflag.rogers_szego import (
    euler_identity_check,
    generating_series,
    rs,
    rs_functional_series_check,
    rs_generating_check,
    rs_homogeneous,
    rs_qshift_lhs,
    rs_qshift_rhs,
    rs_qshift_single_rhs,
    rs_recursion_rhs,
    rs_single_recursion_check,
    rs_single_recursion_rhs,
    rs_two_variable_display,
    shift_substitute,
)

P = MPoly.parse
q, t1, t2 = MPoly.var("q"), MPoly.var("t1"), MPoly.var("t2")


def as_word_dict(poly, m):
    out = {}
    for e, c in poly.items():
        e = tuple(e) + (0,) * (2 + m)
        out[(e[0], tuple(e[3 : 3 + m - 1]))] = c
    return out


@pytest.mark.parametrize("n,m", [(0, 2), (3, 2), (5, 2), (2, 3), (4, 3), (3, 4), (4, 4)])
def test_rs_matches_word_oracle(n, m):
    assert as_word_dict(rs(n, m).value, m) == word_rs(n, m)


def test_rs_examples():
    assert rs_homogeneous(1, 2).value == t1 + t2
    assert rs(1, 2).value == 1 + t1
    assert rs(2, 2).value == 1 + (1 + q) * t1 + t1**2
    assert rs(2, 3).at_ones() == P("6 + 3*q") == galois_general(2, 3)
    assert rs(0, 4).value == 1
    with pytest.raises(InvalidArguments):
        rs(2, 1)
    with pytest.raises(InvalidArguments):
        rs(-1, 2)


@pytest.mark.parametrize("n,m", [(3, 3), (4, 4), (5, 2)])
def test_homogeneous_form(n, m):
    H = rs_homogeneous(n, m)
    for e, _ in H.value.items():
        assert sum(tuple(e)[3:]) == n
    assert H.dehomogenize() == rs(n, m)
    # symmetric under permuting the t variables
    padded = [((tuple(e) + (0,) * (3 + m))[:3 + m], c) for e, c in H.value.items()]
    for perm in permutations(range(m)):
        swapped = MPoly({e[:3] + tuple(e[3 + p] for p in perm): c for e, c in padded})
        assert swapped == H.value


@pytest.mark.parametrize("n", range(6))
def test_at_ones_is_gengal(n):
    for m in range(2, 5):
        assert rs(n, m).at_ones() == galois_general(n, m)


def test_single_recursion():
    assert rs_single_recursion_rhs(1) == rs(2, 2).value
    assert all(rs_single_recursion_check(n) for n in range(1, 11))
    with pytest.raises(InvalidArguments):
        rs_single_recursion_rhs(0)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_multivariate_recursion(m):
    for n in range(m - 1, 8):
        rhs = rs_recursion_rhs(n, m)
        assert rhs.n == n + 1 and rhs.value == rs(n + 1, m).value


def test_recursion_examples():
    assert rs_recursion_rhs(1, 2).value == (1 + t1) * rs(1, 2).value + t1 * (q - 1)
    assert rs_recursion_rhs(2, 3).value == rs_two_variable_display(2) == rs(3, 3).value
    assert rs_recursion_rhs(6, 4).value == rs(7, 4).value
    assert all(rs_two_variable_display(n) == rs(n + 1, 3).value for n in range(2, 8))
    with pytest.raises(InvalidArguments):
        rs_recursion_rhs(1, 3)


def test_qshift_examples():
    assert rs_qshift_single_rhs(1) == 1 + t1 * q
    assert rs_qshift_rhs(1, 2, {1}) == 1 + t1 * q
    expected = rs(2, 3).value.substitute("t1", t1 * q).substitute("t2", t2 * q)
    assert rs_qshift_rhs(2, 3, {1, 2}) == expected
    assert shift_substitute(t1 + t2, [2]) == t1 + q * t2
    with pytest.raises(InvalidArguments):
        rs_qshift_rhs(1, 3, {1, 2})
    with pytest.raises(InvalidArguments):
        rs_qshift_rhs(2, 3, set())


@pytest.mark.parametrize("m", [2, 3, 4])
def test_qshift_all_subsets(m):
    from qflag.qkernel import nonempty_subsets

    for J in nonempty_subsets(m - 1):
        for n in range(len(J), 7):
            assert rs_qshift_rhs(n, m, J) == rs_qshift_lhs(n, m, J)


@pytest.mark.parametrize("n", range(1, 8))
def test_single_qshift(n):
    assert rs_qshift_single_rhs(n) == rs_qshift_lhs(n, 2, {1})


def test_generating_series_low_order():
    F = generating_series(2, 2, 4)
    # [x^1] of 1/((t x)_inf (x)_inf) = (1 + t)/(1 - q)
    assert F.coefficient(1) == ((1 + t1) * (1 + q + q**2 + q**3 + q**4)).truncate("q", 4)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_generating_and_functional(m):
    assert rs_generating_check(m, 6, 8)
    assert rs_functional_series_check(m, 6, 8)


def test_euler_identity():
    assert euler_identity_check(8, 12)
    with pytest.raises(InvalidArguments):
        euler_identity_check(5, 3)
