from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import coeff_list, inversion_polynomial
from qflag.bigpoly import MPoly
from qflag.errors import InvalidArguments
from qflag.qkernel import (
    Composition,
    SubsetIndicator,
    binomial,
    compositions,
    falling_qfactor,
    galois,
    galois_general,
    gengal_lemma_rhs,
    gengal_lemma_zero_extension,
    gengal_recursion_check,
    gengal_recursion_rhs,
    lemma_term,
    nonempty_subsets,
    pochhammer,
    qbinomial,
    qbinomial_by_division,
    qmultinomial,
    qmultinomial_by_division,
    qpoch,
)

q = MPoly.var("q")
P = MPoly.parse


def test_composition_and_subset():
    c = Composition((2, 0, 3))
    assert c.n == 5 and c.m == 3
    assert c.minus({1, 3}).parts == (1, 0, 2)
    assert SubsetIndicator(frozenset({2}), 3).vector == (0, 1, 0)
    with pytest.raises(InvalidArguments):
        Composition((1, -1))
    with pytest.raises(InvalidArguments):
        SubsetIndicator(frozenset({4}), 3)
    with pytest.raises(InvalidArguments):
        Composition((1, 1)).minus({4})


def test_enumeration_orders():
    assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert len(list(compositions(6, 4))) == comb(9, 3)
    assert list(nonempty_subsets(3)) == [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]


def test_pochhammer():
    assert pochhammer(q, q, 0) == 1
    assert qpoch(2) == (1 - q) * (1 - q**2)
    t = MPoly.var("t1")
    assert pochhammer(t, q, 3) == (1 - t) * (1 - t * q) * (1 - t * q**2)
    with pytest.raises(InvalidArguments):
        pochhammer(q, q, -1)


@pytest.mark.parametrize("n,i", [(0, 0), (3, 1), (5, 3), (4, 4)])
def test_falling_qfactor_matches_ratio(n, i):
    from qflag.bigpoly import poly_divide_exact

    assert falling_qfactor(n, i) == (-1) ** i * poly_divide_exact(qpoch(n), qpoch(n - i))


def test_qbinomial_examples():
    assert str(qbinomial(4, 2)) == "1 + q + 2*q^2 + q^3 + q^4"
    assert qbinomial(3, 1) == P("1 + q + q^2")
    assert qbinomial(0, 0) == 1
    assert qbinomial(7, 0) == qbinomial(7, 7) == 1
    for bad in [(3, 4), (3, -1)]:
        with pytest.raises(InvalidArguments):
            qbinomial(*bad)
        with pytest.raises(InvalidArguments):
            qbinomial_by_division(*bad)


@pytest.mark.parametrize("n", range(8))
def test_qbinomial_inversion_oracle(n):
    for k in range(n + 1):
        assert coeff_list(qbinomial(n, k)) == inversion_polynomial((k, n - k))
        assert qbinomial_by_division(n, k) == qbinomial(n, k)


@pytest.mark.parametrize("parts", [(1, 1, 1), (2, 1, 1), (2, 2, 1), (0, 3, 2), (1, 2, 0, 2), (3,)])
def test_qmultinomial_inversion_oracle(parts):
    assert coeff_list(qmultinomial(parts)) == inversion_polynomial(parts)
    assert qmultinomial_by_division(parts) == qmultinomial(parts)


def test_qmultinomial_examples():
    assert qmultinomial((1, 1, 1)) == P("1 + 2*q + 2*q^2 + q^3")
    assert qmultinomial((1, 1, 1)).evaluate({"q": 2}) == 21
    assert qmultinomial((2, 0)) == 1
    with pytest.raises(InvalidArguments):
        qmultinomial(())


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=1, max_size=5), st.randoms(use_true_random=False))
def test_qmultinomial_symmetric_and_at_one(parts, rnd):
    shuffled = list(parts)
    rnd.shuffle(shuffled)
    value = qmultinomial(tuple(parts))
    assert qmultinomial(tuple(shuffled)) == value
    # at q = 1 it is the ordinary multinomial
    expected, rest = 1, sum(parts)
    for k in parts:
        expected *= comb(rest, k)
        rest -= k
    assert value.evaluate({"q": 1}) == expected
    assert all(c > 0 for _, c in value.items())


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), st.data())
def test_qbinomial_properties(n, data):
    k = data.draw(st.integers(0, n))
    b = qbinomial(n, k)
    assert b == qbinomial(n, n - k)
    assert b.degree("q") == k * (n - k)
    assert b.evaluate({"q": 1}) == comb(n, k)
    if 0 < k < n:
        # the other q-Pascal rule, not the one used to build the table
        assert b == MPoly.monomial(q=n - k) * qbinomial(n - 1, k - 1) + qbinomial(n - 1, k)


def test_binomial():
    assert [binomial(5, k) for k in range(-1, 7)] == [0, 1, 5, 10, 10, 5, 1, 0]


def test_galois_values():
    assert [galois(n).evaluate({"q": 2}) for n in range(6)] == [1, 2, 5, 16, 67, 374]
    assert str(galois(1)) == "2"
    assert galois(2) == P("3 + q")
    assert [galois(n).evaluate({"q": 1}) for n in range(6)] == [2**n for n in range(6)]
    with pytest.raises(InvalidArguments):
        galois(-1)


@pytest.mark.parametrize("n", range(8))
def test_gengal_two_is_galois(n):
    assert galois_general(n, 2) == galois(n)


def test_gengal_at_one_counts_words():
    for n in range(6):
        for m in range(2, 5):
            assert galois_general(n, m).evaluate({"q": 1}) == m**n


def test_gengal_errors():
    with pytest.raises(InvalidArguments):
        galois_general(3, 1)
    with pytest.raises(InvalidArguments):
        galois_general(-1, 2)
    with pytest.raises(InvalidArguments):
        gengal_recursion_rhs(1, 3)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_gengal_recursion(m):
    for n in range(m - 1, 9):
        assert gengal_recursion_check(n, m)


def test_galois_classical_recursion():
    # G_(n+1) = 2 G_n + (q^n - 1) G_(n-1)
    for n in range(1, 10):
        assert galois(n + 1) == 2 * galois(n) + (MPoly.monomial(q=n) - 1) * galois(n - 1)


@pytest.mark.parametrize("parts", [(1, 1), (2, 3), (1, 1, 1), (2, 1, 3), (1, 2, 1, 1), (2, 2, 2)])
def test_lemma_expansion(parts):
    assert gengal_lemma_rhs(parts) == qmultinomial(parts)


@pytest.mark.parametrize("parts", [(2, 1, 3), (1, 1, 1, 1)])
def test_lemma_terms_nonnegative_at_q_at_least_one(parts):
    # each term is nonnegative as a value for q >= 1, though not coefficientwise
    for J in nonempty_subsets(len(parts)):
        term = lemma_term(parts, J)
        for qv in (1, 2, 3, 5):
            assert term.evaluate({"q": qv}) >= 0


def test_lemma_errors():
    with pytest.raises(InvalidArguments):
        gengal_lemma_rhs((0, 2))
    with pytest.raises(InvalidArguments):
        gengal_lemma_rhs((3,))


@pytest.mark.parametrize("parts", [(0, 2), (2, 0, 1), (0, 0, 3), (1, 0, 1, 0), (3, 0)])
def test_zero_extension(parts):
    assert gengal_lemma_zero_extension(parts) == qmultinomial(parts)
