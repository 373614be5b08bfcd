import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qflag.bigpoly import (
    MPoly,
    TruncSeries,
    elementary_symmetric,
    poly_add,
    poly_divide_exact,
    poly_eval_int,
    poly_mul,
    poly_substitute,
    series_from_poly,
    series_inverse,
    series_mul,
    series_shift_q,
)
from qflag.errors import CapMismatch, IndexOutOfRange, MissingVariable, NotAUnit, NotDivisible
from qflag.qkernel import qpoch

P = MPoly.parse
q, x, t1, t2 = (MPoly.var(v) for v in ("q", "x", "t1", "t2"))


def test_add():
    assert poly_add(P("1 + q"), P("q")) == P("1 + 2*q")
    assert poly_add(P("3*t1^2 - q"), 0) == P("3*t1^2 - q")
    zero = poly_add(P("1 - q"), P("q - 1"))
    assert zero.is_zero() and zero.terms() == {} and zero.degree() == -1


def test_mul():
    a, b = P("1 + q"), P("1 + q + q^2")
    # oracle: distribute by hand as b + q*b, using only addition and shifts
    shifted = MPoly({(e[0] + 1 if e else 1,): c for e, c in b.items()})
    assert poly_mul(a, b) == poly_add(b, shifted) == P("1 + 2*q + 2*q^2 + q^3")
    assert poly_mul(P("5*q*t2 + x"), 1) == P("5*q*t2 + x")
    assert poly_mul(1 - t1, 1 + t1) == 1 - t1**2


def test_divide_exact():
    assert poly_divide_exact(1 - q**2, 1 - q) == 1 + q
    assert poly_divide_exact(qpoch(2), qpoch(1) * qpoch(1)) == 1 + q
    with pytest.raises(NotDivisible):
        poly_divide_exact(1 + q, 1 - q)
    with pytest.raises(NotDivisible):
        poly_divide_exact(P("3 + q"), P("2"))
    assert poly_divide_exact(t1**2 * q - q, q * (t1 + 1)) == t1 - 1


def test_substitute():
    assert poly_substitute(1 + t1 * q, "t1", 1) == 1 + q
    assert poly_substitute(1 + q, "q", MPoly.var("u") ** 2) == P("1 + u^2")
    assert poly_substitute(t1**2 + 3, "t_1", 0) == 3
    assert poly_substitute(q * t1 + t2, "t1", t2 * q) == q**2 * t2 + t2


def test_eval():
    assert poly_eval_int(P("1 + 2*q + 2*q^2 + q^3"), {"q": 2}) == 21
    assert poly_eval_int(MPoly.const(7), {"q": 5, "t1": 3}) == 7
    assert poly_eval_int(1 + q, {"q": 1}) == 2
    assert poly_eval_int(q**100, {"q": 3}) == 3**100
    with pytest.raises(MissingVariable):
        poly_eval_int(q + t1, {"q": 2})


def test_elementary_symmetric():
    vals = [t1, t2, MPoly.const(1)]
    assert elementary_symmetric(1, vals) == t1 + t2 + 1
    assert elementary_symmetric(0, [q, x]) == 1
    assert elementary_symmetric(3, vals) == t1 * t2
    assert elementary_symmetric(2, vals) == t1 * t2 + t1 + t2
    with pytest.raises(IndexOutOfRange):
        elementary_symmetric(4, vals)


@pytest.mark.parametrize("i", range(5))
def test_elementary_symmetric_homogeneous(i):
    vals = [MPoly.var(f"t{j}") for j in range(1, 5)]
    e = elementary_symmetric(i, vals)
    assert {sum(exps) for exps, _ in e.items()} == {i}


def test_degree_and_variables():
    p = P("3*q^2*t3 - x + 7")
    assert p.degree("q") == 2 and p.degree("t3") == 1 and p.degree("u") == 0
    assert p.degree() == 3
    assert p.variables() == ["q", "x", "t3"]
    assert MPoly().degree("q") == -1


def test_text_form():
    assert str(P("1 + 2*q + 2*q^2 + 1*q^3")) == "1 + 2*q + 2*q^2 + q^3"
    assert str(P("t_1*q - 1*q")) == "-q + q*t1"
    assert str(MPoly()) == "0"
    assert P("0") == MPoly()
    assert P("2*q**3 - 4") == 2 * q**3 - 4
    for text in ["1 + 2*q + 2*q^2 + q^3", "t1^2 + t1*t2 + t2^2 + q*t1*t2", "-3 + u^5", "1 - x + x^2"]:
        assert str(P(text)) == text


@pytest.mark.parametrize("bad", ["", "1 +", "q^", "2 q", "q + * 3", "z", "1 / q"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        P(bad)


# --- properties -------------------------------------------------------------

names = ["q", "x", "u", "t1", "t2"]
monomials = st.fixed_dictionaries({n: st.integers(0, 3) for n in names})
polys = st.lists(st.tuples(st.integers(-20, 20), monomials), max_size=6).map(
    lambda ts: sum((MPoly.monomial(c, **e) for c, e in ts), MPoly())
)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == MPoly()


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_divide_inverts_mul(a, b):
    if b.is_zero():
        return
    assert poly_divide_exact(a * b, b) == a


@settings(max_examples=40, deadline=None)
@given(polys)
def test_text_round_trip(a):
    assert P(str(a)) == a


# --- truncated series -------------------------------------------------------


def test_series_from_poly():
    assert series_from_poly(1 - x * q**3, 2, 2) == TruncSeries.one(2, 2)
    assert series_from_poly(1 + x, 0, 5).coeffs == (MPoly.const(1),)
    assert series_from_poly(x**2, 2, 0).to_poly() == x**2


def test_series_mul():
    assert series_mul(series_from_poly(1 + x, 1, 3), series_from_poly(1 - x, 1, 3)) == TruncSeries.one(1, 3)
    s = series_from_poly(1 + 3 * x * t1 + x**2 * q, 2, 4)
    assert series_mul(s, TruncSeries.one(2, 4)) == s
    sq = series_from_poly(1 + x * q, 2, 1)
    assert series_mul(sq, sq).to_poly() == 1 + 2 * x * q
    with pytest.raises(CapMismatch):
        series_mul(series_from_poly(x, 2, 2), series_from_poly(x, 2, 3))


def test_series_inverse():
    assert series_inverse(series_from_poly(1 - x, 3, 3)).to_poly() == 1 + x + x**2 + x**3
    assert series_inverse(TruncSeries.one(4, 4)) == TruncSeries.one(4, 4)
    assert series_inverse(series_from_poly(1 - x * q, 2, 2)).to_poly() == 1 + x * q + x**2 * q**2
    # 1/(1 - q) mod q^4 in the constant coefficient
    assert series_inverse(series_from_poly(1 - q, 0, 3)).to_poly() == 1 + q + q**2 + q**3
    assert series_inverse(series_from_poly(-1 + x, 1, 1)).to_poly() == -1 - x
    with pytest.raises(NotAUnit):
        series_inverse(series_from_poly(2 + x, 2, 2))
    with pytest.raises(NotAUnit):
        series_inverse(series_from_poly(1 + t1 + x, 2, 2))


def test_series_shift_q():
    assert series_shift_q(series_from_poly(1 + x, 1, 2)).to_poly() == 1 + x * q
    assert series_shift_q(TruncSeries.one(3, 3)) == TruncSeries.one(3, 3)
    assert series_shift_q(series_from_poly(x**2, 2, 1)).to_poly() == 0


unit_series = st.lists(
    st.tuples(st.integers(-5, 5), st.integers(0, 3), st.integers(0, 4), st.integers(0, 2)), max_size=6
).map(lambda ts: 1 + sum((MPoly.monomial(c, x=a, q=b, t1=d) for c, a, b, d in ts if a + b > 0), MPoly()))


@settings(max_examples=40, deadline=None)
@given(unit_series, st.booleans())
def test_series_inverse_property(p, negate):
    s = series_from_poly(-p if negate else p, 3, 4)
    assert series_mul(s, series_inverse(s)) == TruncSeries.one(3, 4)


def test_truncated_euler_identity():
    # sum_n x^n prod_{j != n} (q)_j * prod_{i<=Q} (1 - x q^i) == prod_j (q)_j  mod (x^9, q^13)
    N, Q = 8, 12
    pochs = [qpoch(j) for j in range(N + 1)]
    left = MPoly()
    for n in range(N + 1):
        others = MPoly.const(1)
        for j in range(N + 1):
            if j != n:
                others = others * pochs[j]
        left = left + x**n * others
    product = MPoly.const(1)
    for i in range(Q + 1):
        product = product * (1 - x * q**i)
    everything = MPoly.const(1)
    for p in pochs:
        everything = everything * p
    lhs = series_mul(series_from_poly(left, N, Q), series_from_poly(product, N, Q))
    assert lhs == series_from_poly(everything, N, Q)
