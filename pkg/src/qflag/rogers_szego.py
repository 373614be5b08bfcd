"""Multivariate Rogers-Szegő polynomials and the identities they satisfy.

``rs_homogeneous(n, m)`` is the homogeneous form in t_1..t_m and ``rs(n, m)``
its dehomogenization at t_m = 1.  Both are always built from the defining
composition sum; the recursion and shift formulas below are computed
separately and compared against them.
"""

from dataclasses import dataclass
from functools import lru_cache

from . import qkernel
from .bigpoly import (
    ONE,
    ZERO,
    MPoly,
    TruncSeries,
    elementary_symmetric,
    series_from_poly,
    series_inverse,
    series_mul,
    series_shift_q,
)
from .errors import InvalidArguments
from .qkernel import SubsetIndicator, compositions, falling_qfactor

q = MPoly.var("q")
x = MPoly.var("x")


def t(i):
    return MPoly.var(f"t{i}")


@dataclass(frozen=True)
class RSPoly:
    """H_n(t_1, ..., t_(m-1)) as a polynomial in q and t_1..t_(m-1)."""

    n: int
    m: int
    value: MPoly

    def at_ones(self):
        p = self.value
        for i in range(1, self.m):
            p = p.substitute(f"t{i}", 1)
        return p


@dataclass(frozen=True)
class RSHomogeneous:
    """H~_n(t_1, ..., t_m); every term has t-degree exactly n."""

    n: int
    m: int
    value: MPoly

    def dehomogenize(self):
        return RSPoly(self.n, self.m, self.value.substitute(f"t{self.m}", 1))


def _check_nm(n, m):
    if n < 0 or m < 2:
        raise InvalidArguments(f"need n >= 0 and m >= 2, got n={n}, m={m}")


def _composition_sum(n, nvars, parts_len):
    """sum over compositions of n into parts_len parts of qmultinomial * t^k (first nvars parts)."""
    terms = {}
    for parts in compositions(n, parts_len):
        coeff = qkernel.qmultinomial(parts)
        texps = parts[:nvars]
        for e, c in coeff.items():
            # e only involves q; t_i sits at position 2 + i
            key = ((e[0] if e else 0), 0, 0) + texps
            terms[key] = terms.get(key, 0) + c
    return MPoly(terms)


@lru_cache(maxsize=None)
def rs_homogeneous(n, m):
    _check_nm(n, m)
    return RSHomogeneous(n, m, _composition_sum(n, m, m))


@lru_cache(maxsize=None)
def rs(n, m):
    """H_n(t_1..t_(m-1)): the homogeneous sum with the last part's variable set to 1."""
    _check_nm(n, m)
    return RSPoly(n, m, _composition_sum(n, m - 1, m))


def tvars(m):
    return [t(i) for i in range(1, m)]


def rs_single_recursion_rhs(n):
    """(1 + t) H_n(t) + t (q^n - 1) H_(n-1)(t)."""
    if n < 1:
        raise InvalidArguments("needs n >= 1")
    t1 = t(1)
    return (1 + t1) * rs(n, 2).value + t1 * (MPoly.monomial(q=n) - 1) * rs(n - 1, 2).value


def rs_single_recursion_check(n):
    return rs(n + 1, 2).value == rs_single_recursion_rhs(n)


def rs_recursion_rhs(n, m):
    """sum_{i<m} e_(i+1)(t_1..t_(m-1), 1) prod_{j<i}(q^(n-j) - 1) H_(n-i)."""
    _check_nm(n, m)
    if n < m - 1:
        raise InvalidArguments(f"recursion needs n >= m - 1, got n={n}, m={m}")
    args = tvars(m) + [ONE]
    total = ZERO
    for i in range(m):
        total = total + (
            elementary_symmetric(i + 1, args) * falling_qfactor(n, i) * rs(n - i, m).value
        )
    return RSPoly(n + 1, m, total)


def rs_two_variable_display(n):
    """The m = 3 recursion written out with explicit elementary symmetric coefficients."""
    if n < 2:
        raise InvalidArguments("needs n >= 2")
    t1, t2 = t(1), t(2)
    qn = MPoly.monomial(q=n) - 1
    qn1 = MPoly.monomial(q=n - 1) - 1
    return (
        (1 + t1 + t2) * rs(n, 3).value
        + (t1 * t2 + t1 + t2) * qn * rs(n - 1, 3).value
        + t1 * t2 * qn * qn1 * rs(n - 2, 3).value
    )


def shift_substitute(p, J, scale=q):
    """Replace t_j by t_j * scale for every j in J."""
    for j in J:
        p = p.substitute(f"t{j}", t(j) * scale)
    return p


def rs_qshift_rhs(n, m, J):
    """sum_{i<=|J|} e_i(t_J) prod_{j<i}(q^(n-j) - 1) H_(n-i); equals H_n with t_j -> t_j q on J."""
    _check_nm(n, m)
    J = SubsetIndicator.coerce(J, m - 1)
    if not len(J):
        raise InvalidArguments("J must be nonempty")
    if n < len(J):
        raise InvalidArguments(f"needs n >= |J|, got n={n}, |J|={len(J)}")
    tJ = [t(j) for j in J]
    total = ZERO
    for i in range(len(J) + 1):
        total = total + elementary_symmetric(i, tJ) * falling_qfactor(n, i) * rs(n - i, m).value
    return total


def rs_qshift_lhs(n, m, J):
    J = SubsetIndicator.coerce(J, m - 1)
    return shift_substitute(rs(n, m).value, J)


def rs_qshift_single_rhs(n):
    """H_n(t) - t (1 - q^n) H_(n-1)(t)."""
    if n < 1:
        raise InvalidArguments("needs n >= 1")
    t1 = t(1)
    return rs(n, 2).value - t1 * (1 - MPoly.monomial(q=n)) * rs(n - 1, 2).value


def euler_factor(a, qcap):
    """prod_{i=0}^{qcap} (1 - a q^i): the part of (a; q)_inf that survives mod q^(qcap+1)."""
    return qkernel.pochhammer(a, q, qcap + 1)


def generating_series(m, xcap, qcap):
    """(t_1 x)_inf^-1 ... (t_(m-1) x)_inf^-1 (x)_inf^-1, truncated."""
    F = TruncSeries.one(xcap, qcap)
    for a in tvars(m) + [ONE]:
        factor = series_from_poly(euler_factor(a * x, qcap), xcap, qcap)
        F = series_mul(F, series_inverse(factor))
    return F


def _check_caps(m, N, Q):
    if m < 2 or N < 0 or Q < N:
        raise InvalidArguments(f"need m >= 2 and 0 <= N <= Q, got m={m}, N={N}, Q={Q}")


def rs_generating_check(m, N, Q):
    """(q)_n [x^n] F == H_n modulo q^(Q+1) for every n <= N."""
    _check_caps(m, N, Q)
    F = generating_series(m, N, Q)
    for n in range(N + 1):
        lhs = qkernel.qpoch(n).mul_trunc(F.coefficient(n), Q)
        if lhs != rs(n, m).value.truncate("q", Q):
            return False
    return True


def rs_functional_series_check(m, N, Q):
    """(1 - t_1 x)...(1 - t_(m-1) x)(1 - x) F(x) == F(xq) on truncations."""
    _check_caps(m, N, Q)
    F = generating_series(m, N, Q)
    prefactor = ONE
    for a in tvars(m) + [ONE]:
        prefactor = prefactor * (1 - a * x)
    lhs = series_mul(series_from_poly(prefactor, N, Q), F)
    return lhs == series_shift_q(F)


def euler_identity_check(N, Q):
    """Denominator-free Euler identity, plus the same identity through series_inverse.

    sum_n x^n prod_{j<=N, j!=n} (q)_j * prod_{i<=Q} (1 - x q^i) == prod_{j<=N} (q)_j
    """
    _check_caps(2, N, Q)
    pochs = [qkernel.qpoch(j) for j in range(N + 1)]
    left = ZERO
    for n in range(N + 1):
        others = ONE
        for j in range(N + 1):
            if j != n:
                others = others * pochs[j]
        left = left + MPoly.monomial(x=n) * others
    product = euler_factor(x, Q)
    everything = ONE
    for p in pochs:
        everything = everything * p
    cleared = series_mul(series_from_poly(left, N, Q), series_from_poly(product, N, Q))
    if cleared != series_from_poly(everything, N, Q):
        return False
    inverse = series_inverse(series_from_poly(product, N, Q))
    for n in range(N + 1):
        one_over = series_inverse(series_from_poly(pochs[n], N, Q)).coefficient(0)
        if inverse.coefficient(n) != one_over:
            return False
    return True


def clear_caches():
    rs.cache_clear()
    rs_homogeneous.cache_clear()
