"""q-Pochhammer symbols, Gaussian binomials, q-multinomials and Galois numbers.

Everything here is a polynomial in ``q`` with integer coefficients.  No
rational functions appear: wherever a ratio ``(q)_n / (q)_{n-i}`` shows up it
is expanded as the signed product ``(q^n - 1)(q^(n-1) - 1)...(q^(n-i+1) - 1)``
(see :func:`falling_qfactor`).
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .bigpoly import ONE, ZERO, MPoly, poly_divide_exact
from .errors import InvalidArguments

q = MPoly.var("q")


@dataclass(frozen=True)
class Composition:
    """Ordered tuple of non-negative parts (k_1, ..., k_m)."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(int(k) for k in self.parts)
        if not parts:
            raise InvalidArguments("a composition needs at least one part")
        if any(k < 0 for k in parts):
            raise InvalidArguments(f"negative part in {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self):
        return sum(self.parts)

    @property
    def m(self):
        return len(self.parts)

    def minus(self, J):
        """Subtract the indicator of J (1-based indices), i.e. k - e_J."""
        J = SubsetIndicator.coerce(J, self.m)
        return Composition(tuple(k - (i + 1 in J.J) for i, k in enumerate(self.parts)))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


@dataclass(frozen=True)
class SubsetIndicator:
    """A subset J of {1, ..., m}; ``vector`` is the 0/1 tuple e_J."""

    J: frozenset
    m: int

    def __post_init__(self):
        J = frozenset(int(j) for j in self.J)
        if any(j < 1 or j > self.m for j in J):
            raise InvalidArguments(f"J={sorted(J)} is not inside 1..{self.m}")
        object.__setattr__(self, "J", J)

    @classmethod
    def coerce(cls, value, m):
        if isinstance(value, SubsetIndicator):
            if value.m != m:
                raise InvalidArguments(f"subset lives in 1..{value.m}, expected 1..{m}")
            return value
        return cls(frozenset(value), m)

    @property
    def vector(self):
        return tuple(int(i in self.J) for i in range(1, self.m + 1))

    def __len__(self):
        return len(self.J)

    def __iter__(self):
        return iter(sorted(self.J))


def _as_parts(c):
    return c.parts if isinstance(c, Composition) else Composition(tuple(c)).parts


def compositions(n, m):
    """All compositions of n into m non-negative parts, in lexicographic order."""
    if m == 1:
        yield (n,)
        return
    for k in range(n + 1):
        for rest in compositions(n - k, m - 1):
            yield (k,) + rest


def nonempty_subsets(m):
    """Nonempty subsets of {1..m}, by size then lexicographically."""
    for size in range(1, m + 1):
        yield from combinations(range(1, m + 1), size)


def pochhammer(a, r, n):
    """(a; r)_n = (1 - a)(1 - a r)...(1 - a r^(n-1)); equals 1 for n = 0."""
    if n < 0:
        raise InvalidArguments("n must be non-negative")
    a, r = MPoly.coerce(a), MPoly.coerce(r)
    out, term = ONE, a
    for _ in range(n):
        out = out * (1 - term)
        term = term * r
    return out


def qpoch(n):
    """(q)_n = (q; q)_n."""
    return pochhammer(q, q, n)


def falling_qfactor(n, i):
    """(-1)^i (q)_n / (q)_(n-i), expanded as prod_{j<i} (q^(n-j) - 1)."""
    out = ONE
    for j in range(i):
        out = out * (MPoly.monomial(q=n - j) - 1)
    return out


def binomial(n, k):
    """Ordinary binomial coefficient by integer Pascal recursion."""
    if k < 0 or k > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [1] + [row[j] + row[j + 1] for j in range(len(row) - 1)] + [1]
    return row[k]


@lru_cache(maxsize=None)
def qbinomial(n, k):
    """Gaussian polynomial [n choose k]_q via the q-Pascal rule."""
    if k < 0 or k > n:
        raise InvalidArguments(f"qbinomial needs 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return ONE
    return qbinomial(n - 1, k - 1) + MPoly.monomial(q=k) * qbinomial(n - 1, k)


def qbinomial_by_division(n, k):
    """Independent route: (q)_n / ((q)_k (q)_(n-k)) by exact polynomial division."""
    if k < 0 or k > n:
        raise InvalidArguments(f"qbinomial needs 0 <= k <= n, got n={n}, k={k}")
    return poly_divide_exact(qpoch(n), qpoch(k) * qpoch(n - k))


@lru_cache(maxsize=None)
def _qmultinomial(parts):
    # [n; k_1, rest]_q = [n choose k_1]_q * [n - k_1; rest]_q, cached on the suffix
    if len(parts) == 1:
        return ONE
    return qbinomial(sum(parts), parts[0]) * _qmultinomial(parts[1:])


def qmultinomial(c):
    """q-multinomial [n; k_1, ..., k_m]_q as a telescoping product of Gaussian binomials."""
    return _qmultinomial(_as_parts(c))


def qmultinomial_by_division(c):
    parts = _as_parts(c)
    den = ONE
    for k in parts:
        den = den * qpoch(k)
    return poly_divide_exact(qpoch(sum(parts)), den)


def galois(n):
    """Galois number G_n = sum_k [n choose k]_q."""
    if n < 0:
        raise InvalidArguments("n must be non-negative")
    return sum((qbinomial(n, k) for k in range(n + 1)), ZERO)


@lru_cache(maxsize=None)
def galois_general(n, m):
    """G_n^(m): sum of all q-multinomials of degree n and length m."""
    if n < 0 or m < 2:
        raise InvalidArguments(f"galois_general needs n >= 0 and m >= 2, got n={n}, m={m}")
    return sum((qmultinomial(c) for c in compositions(n, m)), ZERO)


def gengal_recursion_rhs(n, m):
    """Right side of the G^(m) recursion: sum_i C(m, i+1) prod_{j<i}(q^(n-j)-1) G_(n-i)^(m)."""
    if n < m - 1:
        raise InvalidArguments(f"recursion needs n >= m - 1, got n={n}, m={m}")
    return sum(
        (binomial(m, i + 1) * falling_qfactor(n, i) * galois_general(n - i, m) for i in range(m)),
        ZERO,
    )


def gengal_recursion_check(n, m):
    return galois_general(n + 1, m) == gengal_recursion_rhs(n, m)


def lemma_term(c, J):
    """One J-term: prod_{j<|J|-1}(q^(n-j) - 1) * [n+1-|J|; k - e_J]_q, where n + 1 = sum(k)."""
    parts = _as_parts(c)
    J = SubsetIndicator.coerce(J, len(parts))
    n = sum(parts) - 1
    reduced = Composition(parts).minus(J)
    return falling_qfactor(n, len(J) - 1) * qmultinomial(reduced)


def _lemma_sum(parts):
    return sum((lemma_term(parts, J) for J in nonempty_subsets(len(parts))), ZERO)


def gengal_lemma_rhs(c):
    """Inclusion-exclusion expansion of [n+1; k_1..k_m]_q over nonempty J, all k_i > 0."""
    parts = _as_parts(c)
    if len(parts) < 2:
        raise InvalidArguments("the expansion needs at least two parts")
    if any(k == 0 for k in parts):
        raise InvalidArguments(f"all parts must be positive, got {parts}")
    return _lemma_sum(parts)


def gengal_lemma_zero_extension(c):
    """Apply the expansion to the positive parts only, then re-insert the zero parts.

    A single positive part leaves the one-term sum J = {1}, whose value is 1.
    """
    parts = _as_parts(c)
    positions = [i for i, k in enumerate(parts) if k > 0]
    if not positions:
        raise InvalidArguments("at least one part must be positive")
    reduced = tuple(parts[i] for i in positions)
    n = sum(parts) - 1
    total = ZERO
    for J in nonempty_subsets(len(reduced)):
        lowered = list(reduced)
        for j in J:
            lowered[j - 1] -= 1
        padded = [0] * len(parts)
        for i, k in zip(positions, lowered):
            padded[i] = k
        total = total + falling_qfactor(n, len(J) - 1) * qmultinomial(tuple(padded))
    return total


def clear_caches():
    qbinomial.cache_clear()
    _qmultinomial.cache_clear()
    galois_general.cache_clear()
