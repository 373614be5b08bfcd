"""Finite fields, subspaces and flags of F_q^n, counted by brute force.

Field elements are handled as small ints: the element with polynomial
representation c_0 + c_1 a + ... + c_(e-1) a^(e-1) has index
c_0 + c_1 p + ... + c_(e-1) p^(e-1), so 0 is index 0 and 1 is index 1.
Arithmetic goes through precomputed tables.

Subspaces are stored as reduced row echelon matrices of such indices, which
makes them canonical: two subspaces are equal iff their matrices are.
"""

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product

from .errors import InvalidArguments, NotPrime, ZeroDimensional
from .qkernel import Composition, SubsetIndicator, compositions


def is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# --- polynomials over F_p, as coefficient tuples (constant first) ---------


def _ptrim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, b, p):
    """Remainder of a by the monic polynomial b over F_p."""
    a = [c % p for c in a]
    db = len(b) - 1
    for k in range(len(a) - 1, db - 1, -1):
        lead = a[k]
        if lead:
            for j in range(db + 1):
                a[k - db + j] = (a[k - db + j] - lead * b[j]) % p
    return _ptrim(a[:db])


def _digits(index, p, width):
    out = []
    for _ in range(width):
        index, r = divmod(index, p)
        out.append(r)
    return out


def _monic(degree, p):
    """Monic polynomials of the given degree, lowest encoding first."""
    for index in range(p**degree):
        yield tuple(_digits(index, p, degree)) + (1,)


def is_irreducible(poly, p):
    e = len(poly) - 1
    if e < 1:
        return False
    for d in range(1, e // 2 + 1):
        for f in _monic(d, p):
            if not _pmod(poly, f, p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    p: int
    e: int
    modulus: tuple

    @property
    def q(self):
        return self.p**self.e

    @cached_property
    def _tables(self):
        p, e, q = self.p, self.e, self.q
        reps = [_digits(i, p, e) for i in range(q)]

        def encode(c):
            return sum(v * p**i for i, v in enumerate(c))

        add = [[encode([(x + y) % p for x, y in zip(a, b)]) for b in reps] for a in reps]
        mul = []
        for a in reps:
            row = []
            for b in reps:
                prod_ = [0] * (2 * e - 1)
                for i, x in enumerate(a):
                    if x:
                        for j, y in enumerate(b):
                            prod_[i + j] += x * y
                row.append(encode(_pmod(prod_, self.modulus, p)) if e > 1 else prod_[0] % p)
            mul.append(row)
        neg = [encode([(-x) % p for x in a]) for a in reps]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = mul[a].index(1)
        return add, mul, neg, inv

    @property
    def add(self):
        return self._tables[0]

    @property
    def mul(self):
        return self._tables[1]

    @property
    def neg(self):
        return self._tables[2]

    @property
    def inv(self):
        return self._tables[3]

    def element(self, index):
        return FqElem(self, index)

    def elements(self):
        return [FqElem(self, i) for i in range(self.q)]

    def __str__(self):
        return f"F_{self.q}"


@dataclass(frozen=True)
class FqElem:
    spec: FieldSpec = field(repr=False)
    index: int

    @property
    def rep(self):
        return tuple(_digits(self.index, self.spec.p, self.spec.e))

    def _other(self, other):
        if isinstance(other, int):
            return other % self.spec.p
        if other.spec != self.spec:
            raise InvalidArguments("elements of different fields")
        return other.index

    def __add__(self, other):
        return FqElem(self.spec, self.spec.add[self.index][self._other(other)])

    def __sub__(self, other):
        return FqElem(self.spec, self.spec.add[self.index][self.spec.neg[self._other(other)]])

    def __neg__(self):
        return FqElem(self.spec, self.spec.neg[self.index])

    def __mul__(self, other):
        return FqElem(self.spec, self.spec.mul[self.index][self._other(other)])

    def inverse(self):
        if self.index == 0:
            raise ZeroDivisionError("zero has no inverse")
        return FqElem(self.spec, self.spec.inv[self.index])

    def __truediv__(self, other):
        return self * FqElem(self.spec, self._other(other)).inverse()


def build_field(p, e=1):
    """F_(p^e) with the irreducible modulus of smallest encoding."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise InvalidArguments("extension degree must be >= 1")
    for poly in _monic(e, p):
        if is_irreducible(poly, p):
            return FieldSpec(p, e, poly)
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


def field_for_order(q):
    """Field with exactly q elements, q a prime power."""
    for p in range(2, q + 1):
        if q % p == 0:
            e, rest = 0, q
            while rest % p == 0:
                rest //= p
                e += 1
            if rest != 1 or not is_prime(p):
                raise NotPrime(f"{q} is not a prime power")
            return build_field(p, e)
    raise NotPrime(f"{q} is not a prime power")


# --- linear algebra over F_q ---------------------------------------------


def rref(spec, rows):
    """Reduced row echelon form of ``rows`` (zero rows dropped)."""
    add, mul, neg, inv = spec.add, spec.mul, spec.neg, spec.inv
    A = [list(r) for r in rows]
    if not A:
        return ()
    ncols = len(A[0])
    lead_row = 0
    for col in range(ncols):
        pivot = next((r for r in range(lead_row, len(A)) if A[r][col]), None)
        if pivot is None:
            continue
        A[lead_row], A[pivot] = A[pivot], A[lead_row]
        s = inv[A[lead_row][col]]
        A[lead_row] = [mul[s][v] for v in A[lead_row]]
        for r in range(len(A)):
            if r != lead_row and A[r][col]:
                f = neg[A[r][col]]
                A[r] = [add[a][mul[f][b]] for a, b in zip(A[r], A[lead_row])]
        lead_row += 1
        if lead_row == len(A):
            break
    return tuple(tuple(r) for r in A[:lead_row])


def rank(spec, rows):
    return len(rref(spec, rows))


def combine(spec, coords, basis):
    """Row vector ``coords`` times the matrix ``basis``."""
    add, mul = spec.add, spec.mul
    out = [0] * len(basis[0])
    for c, row in zip(coords, basis):
        if c:
            for j, v in enumerate(row):
                if v:
                    out[j] = add[out[j]][mul[c][v]]
    return tuple(out)


@dataclass(frozen=True)
class Subspace:
    """A k-dimensional subspace of F_q^n as its RREF basis matrix."""

    n: int
    basis: tuple
    spec: FieldSpec = field(compare=False, repr=False)

    @property
    def k(self):
        return len(self.basis)

    @property
    def pivots(self):
        return tuple(next(j for j, v in enumerate(r) if v) for r in self.basis)

    @classmethod
    def span(cls, spec, n, vectors):
        return cls(n, rref(spec, vectors), spec)

    @classmethod
    def whole(cls, spec, n):
        return cls(n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), spec)

    def contains(self, vector):
        return rank(self.spec, self.basis + (tuple(vector),)) == self.k

    def is_subspace_of(self, other):
        return all(other.contains(r) for r in self.basis)

    def is_rref(self):
        if rref(self.spec, self.basis) != self.basis:
            return False
        return len(self.basis) == self.k

    def to_json(self):
        return {"n": self.n, "k": self.k, "rows": [list(r) for r in self.basis]}


def pivot_patterns(n, k):
    return combinations(range(n), k)


def enumerate_subspaces(spec, n, k, pivots=None):
    """Yield every k-dimensional subspace of F_q^n exactly once, as RREF.

    Iterates pivot-column sets and then the free entries to the right of each
    pivot outside the pivot columns.  ``pivots`` restricts the stream to one
    pattern so independent workers can split the work.
    """
    if not 0 <= k <= n:
        raise InvalidArguments(f"need 0 <= k <= n, got n={n}, k={k}")
    patterns = [tuple(pivots)] if pivots is not None else pivot_patterns(n, k)
    for piv in patterns:
        pivset = set(piv)
        free = [(i, j) for i, pc in enumerate(piv) for j in range(pc + 1, n) if j not in pivset]
        template = [[0] * n for _ in range(k)]
        for i, pc in enumerate(piv):
            template[i][pc] = 1
        for values in product(range(spec.q), repeat=len(free)):
            for (i, j), v in zip(free, values):
                template[i][j] = v
            yield Subspace(n, tuple(tuple(r) for r in template), spec)


def _count_pattern(args):
    spec, n, k, piv = args
    return sum(1 for _ in enumerate_subspaces(spec, n, k, piv))


def count_subspaces(spec, n, k, workers=None):
    """Count-only enumeration, optionally split across processes by pivot pattern."""
    if workers is None:
        workers = int(os.environ.get("QFLAG_THREADS", "1") or 1)
    jobs = [(spec, n, k, piv) for piv in pivot_patterns(n, k)]
    if workers <= 1 or len(jobs) < 2:
        return sum(map(_count_pattern, jobs))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_pattern, jobs))


def subspaces_of(W, k):
    """Every k-dimensional subspace of the subspace W, in W's ambient coordinates."""
    for C in enumerate_subspaces(W.spec, W.k, k):
        rows = [combine(W.spec, c, W.basis) for c in C.basis]
        yield Subspace(W.n, rref(W.spec, rows), W.spec)


@dataclass(frozen=True)
class FlagChain:
    """W_(m-1) <= ... <= W_1 inside F_q^n with dim W_i = n - (k_1 + ... + k_i)."""

    n: int
    chain: tuple
    comp: Composition

    def __post_init__(self):
        if len(self.chain) != self.comp.m - 1:
            raise InvalidArguments("a composition of length m needs m - 1 subspaces")
        dim = self.n
        for W, k in zip(self.chain, self.comp.parts):
            dim -= k
            if W.k != dim:
                raise InvalidArguments(f"dimension {W.k} where {dim} was expected")
        for inner, outer in zip(self.chain[1:], self.chain):
            if not inner.is_subspace_of(outer):
                raise InvalidArguments("chain is not nested")

    def to_json(self):
        return {
            "composition": list(self.comp.parts),
            "subspaces": [W.to_json() for W in self.chain],
        }


def _flag_dims(n, parts):
    dims, d = [], n
    for k in parts[:-1]:
        d -= k
        dims.append(d)
    return dims


def _comp_for(spec, comp):
    comp = comp if isinstance(comp, Composition) else Composition(tuple(comp))
    return comp


def enumerate_flags(spec, comp):
    """Stream every flag with the given dimension drops, by nested enumeration."""
    comp = _comp_for(spec, comp)
    n = comp.n
    dims = _flag_dims(n, comp.parts)

    def walk(outer, level, prefix):
        if level == len(dims):
            yield FlagChain(n, tuple(prefix), comp)
            return
        for W in subspaces_of(outer, dims[level]):
            prefix.append(W)
            yield from walk(W, level + 1, prefix)
            prefix.pop()

    yield from walk(Subspace.whole(spec, n), 0, [])


def count_flags(spec, comp):
    comp = _comp_for(spec, comp)
    dims = _flag_dims(comp.n, comp.parts)

    def walk(outer, level):
        if level == len(dims):
            return 1
        return sum(walk(W, level + 1) for W in subspaces_of(outer, dims[level]))

    return walk(Subspace.whole(spec, comp.n), 0)


def total_flags(spec, n, m):
    if n < 0 or m < 2:
        raise InvalidArguments(f"need n >= 0 and m >= 2, got n={n}, m={m}")
    return sum(count_flags(spec, c) for c in compositions(n, m))


# --- the Type 1/2/3 classification ---------------------------------------


class TypeLabel(enum.Enum):
    TYPE1 = 1
    TYPE2 = 2
    TYPE3 = 3

    def __str__(self):
        return f"Type{self.value}"


def _ambient_rows(W, ambient):
    if ambient is None:
        return Subspace.whole(W.spec, W.n).basis
    if isinstance(ambient, Subspace):
        return ambient.basis
    return tuple(tuple(v) for v in ambient)


def classify_subspace(W, ambient=None):
    """Type of W relative to an ordered ambient basis v_1..v_d (default: the standard basis).

    Type 1: W lies in span(v_1..v_(d-1)).  Type 2: otherwise, if v_d is in W.
    Type 3: neither.  For a Subspace ambient its RREF rows, in order, are the basis.
    """
    if W.k == 0:
        raise ZeroDimensional("the zero subspace has no type")
    basis = _ambient_rows(W, ambient)
    spec = W.spec
    if rank(spec, basis + W.basis) != len(basis):
        raise InvalidArguments("W is not inside the span of the ambient basis")
    hyperplane = basis[:-1]
    if rank(spec, hyperplane + W.basis) == len(hyperplane):
        return TypeLabel.TYPE1
    if W.contains(basis[-1]):
        return TypeLabel.TYPE2
    return TypeLabel.TYPE3


def type_census(spec, n_plus_1, k):
    """(Type 1, Type 2, Type 3) counts over all k-subspaces of F_q^(n+1)."""
    if not 1 <= k <= n_plus_1:
        raise InvalidArguments(f"need 1 <= k <= n+1, got k={k}, n+1={n_plus_1}")
    counts = {TypeLabel.TYPE1: 0, TypeLabel.TYPE2: 0, TypeLabel.TYPE3: 0}
    for W in enumerate_subspaces(spec, n_plus_1, k):
        counts[classify_subspace(W)] += 1
    return counts[TypeLabel.TYPE1], counts[TypeLabel.TYPE2], counts[TypeLabel.TYPE3]


def _pattern_requirements(m, J):
    """Required type at each level 1..m-1 (None: unconstrained) for subset J."""
    r = max(J)
    need = []
    for i in range(1, m):
        if i < r:
            need.append(TypeLabel.TYPE3 if i in J else TypeLabel.TYPE2)
        elif i == r:
            need.append(TypeLabel.TYPE1)
        else:
            need.append(None)
    return need


def flag_type_pattern_count(spec, comp, J):
    """Number of flags whose level-by-level types follow the pattern encoded by J.

    With r = max J: W_j is Type 3 in W_(j-1) for j in J, j < r; Type 2 for
    j not in J, j < r; W_r is Type 1 in W_(r-1) when r < m; deeper levels are
    free.  Each W_i is typed against the RREF rows of W_(i-1).
    """
    comp = _comp_for(spec, comp)
    if any(k == 0 for k in comp.parts):
        raise InvalidArguments(f"all parts must be positive, got {comp.parts}")
    J = SubsetIndicator.coerce(J, comp.m)
    if not len(J):
        raise InvalidArguments("J must be nonempty")
    need = _pattern_requirements(comp.m, J.J)
    dims = _flag_dims(comp.n, comp.parts)

    def walk(outer, level):
        if level == len(dims):
            return 1
        total = 0
        for W in subspaces_of(outer, dims[level]):
            want = need[level]
            if want is None or classify_subspace(W, outer) is want:
                total += walk(W, level + 1)
        return total

    return walk(Subspace.whole(spec, comp.n), 0)
