"""Exact arithmetic in Z[w] = Z[x]/Phi_m(x) and Rogers-Szegő values at roots of unity.

A primitive m-th root of unity ``w`` is never a complex float here: elements
of Z[w] are integer coordinate vectors in the basis 1, w, ..., w^(d-1) with
d = deg Phi_m, reduced modulo the (monic) cyclotomic polynomial.
"""

from dataclasses import dataclass
from functools import lru_cache

from .bigpoly import ONE, ZERO, MPoly, poly_divide_exact
from .errors import InvalidArguments
from .qkernel import falling_qfactor
from .rogers_szego import rs

q = MPoly.var("q")
u = MPoly.var("u")
xv = MPoly.var("x")


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Phi_m(x) = (x^m - 1) / prod_{d | m, d < m} Phi_d(x)."""
    if m < 1:
        raise InvalidArguments("conductor must be >= 1")
    den = ONE
    for d in range(1, m):
        if m % d == 0:
            den = den * cyclotomic_polynomial(d)
    return poly_divide_exact(xv**m - 1, den)


@lru_cache(maxsize=None)
def _phi_coeffs(m):
    p = cyclotomic_polynomial(m)
    d = p.degree("x")
    return [p.coefficient_in("x", k).constant_term() for k in range(d + 1)]


def _reduce_list(coeffs, m):
    phi = _phi_coeffs(m)
    d = len(phi) - 1
    c = list(coeffs)
    for k in range(len(c) - 1, d - 1, -1):
        lead = c[k]
        if lead:
            # Phi_m is monic: subtract lead * w^(k-d) * Phi_m
            for j in range(d + 1):
                c[k - d + j] -= lead * phi[j]
    c = c[:d] + [0] * (d - len(c))
    return tuple(c)


@dataclass(frozen=True)
class CycInt:
    """An element of Z[w_m], stored as its canonical coordinates."""

    m: int
    coords: tuple

    @classmethod
    def from_int(cls, m, value):
        return cyc_reduce([value], m)

    @classmethod
    def w_power(cls, m, k):
        vec = [0] * m
        vec[k % m] = 1
        return cyc_reduce(vec, m)

    def is_zero(self):
        return not any(self.coords)

    def is_rational(self):
        return not any(self.coords[1:])

    def to_int(self):
        if not self.is_rational():
            raise InvalidArguments(f"{self} is not a rational integer")
        return self.coords[0] if self.coords else 0

    def _coerce(self, other):
        if isinstance(other, int):
            return CycInt.from_int(self.m, other)
        if isinstance(other, CycInt):
            if other.m != self.m:
                raise InvalidArguments(f"conductors {self.m} and {other.m} differ")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.m, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.m, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [0] * max(len(self.coords) + len(other.coords) - 1, 0)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    prod[i + j] += a * b
        return CycInt(self.m, _reduce_list(prod, self.m))

    __rmul__ = __mul__

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            mon = "" if k == 0 else ("w" if k == 1 else f"w^{k}")
            mag = abs(c)
            body = str(mag) if not mon else (mon if mag == 1 else f"{mag}*{mon}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"


def cyc_reduce(p, m):
    """Canonical remainder of a polynomial in w modulo Phi_m.

    ``p`` is a coefficient list (constant first), a ``{exponent: coeff}`` dict,
    or an MPoly in the variable x.
    """
    if isinstance(p, MPoly):
        p = {k: p.coefficient_in("x", k).constant_term() for k in range(p.degree("x") + 1)}
    if isinstance(p, dict):
        top = max(p, default=0)
        p = [p.get(k, 0) for k in range(top + 1)]
    return CycInt(m, _reduce_list(p, m))


def cyc_elementary_symmetric(i, values):
    m = values[0].m
    e = [CycInt.from_int(m, 1)] + [CycInt.from_int(m, 0)] * i
    for v in values:
        for j in range(i, 0, -1):
            e[j] = e[j] + e[j - 1] * v
    return e[i]


class CycPoly:
    """Polynomial in q with coefficients in Z[w_m]."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m, coeffs=None):
        self.m = m
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if not c.is_zero()}

    @classmethod
    def from_mpoly(cls, m, p):
        """Embed an integer polynomial in q."""
        p = MPoly.coerce(p)
        if set(p.variables()) - {"q"}:
            raise InvalidArguments(f"{p} is not a polynomial in q alone")
        return cls(m, {(e[0] if e else 0): CycInt.from_int(m, c) for e, c in p.items()})

    @classmethod
    def constant(cls, value):
        return cls(value.m, {0: value})

    def is_rational_integral(self):
        return all(c.is_rational() for c in self.coeffs.values())

    def to_mpoly(self):
        return MPoly({(k,): c.to_int() for k, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, CycPoly):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, frozenset(self.coeffs.items())))

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return CycPoly(self.m, out)

    def __neg__(self):
        return CycPoly(self.m, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, MPoly):
            other = CycPoly.from_mpoly(self.m, other)
        elif isinstance(other, (CycInt, int)):
            other = CycPoly.constant(CycInt.from_int(self.m, 0) + other)
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                out[i + j] = out[i + j] + a * b if i + j in out else a * b
        return CycPoly(self.m, out)

    __rmul__ = __mul__

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            body = f"({self.coeffs[k]})"
            if k == 1:
                body += "*q"
            elif k:
                body += f"*q^{k}"
            parts.append(body)
        return " + ".join(parts)

    __repr__ = __str__

    @classmethod
    def parse(cls, text, m):
        """Inverse of ``str``: terms like ``(1 - w)*q^2`` joined by ``+``."""
        text = text.strip()
        if text == "0":
            return cls(m)
        coeffs = {}
        pos = 0
        while pos < len(text):
            if text[pos] != "(":
                raise InvalidArguments(f"malformed CycPoly {text!r}")
            close = text.index(")", pos)
            inner = text[pos + 1:close].replace("w", "x")
            val = cyc_reduce(MPoly.parse(inner), m)
            pos = close + 1
            k = 0
            if text.startswith("*q", pos):
                pos += 2
                k = 1
                if text.startswith("^", pos):
                    end = pos + 1
                    while end < len(text) and text[end].isdigit():
                        end += 1
                    k = int(text[pos + 1:end])
                    pos = end
            coeffs[k] = coeffs[k] + val if k in coeffs else val
            rest = text[pos:].lstrip()
            if rest.startswith("+"):
                rest = rest[1:].lstrip()
            pos = len(text) - len(rest)
        return cls(m, coeffs)


def roots_point(m):
    """(w, w^2, ..., w^(m-1)) as elements of Z[w_m]."""
    return [CycInt.w_power(m, i) for i in range(1, m)]


def rs_eval_roots(n, m, scaled=False):
    """H_n(w, ..., w^(m-1)), or H_n(wq, ..., w^(m-1) q) when ``scaled``."""
    if n < 0 or m < 2:
        raise InvalidArguments(f"need n >= 0 and m >= 2, got n={n}, m={m}")
    buckets = {}
    for e, c in rs(n, m).value.items():
        qexp = e[0] if e else 0
        texps = e[3:]
        wexp = sum((i + 1) * k for i, k in enumerate(texps)) % m
        if scaled:
            qexp += sum(texps)
        vec = buckets.setdefault(qexp, [0] * m)
        vec[wexp] += c
    return CycPoly(m, {k: cyc_reduce(vec, m) for k, vec in buckets.items()})


def special1_formula(n, m):
    """prod_{j<n, m does not divide j} (1 - q^j) when m | n, else 0."""
    if n % m:
        return ZERO
    out = ONE
    for j in range(1, n):
        if j % m:
            out = out * (1 - MPoly.monomial(q=j))
    return out


def special3_formula(n, m):
    """prod_{j<=n, m does not divide j} (1 - q^j)."""
    out = ONE
    for j in range(1, n + 1):
        if j % m:
            out = out * (1 - MPoly.monomial(q=j))
    return out


def special2_lhs(n, m):
    """H_n(q^(1/m), ..., q^((m-1)/m)) written in u = q^(1/m)."""
    p = rs(n, m).value
    for i in range(1, m):
        p = p.substitute(f"t{i}", u**i)
    return p.substitute("q", u**m)


def special2_rhs(n, m):
    out = ONE
    for j in range(1, n + 1):
        out = out * sum((u ** (j * l) for l in range(m)), ZERO)
    return out


def special2_check(n, m):
    return special2_lhs(n, m) == special2_rhs(n, m)


def scaled_values_via_qshift(n, m):
    """H_n(wq, ..., w^(m-1) q) rebuilt from unscaled values through the q-shift expansion.

    Uses J = {1..m-1}, t_i = w^i: sum_{i<m} e_i(w..w^(m-1)) prod_{j<i}(q^(n-j) - 1) H_(n-i)(w..),
    with the unscaled H values taken from :func:`special1_formula`.
    """
    if n < m:
        raise InvalidArguments(f"needs n >= m, got n={n}, m={m}")
    point = roots_point(m)
    total = CycPoly(m)
    for i in range(m):
        coeff = cyc_elementary_symmetric(i, point)
        unscaled = CycPoly.from_mpoly(m, special1_formula(n - i, m))
        total = total + unscaled * falling_qfactor(n, i) * coeff
    return total


def special3_via_qshift_check(n, m):
    return scaled_values_via_qshift(n, m) == CycPoly.from_mpoly(m, special3_formula(n, m))


def h1_scaling_chain(m):
    """Scale t_1, t_2, ... by q one at a time starting from (w, ..., w^(m-1)).

    Each step uses the n = 1 shift identity H_1(.., t_j q, ..) = H_1(..) + t_j (q - 1).
    Returns the list of H_1 values after 0, 1, ..., m-1 steps.
    """
    qm1 = CycPoly.from_mpoly(m, q - 1)
    value = CycPoly(m)
    for w in [CycInt.from_int(m, 1)] + roots_point(m):
        value = value + CycPoly.constant(w)
    chain = [value]
    for w in roots_point(m):
        value = value + qm1 * w
        chain.append(value)
    return chain


def h1_partial_direct(m, scaled_upto):
    """H_1 evaluated directly with t_i = w^i q for i <= scaled_upto and w^i after."""
    total = CycPoly.constant(CycInt.from_int(m, 1))
    for i, w in enumerate(roots_point(m), start=1):
        term = CycPoly.constant(w)
        if i <= scaled_upto:
            term = term * q
        total = total + term
    return total
