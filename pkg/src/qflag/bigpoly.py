"""Sparse multivariate integer polynomials and bi-truncated power series.

Variables are drawn from a fixed, totally ordered alphabet::

    q < x < u < t1 < t2 < t3 < ...

A monomial is stored as an exponent tuple indexed by that order with
trailing zeros stripped, so ``q**2 * t1`` is ``(2, 0, 0, 1)`` and the
constant monomial is ``()``.  Coefficients are Python ints, so arithmetic
is exact at any size.

Text form (used by the CLI and golden files)::

    >>> str(MPoly.parse("1 + 2*q + 2*q^2 + 1*q^3"))
    '1 + 2*q + 2*q^2 + q^3'
"""

import re
from dataclasses import dataclass

from .errors import (
    CapMismatch,
    IndexOutOfRange,
    InvalidArguments,
    MissingVariable,
    NotAUnit,
    NotDivisible,
)

_FIXED_VARS = ("q", "x", "u")
_T_RE = re.compile(r"t_?([1-9][0-9]*)$")

Q, X, U = 0, 1, 2


def var_index(name):
    """Position of a variable name in the global order (``t_1`` and ``t1`` agree)."""
    if name in _FIXED_VARS:
        return _FIXED_VARS.index(name)
    m = _T_RE.match(name)
    if m is None:
        raise InvalidArguments(f"unknown variable {name!r}")
    return 2 + int(m.group(1))


def var_name(index):
    if index < 3:
        return _FIXED_VARS[index]
    return f"t{index - 2}"


def _trim(exps):
    end = len(exps)
    while end and exps[end - 1] == 0:
        end -= 1
    return exps[:end] if end != len(exps) else exps


def _add_exps(a, b):
    if len(a) < len(b):
        a, b = b, a
    return tuple([x + y for x, y in zip(a, b)]) + a[len(b):]


def _sub_exps(a, b):
    """a - b as a trimmed tuple, or None if some exponent would go negative."""
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        d = (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
        if d < 0:
            return None
        out.append(d)
    return _trim(tuple(out))


def _grlex(exps):
    return (sum(exps), exps)


def _univariate(d):
    for e in d:
        if len(e) > 1:
            return False
    return True


def _mul_q_only(a, b, qcap):
    da = [0] * (max(e[0] if e else 0 for e in a) + 1)
    for e, c in a.items():
        da[e[0] if e else 0] = c
    db = [0] * (max(e[0] if e else 0 for e in b) + 1)
    for e, c in b.items():
        db[e[0] if e else 0] = c
    top = len(da) + len(db) - 2
    if qcap is not None:
        top = min(top, qcap)
    out = [0] * (top + 1)
    for i, x in enumerate(da):
        if x and i <= top:
            for j, y in enumerate(db[: top - i + 1]):
                out[i + j] += x * y
    return {((k,) if k else ()): c for k, c in enumerate(out) if c}


def _mul_dicts(a, b, qcap=None):
    if not a or not b:
        return {}
    if _univariate(a) and _univariate(b):
        return _mul_q_only(a, b, qcap)
    out = {}
    get = out.get
    for ea, ca in a.items():
        qa = ea[0] if ea else 0
        for eb, cb in b.items():
            if qcap is not None and qa + (eb[0] if eb else 0) > qcap:
                continue
            key = _add_exps(ea, eb)
            out[key] = get(key, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


class MPoly:
    """Immutable sparse polynomial with integer coefficients.

    Build one from a ``{exponent_tuple: coeff}`` mapping, or more usually via
    :meth:`var`, :meth:`const`, :meth:`monomial` and ordinary arithmetic.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        acc = {}
        for exps, c in (terms or {}).items():
            if c:
                key = _trim(tuple(int(e) for e in exps))
                if any(e < 0 for e in key):
                    raise InvalidArguments("negative exponents are not supported")
                acc[key] = acc.get(key, 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _wrap(cls, terms):
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c):
        return cls._wrap({(): int(c)} if c else {})

    @classmethod
    def var(cls, name):
        return cls.monomial(**{name: 1})

    @classmethod
    def monomial(cls, coeff=1, **exps):
        """``MPoly.monomial(3, q=2, t1=1)`` is ``3*q^2*t1``."""
        vec = {}
        for name, e in exps.items():
            vec[var_index(name)] = e
        n = max(vec, default=-1) + 1
        return cls({tuple(vec.get(i, 0) for i in range(n)): coeff})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, MPoly):
            return value
        if isinstance(value, int):
            return cls.const(value)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot convert {type(value).__name__} to MPoly")

    # --- inspection -----------------------------------------------------

    def terms(self):
        """The term map as a fresh dict."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._terms or list(self._terms) == [()]

    def constant_term(self):
        return self._terms.get((), 0)

    def coeff(self, **exps):
        """Coefficient of one monomial, e.g. ``p.coeff(q=2, t1=1)``."""
        key = MPoly.monomial(**exps)
        (e,) = key._terms
        return self._terms.get(e, 0)

    def degree(self, var=None):
        """Degree in ``var`` (total degree if omitted); the zero polynomial has degree -1."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e) for e in self._terms)
        i = var_index(var)
        return max((e[i] if i < len(e) else 0) for e in self._terms)

    def variables(self):
        used = set()
        for e in self._terms:
            used.update(i for i, v in enumerate(e) if v)
        return [var_name(i) for i in sorted(used)]

    # --- arithmetic -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other)
        elif not isinstance(other, MPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other)
        elif not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return MPoly._wrap({})
            return MPoly._wrap({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        return MPoly._wrap(_mul_dicts(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise InvalidArguments("only non-negative integer powers are supported")
        result, base = MPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_trunc(self, other, qcap):
        """Product with every term of q-degree above ``qcap`` discarded."""
        return MPoly._wrap(_mul_dicts(self._terms, other._terms, qcap))

    def truncate(self, var, cap):
        i = var_index(var)
        return MPoly._wrap(
            {e: c for e, c in self._terms.items() if (e[i] if i < len(e) else 0) <= cap}
        )

    def coefficient_in(self, var, k):
        """The coefficient of ``var**k``, as a polynomial in the other variables."""
        i = var_index(var)
        out = {}
        for e, c in self._terms.items():
            if (e[i] if i < len(e) else 0) == k:
                if i < len(e):
                    e = _trim(e[:i] + (0,) + e[i + 1:])
                out[e] = c
        return MPoly._wrap(out)

    def substitute(self, var, value):
        """Replace ``var`` by the polynomial (or int) ``value`` and expand."""
        value = MPoly.coerce(value)
        i = var_index(var)
        by_power = {}
        for e, c in self._terms.items():
            k = e[i] if i < len(e) else 0
            rest = _trim(e[:i] + (0,) + e[i + 1:]) if k else e
            by_power.setdefault(k, {})[rest] = c
        result = MPoly._wrap({})
        powers = {0: MPoly.const(1)}
        for k in sorted(by_power):
            if k not in powers:
                last = max(powers)
                p = powers[last]
                for j in range(last + 1, k + 1):
                    p = p * value
                    powers[j] = p
            result = result + MPoly._wrap(by_power[k]) * powers[k]
        return result

    def evaluate(self, assignment):
        """Exact integer value under ``{name: int}``; every used variable must be bound."""
        bound = {var_index(k): v for k, v in assignment.items()}
        for name in self.variables():
            if var_index(name) not in bound:
                raise MissingVariable(name)
        total = 0
        for e, c in self._terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    term *= bound[i] ** k
            total += term
        return total

    # --- text form ------------------------------------------------------

    def sorted_terms(self):
        """Terms in canonical order: ascending total degree, then q before x before u before t1..."""
        width = max((len(e) for e in self._terms), default=0)

        def key(item):
            e = item[0]
            return (sum(e), tuple(-v for v in e) + (0,) * (width - len(e)))

        return sorted(self._terms.items(), key=key)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(var_name(i))
                elif k:
                    factors.append(f"{var_name(i)}^{k}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"MPoly({str(self)!r})"

    _TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z_0-9]*)|(\*\*|\^)|(\*)|(\+)|(-)|(\S))")

    @classmethod
    def parse(cls, text):
        """Read the text form; accepts ``t1``/``t_1``, ``^``/``**`` and explicit unit coefficients."""
        tokens = []
        for m in cls._TOKEN.finditer(text.strip()):
            num, name, power, star, plus, minus, junk = m.groups()
            if junk is not None:
                raise InvalidArguments(f"unexpected character {junk!r} in {text!r}")
            if num is not None:
                tokens.append(("num", int(num)))
            elif name is not None:
                tokens.append(("var", name))
            elif power is not None:
                tokens.append(("pow", None))
            elif star is not None:
                tokens.append(("mul", None))
            elif plus is not None:
                tokens.append(("sign", 1))
            elif minus is not None:
                tokens.append(("sign", -1))
        if not tokens:
            raise InvalidArguments("empty polynomial text")

        pos = 0
        result = {}

        def expect(kind):
            nonlocal pos
            if pos >= len(tokens) or tokens[pos][0] != kind:
                raise InvalidArguments(f"malformed polynomial {text!r}")
            pos += 1
            return tokens[pos - 1][1]

        while pos < len(tokens):
            sign = 1
            if tokens[pos][0] == "sign":
                sign = tokens[pos][1]
                pos += 1
            elif result or pos:
                raise InvalidArguments(f"malformed polynomial {text!r}")
            coeff, exps = sign, {}
            while True:
                if pos < len(tokens) and tokens[pos][0] == "num":
                    coeff *= expect("num")
                else:
                    name = expect("var")
                    k = 1
                    if pos < len(tokens) and tokens[pos][0] == "pow":
                        pos += 1
                        k = expect("num")
                    i = var_index(name)
                    exps[i] = exps.get(i, 0) + k
                if pos < len(tokens) and tokens[pos][0] == "mul":
                    pos += 1
                    continue
                break
            width = max(exps, default=-1) + 1
            key = tuple(exps.get(i, 0) for i in range(width))
            result[key] = result.get(key, 0) + coeff
        return cls(result)


ZERO = MPoly.const(0)
ONE = MPoly.const(1)


def poly_add(a, b):
    return MPoly.coerce(a) + MPoly.coerce(b)


def poly_mul(a, b):
    return MPoly.coerce(a) * MPoly.coerce(b)


def poly_divide_exact(a, b):
    """Quotient ``c`` with ``c * b == a``; raises NotDivisible otherwise.

    Leading-term division in graded-lex order, so it terminates on any input.
    """
    a, b = MPoly.coerce(a), MPoly.coerce(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lead_b = max(b._terms, key=_grlex)
    cb = b._terms[lead_b]
    rem = dict(a._terms)
    quot = {}
    while rem:
        lead = max(rem, key=_grlex)
        c = rem[lead]
        shift = _sub_exps(lead, lead_b)
        if shift is None or c % cb:
            raise NotDivisible(f"{b} does not divide {a}")
        qc = c // cb
        quot[shift] = qc
        for e, v in b._terms.items():
            key = _add_exps(e, shift)
            nv = rem.get(key, 0) - qc * v
            if nv:
                rem[key] = nv
            else:
                rem.pop(key, None)
    return MPoly._wrap(quot)


def poly_substitute(p, var, value):
    return MPoly.coerce(p).substitute(var, value)


def poly_eval_int(p, assignment):
    return MPoly.coerce(p).evaluate(assignment)


def elementary_symmetric(i, values):
    """e_i of the given polynomials; e_0 is 1."""
    values = [MPoly.coerce(v) for v in values]
    if i < 0 or i > len(values):
        raise IndexOutOfRange(f"e_{i} of {len(values)} values")
    e = [ONE] + [ZERO] * i
    for v in values:
        for j in range(i, 0, -1):
            e[j] = e[j] + e[j - 1] * v
    return e[i]


@dataclass(frozen=True)
class TruncSeries:
    """Power series in x with polynomial coefficients, exact modulo (x^(xcap+1), q^(qcap+1)).

    ``coeffs[n]`` is the coefficient of ``x**n``; it may involve q and any t_i
    but never x.
    """

    xcap: int
    qcap: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.xcap + 1:
            raise InvalidArguments("need exactly xcap + 1 coefficients")

    @classmethod
    def one(cls, xcap, qcap):
        return cls(xcap, qcap, (ONE,) + (ZERO,) * xcap)

    def coefficient(self, n):
        return self.coeffs[n]

    def _check(self, other):
        if (self.xcap, self.qcap) != (other.xcap, other.qcap):
            raise CapMismatch(
                f"caps ({self.xcap}, {self.qcap}) vs ({other.xcap}, {other.qcap})"
            )

    def __add__(self, other):
        self._check(other)
        return TruncSeries(self.xcap, self.qcap, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return TruncSeries(self.xcap, self.qcap, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        return series_mul(self, other)

    def to_poly(self):
        x = MPoly.var("x")
        return sum((c * x**n for n, c in enumerate(self.coeffs)), ZERO)

    def __str__(self):
        return str(self.to_poly())


def series_from_poly(p, xcap, qcap):
    p = MPoly.coerce(p)
    return TruncSeries(
        xcap, qcap, tuple(p.coefficient_in("x", n).truncate("q", qcap) for n in range(xcap + 1))
    )


def series_mul(a, b):
    a._check(b)
    out = []
    for n in range(a.xcap + 1):
        acc = {}
        for i in range(n + 1):
            ai, bj = a.coeffs[i], b.coeffs[n - i]
            if ai and bj:
                for e, c in _mul_dicts(ai._terms, bj._terms, a.qcap).items():
                    acc[e] = acc.get(e, 0) + c
        out.append(MPoly._wrap({e: c for e, c in acc.items() if c}))
    return TruncSeries(a.xcap, a.qcap, tuple(out))


def series_inverse(a):
    """Multiplicative inverse; the x^0 q^0 part of ``a`` must be exactly +1 or -1."""
    N, Q = a.xcap, a.qcap
    a0 = a.coeffs[0]
    unit = a0.coefficient_in("q", 0)
    if unit not in (ONE, -ONE):
        raise NotAUnit(f"constant term {unit} is not +1 or -1")
    c = unit.constant_term()
    # a0 = c * (1 + d) with q | d, so 1/a0 = c * sum_k (-d)^k.
    neg_d = -(a0 * c - 1)
    b0, power = ONE, ONE
    for _ in range(Q):
        power = power.mul_trunc(neg_d, Q)
        if power.is_zero():
            break
        b0 = b0 + power
    b0 = b0 * c
    b = [b0]
    for n in range(1, N + 1):
        acc = ZERO
        for j in range(1, n + 1):
            if a.coeffs[j]:
                acc = acc + a.coeffs[j].mul_trunc(b[n - j], Q)
        b.append(-(acc.mul_trunc(b0, Q)))
    return TruncSeries(N, Q, tuple(b))


def series_shift_q(a):
    """Substitute x -> x*q and re-truncate."""
    out = []
    for n, c in enumerate(a.coeffs):
        shifted = {}
        for e, v in c._terms.items():
            qe = (e[0] if e else 0) + n
            if qe <= a.qcap:
                shifted[_trim((qe,) + e[1:])] = v
        out.append(MPoly._wrap(shifted))
    return TruncSeries(a.xcap, a.qcap, tuple(out))
