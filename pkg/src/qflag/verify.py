"""Named verification suites: every identity checked against an independent route.

Each check walks its parameter grid from small to large and stops at the
first failing case, which is therefore the smallest counterexample in that
order.  A check that raises counts as failed, with the error recorded.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations

from . import cyclotomic as cyc
from . import ffspace as ff
from . import qkernel as qk
from . import rogers_szego as rsz
from .bigpoly import MPoly, poly_divide_exact

SUITES = (
    "euler",
    "genfn",
    "thm-recursion",
    "qshift",
    "special-values",
    "galois",
    "gengal-lemma",
    "flag-oracle",
    "type-census",
)


@dataclass
class CheckResult:
    suite: str
    check: str
    ok: bool
    cases: int
    counterexample: dict = None
    detail: str = ""

    def to_record(self, caps):
        return {
            "schema": 1,
            "kind": "verify",
            "inputs": {"suite": self.suite, "check": self.check, "caps": caps},
            "value": {"cases": self.cases, "counterexample": self.counterexample, "detail": self.detail},
            "status": "ok" if self.ok else "failed",
        }


@dataclass
class Caps:
    """Size caps; ``None`` means each check's own default."""

    max_n: int = None
    max_m: int = None
    xcap: int = None
    qcap: int = None
    fields: tuple = None

    def get(self, name, default):
        value = getattr(self, name)
        return default if value is None else value

    def as_dict(self):
        out = {k: getattr(self, k) for k in ("max_n", "max_m", "xcap", "qcap")}
        out["fields"] = list(self.fields) if self.fields else None
        return {k: v for k, v in out.items() if v is not None}


def run_check(suite, name, cases, predicate):
    count = 0
    for case in cases:
        count += 1
        try:
            ok = predicate(**case)
            detail = ""
        except Exception as exc:  # a crash is a failed identity, reported with its case
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        if not ok:
            return CheckResult(suite, name, False, count, dict(case), detail)
    return CheckResult(suite, name, True, count)


def _fields(caps, default):
    return [ff.field_for_order(q) for q in caps.get("fields", default)]


# --- suites ----------------------------------------------------------------


def suite_euler(caps):
    N, Q = caps.get("xcap", 8), caps.get("qcap", 12)
    return [
        run_check(
            "euler", "euler-identity",
            ({"N": n, "Q": Q} for n in range(N + 1)),
            rsz.euler_identity_check,
        )
    ]


def suite_genfn(caps):
    N, Q, M = caps.get("xcap", 8), caps.get("qcap", 12), caps.get("max_m", 4)
    cases = [{"m": m, "N": N, "Q": Q} for m in range(2, M + 1)]
    return [
        run_check("genfn", "generating-function", cases, rsz.rs_generating_check),
        run_check("genfn", "functional-relation", cases, rsz.rs_functional_series_check),
    ]


def _definition_consistency(n, m):
    H = rsz.rs_homogeneous(n, m)
    if any(sum(e[3:]) != n for e, _ in H.value.items()):
        return False
    if H.dehomogenize() != rsz.rs(n, m):
        return False
    if rsz.rs(n, m).at_ones() != qk.galois_general(n, m):
        return False
    width = 3 + m
    padded = {tuple(e) + (0,) * (width - len(e)): c for e, c in H.value.items()}
    for perm in permutations(range(m)):
        moved = {e[:3] + tuple(e[3 + perm[i]] for i in range(m)): c for e, c in padded.items()}
        if MPoly(moved) != H.value:
            return False
    return True


def suite_thm_recursion(caps):
    N, M = caps.get("max_n", 10), caps.get("max_m", 5)
    S = "thm-recursion"
    grid = [{"n": n, "m": m} for m in range(2, M + 1) for n in range(m - 1, N + 1)]
    return [
        run_check(
            S, "multivariate-recursion", grid,
            lambda n, m: rsz.rs_recursion_rhs(n, m).value == rsz.rs(n + 1, m).value,
        ),
        run_check(
            S, "single-variable-recursion",
            ({"n": n} for n in range(1, N + 1)), rsz.rs_single_recursion_check,
        ),
        run_check(
            S, "single-variable-is-m2-case",
            ({"n": n} for n in range(1, N + 1)),
            lambda n: rsz.rs_recursion_rhs(n, 2).value == rsz.rs_single_recursion_rhs(n),
        ),
        run_check(
            S, "two-variable-display",
            ({"n": n} for n in range(2, N + 1)),
            lambda n: rsz.rs_two_variable_display(n)
            == rsz.rs_recursion_rhs(n, 3).value
            == rsz.rs(n + 1, 3).value,
        ),
        run_check(
            S, "definition-consistency",
            ({"n": n, "m": m} for n in range(min(N, 8) + 1) for m in range(2, min(M, 4) + 1)),
            _definition_consistency,
        ),
    ]


def _qshift_grid(N, M):
    for m in range(2, M + 1):
        for J in qk.nonempty_subsets(m - 1):
            for n in range(len(J), N + 1):
                yield {"n": n, "m": m, "J": J}


def _chain_ok(m):
    chain = cyc.h1_scaling_chain(m)
    if any(chain[s] != cyc.h1_partial_direct(m, s) for s in range(m)):
        return False
    one_minus_q = cyc.CycPoly.from_mpoly(m, 1 - MPoly.var("q"))
    first = cyc.CycPoly.from_mpoly(m, MPoly.var("q") - 1) * cyc.CycInt.w_power(m, 1)
    return chain[-1] == one_minus_q and chain[1] == first


def suite_qshift(caps):
    N, M = caps.get("max_n", 8), caps.get("max_m", 4)
    S = "qshift"
    return [
        run_check(
            S, "qshift-expansion", _qshift_grid(N, M),
            lambda n, m, J: rsz.rs_qshift_rhs(n, m, J) == rsz.rs_qshift_lhs(n, m, J),
        ),
        run_check(
            S, "single-variable-qshift",
            ({"n": n} for n in range(1, N + 1)),
            lambda n: rsz.rs_qshift_lhs(n, 2, {1})
            == rsz.rs_qshift_single_rhs(n)
            == rsz.rs_qshift_rhs(n, 2, {1}),
        ),
        run_check(
            S, "h1-scaling-chain",
            ({"m": m} for m in range(2, max(M, 6) + 1)), _chain_ok,
        ),
    ]


def _roots_value_ok(n, m):
    v = cyc.rs_eval_roots(n, m)
    return v.is_rational_integral() and v == cyc.CycPoly.from_mpoly(m, cyc.special1_formula(n, m))


def _scaled_value_ok(n, m):
    v = cyc.rs_eval_roots(n, m, scaled=True)
    return v.is_rational_integral() and v == cyc.CycPoly.from_mpoly(m, cyc.special3_formula(n, m))


def _root_symmetric_ok(m):
    point = cyc.roots_point(m) + [cyc.CycInt.from_int(m, 1)]
    for i in range(1, m):
        if not cyc.cyc_elementary_symmetric(i, point).is_zero():
            return False
        if cyc.cyc_elementary_symmetric(i, point[:-1]) != cyc.CycInt.from_int(m, (-1) ** i):
            return False
    return cyc.cyc_elementary_symmetric(m, point) == cyc.CycInt.from_int(m, (-1) ** (m + 1))


def _cyclotomic_ok(m):
    x = MPoly.var("x")
    prod = MPoly.const(1)
    for d in range(1, m + 1):
        if m % d == 0:
            prod = prod * cyc.cyclotomic_polynomial(d)
    # raises NotDivisible (a failed case) if Phi_m does not divide x^m - 1
    poly_divide_exact(x**m - 1, cyc.cyclotomic_polynomial(m))
    return prod == x**m - 1


def suite_special_values(caps):
    N, M = caps.get("max_n", 12), caps.get("max_m", 6)
    N2, M2 = caps.get("max_n", 10), caps.get("max_m", 5)
    S = "special-values"
    grid = [{"n": n, "m": m} for m in range(2, M + 1) for n in range(N + 1)]
    return [
        run_check(S, "roots-of-unity-values", grid, _roots_value_ok),
        run_check(S, "scaled-roots-values", grid, _scaled_value_ok),
        run_check(
            S, "fractional-power-values",
            ({"n": n, "m": m} for m in range(2, M2 + 1) for n in range(N2 + 1)),
            cyc.special2_check,
        ),
        run_check(
            S, "scaled-values-via-qshift",
            ({"n": n, "m": m} for m in range(2, M2 + 1) for n in range(m, N2 + 1)),
            cyc.special3_via_qshift_check,
        ),
        run_check(S, "root-elementary-symmetric", ({"m": m} for m in range(2, max(M, 8) + 1)), _root_symmetric_ok),
        run_check(S, "cyclotomic-factorization", ({"m": m} for m in range(1, max(M, 12) + 1)), _cyclotomic_ok),
    ]


def _multinomial_int(parts):
    out, rest = 1, sum(parts)
    for k in parts:
        out *= qk.binomial(rest, k)
        rest -= k
    return out


def _galois_seeds_ok(n):
    G = [qk.galois(j) for j in range(n + 2)]
    if G[0] != 1 or G[1] != 2:
        return False
    if [g.evaluate({"q": 2}) for g in G[:3]] != [1, 2, 5]:
        return False
    qn = MPoly.monomial(q=n) - 1
    return G[n + 1] == 2 * G[n] + qn * G[n - 1]


def suite_galois(caps):
    N, M = caps.get("max_n", 12), caps.get("max_m", 4)
    NC, MC = caps.get("max_n", 10), caps.get("max_m", 5)
    NM = caps.get("max_n", 8)
    S = "galois"
    pairs = [{"n": n, "k": k} for n in range(N + 1) for k in range(n + 1)]
    comps = [{"parts": c} for n in range(NM + 1) for m in range(1, M + 1) for c in qk.compositions(n, m)]
    return [
        run_check(S, "qbinomial-two-routes", pairs, lambda n, k: qk.qbinomial(n, k) == qk.qbinomial_by_division(n, k)),
        run_check(S, "qbinomial-symmetry", pairs, lambda n, k: qk.qbinomial(n, k) == qk.qbinomial(n, n - k)),
        run_check(
            S, "subspace-count-recursion",
            ({"n": n, "k": k} for n in range(1, N + 1) for k in range(1, n + 1)),
            lambda n, k: qk.qbinomial(n + 1, k)
            == qk.qbinomial(n, k)
            + qk.qbinomial(n, k - 1)
            + (MPoly.monomial(q=n) - 1) * qk.qbinomial(n - 1, k - 1),
        ),
        run_check(S, "qmultinomial-two-routes", comps, lambda parts: qk.qmultinomial(parts) == qk.qmultinomial_by_division(parts)),
        run_check(
            S, "qmultinomial-permutation", comps,
            lambda parts: all(qk.qmultinomial(p) == qk.qmultinomial(parts) for p in set(permutations(parts))),
        ),
        run_check(
            S, "qmultinomial-at-q1", comps,
            lambda parts: qk.qmultinomial(parts).evaluate({"q": 1}) == _multinomial_int(parts),
        ),
        run_check(
            S, "flag-count-recursion",
            ({"n": n, "m": m} for m in range(2, MC + 1) for n in range(m - 1, NC + 1)),
            qk.gengal_recursion_check,
        ),
        run_check(S, "galois-seeds", ({"n": n} for n in range(1, N + 1)), _galois_seeds_ok),
        run_check(
            S, "galois-is-length-two",
            ({"n": n} for n in range(N + 1)), lambda n: qk.galois_general(n, 2) == qk.galois(n),
        ),
    ]


def _zero_extension_cases(max_total, max_m):
    seen = set()
    for total in range(1, max_total + 1):
        for m in range(2, max_m + 3):
            for c in qk.compositions(total, m):
                zeros = c.count(0)
                if 1 <= zeros <= 2 and c not in seen:
                    seen.add(c)
                    yield {"parts": c}


def suite_gengal_lemma(caps):
    N1, M = caps.get("max_n", 9), caps.get("max_m", 4)
    S = "gengal-lemma"
    positive = (
        {"parts": c}
        for total in range(2, N1 + 1)
        for m in range(2, M + 1)
        for c in qk.compositions(total, m)
        if min(c) > 0
    )
    return [
        run_check(S, "multinomial-expansion", positive, lambda parts: qk.gengal_lemma_rhs(parts) == qk.qmultinomial(parts)),
        run_check(
            S, "zero-extension", _zero_extension_cases(min(N1, 7), M),
            lambda parts: qk.gengal_lemma_zero_extension(parts) == qk.qmultinomial(parts),
        ),
    ]


def _subspaces_ok(F, n, k):
    seen = set()
    for W in ff.enumerate_subspaces(F, n, k):
        if W.basis in seen or not W.is_rref() or W.k != k:
            return False
        seen.add(W.basis)
    return len(seen) == qk.qbinomial(n, k).evaluate({"q": F.q})


def suite_flag_oracle(caps):
    N, M = caps.get("max_n", 4), caps.get("max_m", 4)
    NS = caps.get("max_n", 5)
    S = "flag-oracle"
    sub_fields = _fields(caps, (2, 3, 4, 5))
    flag_fields = _fields(caps, (2, 3))
    results = [
        run_check(
            S, "subspace-counts",
            ({"F": F, "n": n, "k": k} for F in sub_fields for n in range(NS + 1) for k in range(n + 1)),
            _subspaces_ok,
        ),
        run_check(
            S, "flag-counts",
            (
                {"F": F, "parts": c}
                for F in flag_fields
                for n in range(N + 1)
                for m in range(2, M + 1)
                for c in qk.compositions(n, m)
            ),
            lambda F, parts: ff.count_flags(F, parts) == qk.qmultinomial(parts).evaluate({"q": F.q}),
        ),
        run_check(
            S, "total-flags",
            ({"F": F, "n": n, "m": m} for F in flag_fields for n in range(N + 1) for m in range(2, M + 1)),
            lambda F, n, m: ff.total_flags(F, n, m) == qk.galois_general(n, m).evaluate({"q": F.q}),
        ),
    ]
    return [_printable(r) for r in results]


def _census_ok(F, n1, k):
    n = n1 - 1
    at = {"q": F.q}

    def qb(a, b):
        return qk.qbinomial(a, b).evaluate(at) if 0 <= b <= a else 0

    expected = (qb(n, k), qb(n, k - 1), (F.q**n - 1) * qb(n - 1, k - 1))
    got = ff.type_census(F, n1, k)
    return got == expected and sum(got) == qb(n1, k)


def _pattern_ok(F, parts):
    at = {"q": F.q}
    total = 0
    for J in qk.nonempty_subsets(len(parts)):
        got = ff.flag_type_pattern_count(F, parts, J)
        if got != qk.lemma_term(parts, J).evaluate(at):
            return False
        total += got
    return total == ff.count_flags(F, parts)


def suite_type_census(caps):
    N1, M = caps.get("max_n", 4), caps.get("max_m", 3)
    S = "type-census"
    results = [
        run_check(
            S, "type-census",
            (
                {"F": F, "n1": n1, "k": k}
                for F in _fields(caps, (2, 3))
                for n1 in range(1, N1 + 1)
                for k in range(1, n1 + 1)
            ),
            _census_ok,
        ),
        run_check(
            S, "flag-type-patterns",
            (
                {"F": F, "parts": c}
                for F in _fields(caps, (2,))
                for total in range(2, N1 + 1)
                for m in range(2, M + 1)
                for c in qk.compositions(total, m)
                if min(c) > 0
            ),
            _pattern_ok,
        ),
    ]
    return [_printable(r) for r in results]


def _printable(result):
    # field specs become their order so records stay JSON-serializable
    if result.counterexample:
        result.counterexample = {
            k: (v.q if isinstance(v, ff.FieldSpec) else v) for k, v in result.counterexample.items()
        }
    return result


RUNNERS = {
    "euler": suite_euler,
    "genfn": suite_genfn,
    "thm-recursion": suite_thm_recursion,
    "qshift": suite_qshift,
    "special-values": suite_special_values,
    "galois": suite_galois,
    "gengal-lemma": suite_gengal_lemma,
    "flag-oracle": suite_flag_oracle,
    "type-census": suite_type_census,
}


def _run_one(args):
    name, caps = args
    return [_jsonable(r) for r in RUNNERS[name](caps)]


def _jsonable(result):
    if result.counterexample:
        result.counterexample = {
            k: (sorted(v) if isinstance(v, (set, frozenset)) else list(v) if isinstance(v, tuple) else v)
            for k, v in result.counterexample.items()
        }
    return result


def run_suite(name, caps=None, workers=None):
    """Run one suite, or every suite for ``"all"``; returns CheckResults in a fixed order."""
    caps = caps or Caps()
    names = list(SUITES) if name == "all" else [name]
    for n in names:
        if n not in RUNNERS:
            raise KeyError(n)
    if workers is None:
        workers = int(os.environ.get("QFLAG_THREADS", "1") or 1)
    jobs = [(n, caps) for n in names]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_run_one, jobs))
    else:
        batches = [_run_one(job) for job in jobs]
    return [r for batch in batches for r in batch]
