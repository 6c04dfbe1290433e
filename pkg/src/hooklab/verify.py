"""Oracle-versus-closed-form checks, one function per identity.

Every ``verify_*`` function returns a :class:`VerificationReport`. Functions
that compare series accept a ``perturb`` callable that is applied to the
closed-form side before comparing; the mutation tests use it to show that a
single wrong coefficient is always caught.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from . import genfuns as gf
from .abacus import check_sc_properties, compose, decompose, decode, encode, is_t_core
from .partitions import (
    a_star_oracle,
    enumerate_partitions,
    enumerate_self_conjugate,
    hook_lengths,
    is_self_conjugate,
    n_hooks,
)
from .qseries import QSeries, X, XPoly

__all__ = [
    "VerificationReport",
    "TABLE_1",
    "DEFAULTS",
    "TARGETS",
    "brute_force_series",
    "sc_core_counts",
    "compare_series",
    "flip_coefficient",
    "verify_thm_1_1",
    "verify_thm_1_2",
    "verify_thm_3_1",
    "verify_lemma_3_2",
    "verify_lemma_3_3",
    "verify_bbcfw",
    "verify_euler",
    "verify_table_1",
    "verify_littlewood_suite",
    "reproduce_table_1",
    "run_target",
    "run_suite",
]

# a_t*(16) for t = 1..15; every larger t gives 0
TABLE_1 = (14, 14, 12, 12, 8, 6, 2, 8, 1, 0, 1, 0, 1, 0, 1)

DEFAULTS = {
    "bivariate_N": 30,
    "univariate_N": 40,
    "oracle_N": 30,
    "thm3.1_N": 24,
    "lemma3.2_N": 25,
    "lemma3.3_N": 24,
    "euler_N": 25,
    "littlewood": (20, 6),
    "bbcfw": (6, 200),
}

Perturb = Optional[Callable[[QSeries], QSeries]]


@dataclass
class VerificationReport:
    target: str
    parameters: dict
    status: str = "pass"
    mismatch: Optional[dict] = None
    runtime_ms: float = 0.0
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if (self.status == "pass") != (self.mismatch is None):
            raise ValueError("status must be 'pass' exactly when there is no mismatch")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, runtime: bool = True) -> dict:
        d = asdict(self)
        if not runtime:
            d.pop("runtime_ms")
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), default=str)


def _report(target: str, params: dict, start: float, mismatch: dict | None = None,
            **details) -> VerificationReport:
    params = {k: str(v) if isinstance(v, Fraction) else v for k, v in params.items()}
    return VerificationReport(
        target=target,
        parameters=params,
        status="pass" if mismatch is None else "fail",
        mismatch=mismatch,
        runtime_ms=round((time.perf_counter() - start) * 1000, 3),
        details=details,
    )


# oracles


def brute_force_series(t: int, N: int, family: str = "sc") -> QSeries:
    """``sum x^{n_t(p)} q^{|p|}`` over self-conjugate (or all) partitions of size <= N."""
    gen = enumerate_self_conjugate if family == "sc" else enumerate_partitions
    counts: Counter = Counter()
    for n in range(N + 1):
        for p in gen(n):
            counts[(n, n_hooks(p, t))] += 1
    return QSeries.from_terms(N, counts)


def sc_core_counts(t: int, N: int) -> list[int]:
    return [sum(1 for p in enumerate_self_conjugate(n) if is_t_core(p, t)) for n in range(N + 1)]


# comparison


def compare_series(lhs: QSeries, rhs: QSeries) -> dict | None:
    """First disagreement, smallest q-exponent first, then smallest x-exponent."""
    if lhs.N != rhs.N:
        raise ValueError(f"truncation mismatch: {lhs.N} vs {rhs.N}")
    for qe, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a == b:
            continue
        for xe in sorted(set(a.terms) | set(b.terms)):
            ca, cb = a.terms.get(xe, 0), b.terms.get(xe, 0)
            if ca != cb:
                return {"q": qe, "x": xe, "lhs": str(ca), "rhs": str(cb)}
    return None


def flip_coefficient(s: QSeries, q: int, x: int = 0, delta=1) -> QSeries:
    """Copy of ``s`` with ``delta`` added to the coefficient of ``x^x q^q``."""
    return s + QSeries.monomial(s.N, q, XPoly.monomial(x, delta))


def _apply(perturb: Perturb, s: QSeries) -> QSeries:
    return perturb(s) if perturb is not None else s


# identity checks


def verify_thm_1_1(t: int, N: int = 30, perturb: Perturb = None) -> VerificationReport:
    start = time.perf_counter()
    branch = "even" if t % 2 == 0 else "odd"
    rhs = _apply(perturb, gf.thm11_rhs(t, N))
    lhs = brute_force_series(t, N)
    return _report(f"thm1.1.{branch}", {"t": t, "N": N}, start, compare_series(lhs, rhs))


def verify_thm_1_2(t: int, N: int = 40, oracle_N: int = 30,
                   perturb: Perturb = None) -> VerificationReport:
    """Brute force, closed-form series and convolution formula must agree."""
    start = time.perf_counter()
    params = {"t": t, "N": N, "oracle_N": oracle_N}
    series = _apply(perturb, gf.a_star_series(t, N))
    formula = QSeries.from_univariate(N, (gf.a_star_formula(t, n) for n in range(N + 1)))
    mismatch = compare_series(formula, series)
    if mismatch is not None:
        mismatch["sides"] = "formula/series"
    else:
        M = min(N, oracle_N)
        oracle = QSeries.from_univariate(M, (a_star_oracle(t, n) for n in range(M + 1)))
        mismatch = compare_series(oracle, series.truncate(M))
        if mismatch is not None:
            mismatch["sides"] = "oracle/series"
    at16 = series.coefficient(16) if N >= 16 else None
    return _report("thm1.2", params, start, mismatch, a_star_16=at16)


def verify_thm_3_1(N: int = 24, points: Sequence = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 5)),
                   perturb: Perturb = None) -> VerificationReport:
    """Formula (2) formally, formula (1) at ``x = (1-r^2)/(1+r^2)`` for each ``r``."""
    start = time.perf_counter()
    points = [Fraction(r) for r in points]
    params = {"N": N, "points": [str(r) for r in points]}
    for r in points:
        gf.rational_point(r)  # rejects r < 0 and r = 1 before any work
    brute = brute_force_series(1, N)
    formal = _apply(perturb, gf.thm31_formula2(N))
    mismatch = compare_series(brute, formal)
    if mismatch is not None:
        mismatch["formula"] = 2
        return _report("thm3.1", params, start, mismatch)
    for r in points:
        x, _ = gf.rational_point(r)
        mismatch = compare_series(brute.evaluate_x(x), _apply(perturb, gf.thm31_formula1_at(r, N)))
        if mismatch is not None:
            mismatch.update(formula=1, r=str(r), x_value=str(x))
            return _report("thm3.1", params, start, mismatch)
    return _report("thm3.1", params, start)


def verify_lemma_3_2(points: Sequence = (1, Fraction(4, 5), Fraction(3, 2), Fraction(1, 7)),
                     N: int = 25, perturb: Perturb = None) -> VerificationReport:
    start = time.perf_counter()
    points = [Fraction(s) for s in points]
    params = {"N": N, "sqrtA": [str(s) for s in points]}
    for s in points:
        checks = [("F", gf.F_sum(s * s, N))]
        if s != 0:
            checks.append(("G", gf.G_sum(s * s, N)))
        for which, total in checks:
            product = _apply(perturb, gf.FG_product_rhs(s, which, N))
            mismatch = compare_series(total, product)
            if mismatch is not None:
                mismatch.update(which=which, sqrtA=str(s))
                return _report("lemma3.2", params, start, mismatch)
    return _report("lemma3.2", params, start)


def verify_lemma_3_3(t: int, N: int = 24, perturb: Perturb = None) -> VerificationReport:
    start = time.perf_counter()
    product = _apply(perturb, gf.gks_core_genfun(t, N))
    counts = QSeries.from_univariate(N, sc_core_counts(t, N))
    return _report("lemma3.3", {"t": t, "N": N}, start, compare_series(counts, product))


def verify_euler(zs: Sequence = (1, X), N: int = 25, perturb: Perturb = None) -> VerificationReport:
    start = time.perf_counter()
    params = {"N": N, "z": [str(z) for z in zs]}
    for z in zs:
        z = XPoly.coerce(z)
        product = _apply(perturb, gf.pochhammer(-z, 0, 1, None, N))
        mismatch = compare_series(gf.euler_expand(z, N), product)
        if mismatch is not None:
            mismatch["z"] = str(z)
            return _report("euler", params, start, mismatch)
    return _report("euler", params, start)


def verify_bbcfw(m_max: int = 6, n_max: int = 200, oracle_max: int = 30) -> VerificationReport:
    """``2m | a_{2m}*(n)``: by the formula up to ``n_max``, by enumeration up to ``oracle_max``."""
    start = time.perf_counter()
    params = {"m_max": m_max, "n_max": n_max, "oracle_max": oracle_max}
    for m in range(1, m_max + 1):
        t = 2 * m
        for n in range(n_max + 1):
            value = gf.a_star_formula(t, n)
            if value % t:
                return _report("bbcfw", params, start,
                               {"q": n, "x": 0, "lhs": str(value), "rhs": f"multiple of {t}",
                                "t": t, "source": "formula"})
            if n <= oracle_max:
                brute = a_star_oracle(t, n)
                if brute != value:
                    return _report("bbcfw", params, start,
                                   {"q": n, "x": 0, "lhs": str(brute), "rhs": str(value),
                                    "t": t, "source": "oracle/formula"})
    return _report("bbcfw", params, start)


def reproduce_table_1(n: int = 16, method: str = "oracle") -> list[tuple[int, int]]:
    """``(t, a_t*(n))`` for ``t = 1..n``; ``a_t*(n) = 0`` for every ``t > n``."""
    if method == "oracle":
        hooks: Counter = Counter()
        for p in enumerate_self_conjugate(n):
            hooks.update(hook_lengths(p))
        return [(t, hooks[t]) for t in range(1, n + 1)]
    if method == "formula":
        return [(t, gf.a_star_formula(t, n)) for t in range(1, n + 1)]
    if method == "series":
        return [(t, gf.a_star_series(t, n).coefficient(n)) for t in range(1, n + 1)]
    raise ValueError(f"unknown method {method!r}")


def verify_table_1(n: int = 16) -> VerificationReport:
    """All three methods agree; for ``n = 16`` they must also equal the published table."""
    start = time.perf_counter()
    rows = {m: reproduce_table_1(n, m) for m in ("oracle", "formula", "series")}
    published = None
    if n == 16:
        published = list(enumerate(TABLE_1 + (0,), start=1))
    for i, (t, value) in enumerate(rows["oracle"]):
        for other in ("formula", "series"):
            if rows[other][i][1] != value:
                return _report("table1", {"n": n}, start,
                               {"q": n, "x": 0, "lhs": str(value), "rhs": str(rows[other][i][1]),
                                "t": t, "sides": f"oracle/{other}"})
        if published is not None and published[i][1] != value:
            return _report("table1", {"n": n}, start,
                           {"q": n, "x": 0, "lhs": str(value), "rhs": str(published[i][1]),
                            "t": t, "sides": "oracle/published"})
    return _report("table1", {"n": n}, start, values=[v for _, v in rows["oracle"]])


def verify_littlewood_suite(n_max: int = 20, t_max: int = 6) -> VerificationReport:
    """Codec and bijection round trips, core, size and hook laws, and SC1-SC4."""
    start = time.perf_counter()
    params = {"n_max": n_max, "t_max": t_max}

    def fail(check, p, t, lhs, rhs):
        return _report("littlewood", params, start,
                       {"q": sum(p), "x": None, "lhs": str(lhs), "rhs": str(rhs),
                        "check": check, "partition": ",".join(map(str, p)) or "-", "t": t})

    checked = 0
    for n in range(n_max + 1):
        for p in enumerate_partitions(n):
            if decode(encode(p)) != p:
                return fail("codec", p, None, decode(encode(p)), p)
            for t in range(1, t_max + 1):
                img = decompose(p, t)
                if not is_t_core(img.core, t):
                    return fail("core", p, t, img.core, "t-core")
                if img.core.size + t * img.weight != n:
                    return fail("size", p, t, img.core.size + t * img.weight, n)
                if compose(img) != p:
                    return fail("roundtrip", p, t, compose(img), p)
                if decompose(compose(img), t) != img:
                    return fail("roundtrip-image", p, t, decompose(compose(img), t), img)
                divisible = Counter({h: c for h, c in hook_lengths(p).items() if h % t == 0})
                scaled = Counter()
                for nu in img.quotient:
                    scaled.update({t * h: c for h, c in hook_lengths(nu).items()})
                if divisible != scaled:
                    return fail("hook-law", p, t, sorted(divisible.elements()), sorted(scaled.elements()))
                if is_self_conjugate(p):
                    sc = check_sc_properties(p, t)
                    if not sc.ok:
                        return fail(sc.failed, p, t, sc.lhs, sc.rhs)
                    quotient_ones = sum(n_hooks(nu, 1) for nu in img.quotient)
                    if n_hooks(p, t) != quotient_ones:
                        return fail("hook-count", p, t, n_hooks(p, t), quotient_ones)
                checked += 1
    return _report("littlewood", params, start, checked=checked)


# suite runner

TARGETS = ("thm1.1", "thm1.2", "thm3.1", "lemma3.2", "lemma3.3", "littlewood", "bbcfw",
           "table1", "euler")


def run_target(target: str, ts: Sequence[int] | None = None,
               qmax: int | None = None) -> list[VerificationReport]:
    """Run one named target with the default desk-scale parameters.

    ``ts`` restricts the values of ``t``; ``qmax`` replaces every truncation order.
    """
    D = DEFAULTS
    if target == "thm1.1":
        return [verify_thm_1_1(t, qmax if qmax is not None else D["bivariate_N"])
                for t in (ts or range(1, 7))]
    if target == "thm1.2":
        N = qmax if qmax is not None else D["univariate_N"]
        return [verify_thm_1_2(t, N, min(N, D["oracle_N"])) for t in (ts or range(1, 9))]
    if target == "thm3.1":
        return [verify_thm_3_1(qmax if qmax is not None else D["thm3.1_N"])]
    if target == "lemma3.2":
        return [verify_lemma_3_2(N=qmax if qmax is not None else D["lemma3.2_N"])]
    if target == "lemma3.3":
        return [verify_lemma_3_3(t, qmax if qmax is not None else D["lemma3.3_N"])
                for t in (ts or range(1, 7))]
    if target == "littlewood":
        n_max, t_max = D["littlewood"]
        if qmax is not None:
            n_max = qmax
        if ts:
            t_max = max(ts)
        return [verify_littlewood_suite(n_max, t_max)]
    if target == "bbcfw":
        m_max, n_max = D["bbcfw"]
        if ts:
            m_max = max(max(ts) // 2, 1)
        return [verify_bbcfw(m_max, qmax if qmax is not None else n_max)]
    if target == "table1":
        return [verify_table_1(qmax if qmax is not None else 16)]
    if target == "euler":
        return [verify_euler(N=qmax if qmax is not None else D["euler_N"])]
    raise ValueError(f"unknown target {target!r}; choose from {', '.join(TARGETS)}")


def _run_target_star(args):
    return run_target(*args)


def run_suite(targets: Iterable[str] = TARGETS, ts: Sequence[int] | None = None,
              qmax: int | None = None, jobs: int = 1) -> list[VerificationReport]:
    targets = list(targets)
    for target in targets:
        if target not in TARGETS:
            raise ValueError(f"unknown target {target!r}; choose from {', '.join(TARGETS)}")
    work = [(target, ts, qmax) for target in targets]
    if jobs <= 1:
        batches = [_run_target_star(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_run_target_star, work))
    return [report for batch in batches for report in batch]
