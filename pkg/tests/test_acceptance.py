"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are written
straight to the terminal, no ``-s`` needed).
"""
import io
import json
import time
from collections import Counter
from fractions import Fraction

import pytest

from hooklab import genfuns as gf
from hooklab import verify as V
from hooklab.abacus import decompose
from hooklab.cli import main
from hooklab.partitions import Partition, count_distinct_odd, hook_lengths
from hooklab.qseries import X

LAMBDA = Partition((7, 7, 5, 4, 3, 2, 2))


@pytest.fixture
def criterion(capsys):
    """Time a block, print one PASS/FAIL line and enforce the budget."""

    class Run:
        def __init__(self, k, title, budget):
            self.k, self.title, self.budget = k, title, budget
            self.failures = []

        def check(self, ok, what):
            if not ok:
                self.failures.append(what)

        def __enter__(self):
            self.start = time.perf_counter()
            return self

        def __exit__(self, exc_type, exc, tb):
            elapsed = time.perf_counter() - self.start
            if exc_type is not None:
                self.failures.append(f"{exc_type.__name__}: {exc}")
            if self.budget is not None and elapsed >= self.budget:
                self.failures.append(f"runtime {elapsed:.2f}s over {self.budget}s")
            status = "FAIL" if self.failures else "PASS"
            budget = f" / {self.budget}s" if self.budget is not None else ""
            with capsys.disabled():
                print(f"\n{status} criterion {self.k}: {self.title} ({elapsed:.2f}s{budget})")
                for f in self.failures:
                    print(f"    {f}")
            assert not self.failures, self.failures
            return True

    return Run


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue().splitlines()


def test_criterion_01_table(criterion):
    with criterion(1, "table of a_t*(16)", 5) as c:
        code, lines = cli("table", "--n", "16")
        rows = [json.loads(line) for line in lines]
        values = [r["a_star"] for r in rows[:15]]
        c.check(code == 0, f"exit code {code}")
        c.check(values == [14, 14, 12, 12, 8, 6, 2, 8, 1, 0, 1, 0, 1, 0, 1], f"t=1..15 gave {values}")
        c.check(rows[15] == {"t": ">=16", "a_star": 0}, f"tail row {rows[15:]}")
        # the tail claim, checked explicitly for a stretch of t beyond 16
        c.check(all(gf.a_star_formula(t, 16) == 0 for t in range(16, 40)), "nonzero tail")


def test_criterion_02_worked_identities(criterion):
    with criterion(2, "worked identities via count --method formula", 1) as c:
        q = count_distinct_odd
        c.check(2 * (q(12) + q(8) + q(4) + q(0)) == 14, "2(q*(12)+q*(8)+q*(4)+q*(0)) != 14")
        for t, expected in ((2, 14), (4, 12), (6, 6), (8, 8)):
            code, lines = cli("count", "--t", str(t), "--n", "16", "--method", "formula")
            c.check(code == 0 and lines == [str(expected)], f"t={t}: {lines}")


def test_criterion_03_bivariate_closed_forms(criterion):
    with criterion(3, "bivariate closed forms, t=1..6 through q^30", 120) as c:
        for t in range(1, 7):
            report = V.verify_thm_1_1(t, 30)
            c.check(report.passed, f"t={t}: {report.mismatch}")


def test_criterion_04_three_way_counts(criterion):
    with criterion(4, "oracle/series/formula for t=1..8", 120) as c:
        for t in range(1, 9):
            report = V.verify_thm_1_2(t, N=40, oracle_N=30)
            c.check(report.passed, f"t={t}: {report.mismatch}")


def test_criterion_05_one_hook_series(criterion):
    with criterion(5, "one-hook formulas, formal and at rational points", 60) as c:
        report = V.verify_thm_3_1(24, [Fraction(1, 2), Fraction(1, 3), Fraction(2, 5)])
        c.check(report.passed, f"required points: {report.mismatch}")
        # N/2 + 1 distinct points on top of the formal check
        extra = [Fraction(1, k) for k in range(2, 15)]
        report = V.verify_thm_3_1(24, extra)
        c.check(report.passed, f"13 points: {report.mismatch}")


def test_criterion_06_sum_product(criterion):
    with criterion(6, "F and G sum vs product", 30) as c:
        report = V.verify_lemma_3_2([1, Fraction(4, 5), Fraction(3, 2), Fraction(1, 7)], 25)
        c.check(report.passed, str(report.mismatch))


def test_criterion_07_core_counts(criterion):
    with criterion(7, "self-conjugate core products, t=1..6 through q^24", 60) as c:
        for t in range(1, 7):
            report = V.verify_lemma_3_3(t, 24)
            c.check(report.passed, f"t={t}: {report.mismatch}")


def test_criterion_08_littlewood(criterion):
    with criterion(8, "Littlewood suite n<=20, t<=6 plus worked example", 120) as c:
        report = V.verify_littlewood_suite(20, 6)
        c.check(report.passed, str(report.mismatch))
        img = decompose(LAMBDA, 4)
        c.check(img.core == (3, 2, 1), f"core {img.core}")
        four = sorted((h for h in hook_lengths(LAMBDA).elements() if h % 4 == 0), reverse=True)
        c.check(four == [12, 12, 8, 8, 4, 4], f"hooks divisible by 4: {four}")
        quotient_hooks = Counter()
        for nu in img.quotient:
            quotient_hooks.update(hook_lengths(nu))
        c.check(quotient_hooks == Counter([3, 2, 1, 3, 2, 1]), f"quotient hooks {quotient_hooks}")


def test_criterion_09_divisibility(criterion):
    with criterion(9, "2m divides a_2m*(n), m<=6, n<=200", 30) as c:
        report = V.verify_bbcfw(6, 200, oracle_max=30)
        c.check(report.passed, str(report.mismatch))


def _flip_positions(series):
    lo = min((s.min_exp for s in series.coeffs if s), default=0)
    hi = max((s.max_exp for s in series.coeffs if s), default=0)
    for q in range(series.N + 1):
        for x in range(lo - 1, hi + 2):
            yield q, x


def _mutation_cases():
    """(name, runner) where runner(perturb) returns a report."""
    cases = []
    for t in range(1, 7):
        cases.append((f"thm1.1 t={t}", lambda p, t=t: V.verify_thm_1_1(t, 12, perturb=p)))
    for t in range(1, 5):
        cases.append((f"thm1.2 t={t}", lambda p, t=t: V.verify_thm_1_2(t, 12, 12, perturb=p)))
    cases.append(("thm3.1", lambda p: V.verify_thm_3_1(10, perturb=p)))
    cases.append(("lemma3.2", lambda p: V.verify_lemma_3_2(N=10, perturb=p)))
    for t in range(1, 7):
        cases.append((f"lemma3.3 t={t}", lambda p, t=t: V.verify_lemma_3_3(t, 12, perturb=p)))
    cases.append(("euler", lambda p: V.verify_euler(N=10, perturb=p)))
    return cases


def test_criterion_10_mutation_sensitivity(criterion):
    with criterion(10, "single-coefficient flips are caught", None) as c:
        flips = 0
        for name, runner in _mutation_cases():
            # record every closed-form series the target builds
            seen = []
            clean = runner(lambda s: seen.append(s) or s)
            c.check(clean.passed, f"{name} unperturbed: {clean.mismatch}")
            for k, rhs in enumerate(seen):
                for q, x in _flip_positions(rhs):
                    for delta in (1, -1):
                        calls = iter(range(len(seen)))

                        def perturb(s, k=k, q=q, x=x, delta=delta, calls=calls):
                            return V.flip_coefficient(s, q, x, delta) if next(calls) == k else s

                        report = runner(perturb)
                        flips += 1
                        m = report.mismatch
                        ok = (report.status == "fail" and m is not None
                              and m["q"] == q and m["x"] == x and "lhs" in m and "rhs" in m)
                        c.check(ok, f"{name} rhs#{k} flip at q={q} x={x} delta={delta}: {report.to_dict()}")
        c.check(flips > 1000, f"only {flips} flips tried")
        # full-size spot checks at the acceptance truncations
        report = V.verify_thm_1_1(6, 30, perturb=lambda s: V.flip_coefficient(s, 30, 5))
        c.check(report.status == "fail" and (report.mismatch["q"], report.mismatch["x"]) == (30, 5),
                f"thm1.1 at q^30: {report.mismatch}")
        report = V.verify_thm_1_2(8, perturb=lambda s: V.flip_coefficient(s, 40, 0))
        c.check(report.status == "fail" and report.mismatch["q"] == 40, f"thm1.2 at q^40: {report.mismatch}")


def test_criterion_11_euler(criterion):
    with criterion(11, "Euler sum vs product for z in {1, x} through q^25", None) as c:
        report = V.verify_euler((1, X), 25)
        c.check(report.passed, str(report.mismatch))
