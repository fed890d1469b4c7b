"""Exhaustive censuses of symmetric companion classes.

A census walks every canonical graph of ``C_n^{alpha,eps}``, computes the
exponent with the breadth-first oracle and with the closed form, and keeps a
multiplicity-weighted histogram.  Disagreements are recorded, never raised.

Work is split into contiguous Y-ranges; partial results are merged in Y order
so the output does not depend on the number of workers.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable

from .companion import ALL_TAGS, MULTIPLICITY, ClassTag, graph_from_int, is_primitive
from .errors import CensusTooLargeError, PrimexpError
from .formula import ExponentResult, exponent_formula, exponent_set_10_by_k, exponent_set_formula, run_length_clauses
from .oracle import exponent_oracle_bfs, exponent_oracle_power
from .structure import debug_dump
from .table1 import TABLE1

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
DEFAULT_CAP = 16
CACHE_ENV = "PRIMEXP_CACHE_DIR"


@dataclass
class ExponentCensus:
    n: int
    tag: ClassTag
    primitive_count: int = 0
    imprimitive_count: int = 0
    histogram: dict[int, int] = field(default_factory=dict)
    mismatches: list[dict] = field(default_factory=list)
    # exponent histogram split by m(V_1), the longest run of non-neighbours of n
    by_m: dict[int, dict[int, int]] = field(default_factory=dict)

    @property
    def exponent_set(self) -> frozenset[int]:
        return frozenset(self.histogram)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "class": {"alpha": self.tag.alpha, "eps": self.tag.eps},
            "primitive": self.primitive_count,
            "imprimitive": self.imprimitive_count,
            "histogram": {str(b): c for b, c in sorted(self.histogram.items())},
            "mismatches": self.mismatches,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def csv_rows(self) -> list[tuple[int, int, int, int, int]]:
        return [(self.n, self.tag.alpha, self.tag.eps, b, c) for b, c in sorted(self.histogram.items())]

    def _cache_dict(self) -> dict:
        out = self.to_dict()
        out["by_m"] = {str(k): {str(b): c for b, c in sorted(h.items())} for k, h in sorted(self.by_m.items())}
        return out

    @classmethod
    def _from_cache_dict(cls, d: dict) -> "ExponentCensus":
        return cls(
            n=d["n"],
            tag=ClassTag(d["class"]["alpha"], d["class"]["eps"]),
            primitive_count=d["primitive"],
            imprimitive_count=d["imprimitive"],
            histogram={int(b): c for b, c in d["histogram"].items()},
            mismatches=d["mismatches"],
            by_m={int(k): {int(b): c for b, c in h.items()} for k, h in d["by_m"].items()},
        )


def _formula_entry(result) -> dict:
    if isinstance(result, ExponentResult):
        return {"value": result.value, "rule": result.rule}
    return {"value": None, "rule": "ERROR", "error": str(result)}


def _census_chunk(n: int, alpha: int, eps: int, lo: int, hi: int, check_power: bool, formula: Callable):
    """Census of Y in ``[lo, hi)``; returns plain data for cheap pickling."""
    tag = ClassTag(alpha, eps)
    prim = imprim = 0
    hist: Counter = Counter()
    by_m: dict[int, Counter] = {}
    mismatches = []
    for y in range(lo, hi):
        g = graph_from_int(n, tag, y)
        if not is_primitive(g):
            imprim += MULTIPLICITY
            continue
        prim += MULTIPLICITY
        oracle = exponent_oracle_bfs(g)
        hist[oracle] += MULTIPLICITY
        m = _longest_zero_run(g)
        by_m.setdefault(m, Counter())[oracle] += MULTIPLICITY
        try:
            res = formula(g)
        except PrimexpError as exc:
            res = exc
        power = exponent_oracle_power(g) if check_power else None
        ok = isinstance(res, ExponentResult) and res.value == oracle
        if check_power and power != oracle:
            ok = False
        if not ok:
            entry = {"y": g.y, "formula": _formula_entry(res), "oracle": oracle}
            if check_power:
                entry["power"] = power
            entry["dump"] = debug_dump(g)
            mismatches.append(entry)
    return prim, imprim, dict(hist), {k: dict(v) for k, v in by_m.items()}, mismatches


def _longest_zero_run(g) -> int:
    best = cur = 0
    last = g.last_row
    for i in range(g.n - 1):
        if last >> i & 1:
            cur = 0
        else:
            cur += 1
            best = max(best, cur)
    return best


def _ranges(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def _rules_fingerprint() -> str:
    here = Path(__file__).parent
    h = hashlib.sha256()
    for name in ("formula.py", "structure.py", "oracle.py", "census.py"):
        h.update((here / name).read_bytes())
    return h.hexdigest()[:12]


def _cache_path(n: int, tag: ClassTag, check_power: bool) -> Path | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    suffix = "-power" if check_power else ""
    name = f"census-v{SCHEMA_VERSION}-{_rules_fingerprint()}-n{n}-{tag.alpha}{tag.eps}{suffix}.json"
    return Path(root) / name


def run_census(
    n: int,
    tag: ClassTag,
    jobs: int = 1,
    *,
    cap: int = DEFAULT_CAP,
    check_power: bool = False,
    formula: Callable = exponent_formula,
) -> ExponentCensus:
    """Exhaustive census of ``C_n^{alpha,eps}``.

    ``formula`` is swappable for harness self-tests; non-default formulas are
    never cached.  ``check_power`` also runs the Boolean powering oracle.
    """
    if n < 3:
        raise PrimexpError(f"census needs n >= 3, got {n}")
    total = 1 << (n - 3)
    if n > cap:
        raise CensusTooLargeError(
            f"n={n} exceeds the census cap {cap}: {total} graphs per class "
            f"({4 * total} over all classes); raise the cap to proceed"
        )
    path = _cache_path(n, tag, check_power) if formula is exponent_formula else None
    if path is not None and path.exists():
        log.debug("census cache hit %s", path)
        return ExponentCensus._from_cache_dict(json.loads(path.read_text()))

    chunks = _ranges(total, jobs * 4 if jobs > 1 else 1)
    args = [(n, tag.alpha, tag.eps, lo, hi, check_power, formula) for lo, hi in chunks]
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_census_chunk, *zip(*args)))
    else:
        parts = [_census_chunk(*a) for a in args]

    census = ExponentCensus(n, tag)
    hist: Counter = Counter()
    by_m: dict[int, Counter] = {}
    for prim, imprim, h, bm, mism in parts:
        census.primitive_count += prim
        census.imprimitive_count += imprim
        hist.update(h)
        for k, v in bm.items():
            by_m.setdefault(k, Counter()).update(v)
        census.mismatches.extend(mism)
    census.histogram = dict(sorted(hist.items()))
    census.by_m = {k: dict(sorted(v.items())) for k, v in sorted(by_m.items())}

    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(census._cache_dict()))
    return census


@dataclass(frozen=True)
class Comparison:
    name: str
    expected: object
    actual: object
    passed: bool

    def to_dict(self) -> dict:
        return {"name": self.name, "expected": _jsonable(self.expected), "actual": _jsonable(self.actual), "passed": self.passed}


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class CensusReport:
    censuses: list[ExponentCensus] = field(default_factory=list)
    comparisons: list[Comparison] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.comparisons)

    @property
    def failures(self) -> list[Comparison]:
        return [c for c in self.comparisons if not c.passed]

    def census(self, n: int, tag: ClassTag) -> ExponentCensus:
        for c in self.censuses:
            if c.n == n and c.tag == tag:
                return c
        raise KeyError((n, tag))

    def check(self, name: str, expected, actual) -> None:
        self.comparisons.append(Comparison(name, expected, actual, expected == actual))

    def to_dict(self) -> dict:
        return {
            "censuses": [c.to_dict() for c in self.censuses],
            "comparisons": [c.to_dict() for c in self.comparisons],
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def table1(n_range: Iterable[int], jobs: int = 1) -> CensusReport:
    """Regenerate the exponent histograms; cells with a published value are compared."""
    report = CensusReport()
    for n in n_range:
        for tag in ALL_TAGS:
            c = run_census(n, tag, jobs)
            report.censuses.append(c)
            published = TABLE1.get((n, (tag.alpha, tag.eps)))
            if published is not None:
                report.check(f"table1 n={n} class={tag}", published, c.histogram)
    return report


def verify(n_range: Iterable[int], tags: Iterable[ClassTag] = ALL_TAGS, jobs: int = 1) -> CensusReport:
    """Formula against both oracles on every matrix; one comparison per ``(n, tag)``."""
    report = CensusReport()
    tags = tuple(tags)
    for n in n_range:
        for tag in tags:
            c = run_census(n, tag, jobs, check_power=True)
            report.censuses.append(c)
            report.check(f"verify n={n} class={tag}", 0, len(c.mismatches))
    return report


def exponent_sets_report(n_range: Iterable[int], jobs: int = 1) -> CensusReport:
    """Census exponent sets against the closed-form sets, including the k-stratified ones."""
    report = CensusReport()
    for n in n_range:
        for tag in ALL_TAGS:
            c = run_census(n, tag, jobs)
            report.censuses.append(c)
            if n >= 4:
                report.check(f"E(PSC_{n}^{tag})", exponent_set_formula(n, tag), c.exponent_set)
            if tag == ClassTag(1, 0) and n >= 4:
                for k in range(0, n - 2):
                    if k > 0 and n < 5:
                        continue
                    actual = frozenset(c.by_m.get(k, {}))
                    predicted = exponent_set_10_by_k(n, k)
                    clauses = run_length_clauses(n, k)
                    name = f"E(PSC_{n},{k}^1,0)"
                    if len(clauses) > 1:
                        name += " clauses " + ",".join(cid for cid, _ in clauses)
                    report.check(name, predicted, actual)
    return report


def closed_form_report(n_range: Iterable[int], jobs: int = 1) -> CensusReport:
    """Census histograms against the closed-form counts and bounds."""
    from . import combinatorics as cb

    report = CensusReport()
    for n in n_range:
        if n < 4:
            continue
        cs = {tag: run_census(n, tag, jobs) for tag in ALL_TAGS}
        report.censuses.extend(cs.values())
        h11, h01 = cs[ClassTag(1, 1)].histogram, cs[ClassTag(0, 1)].histogram
        h10, h00 = cs[ClassTag(1, 0)].histogram, cs[ClassTag(0, 0)].histogram
        for b in range(2, 2 * n - 1, 2):
            report.check(f"N_{n}^1,1({b})", cb.n11_count(n, b), h11.get(b, 0))
            report.check(f"N_{n}^0,1({b})", cb.n01_count(n, b), h01.get(b, 0))
        report.check(f"N_{n}^1,0(2)", cb.n10_lowest(n), h10.get(2, 0))
        top = max(b for b in range(2, n) if b % 2 == 0)
        if cb.n10_extremal(n) is not None:
            report.check(f"N_{n}^1,0({top})", cb.n10_extremal(n), h10.get(top, 0))
        report.check(f"N_{n}^0,0({2 * n - 4})", cb.n00_extremal(n), h00.get(2 * n - 4, 0))
        bounds = cb.n00_lowest_bounds(n)
        if bounds is not None:
            got = h00.get(4, 0)
            report.comparisons.append(
                Comparison(f"N_{n}^0,0(4) in bounds", list(bounds), got, bounds[0] <= got <= bounds[1])
            )
    return report
