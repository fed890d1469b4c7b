"""Closed-form exponents of primitive symmetric companion matrices.

Every result carries the identifier of the clause that produced it:

========  ===================================================================
T32-1     loop at ``n`` and ``alpha = 1``: ``2(t+1)``, ``t = floor((m+1)/2)``
T32-2     loop at ``n`` and ``alpha = 0``: ``t = max(h-1, floor((m+1)/2))``
T42-1a/b  ``alpha = 1``, no loop, ``m`` odd: ``m+se+5`` / ``m+se+3``
T42-2a/b  ``m`` even, ``mo >= m-se-1``: ``mo+se+5`` / ``mo+se+3``
T42-3     remaining ``alpha = 1`` cases: ``m+2``
T53-1a/b/c  ``alpha = 0``, no loop, ``m`` odd: ``2h'+se`` / ``m+se+5`` / ``m+se+3``
T53-2a/b/c  ``m`` even without a large odd run: ``m+2`` / ``2h+se`` / ``2h+se+2``
NOTE51a/b/c  ``m`` even with ``mo > m-se-3``: the T53-1 clauses with ``m := mo``
========  ===================================================================

Here ``m``, ``mo`` and ``se`` are measured on ``V_1^h`` (equal to ``V_1``
when ``alpha = 1``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .companion import ClassTag, SymCompanionGraph, is_primitive
from .errors import FormulaInconsistencyError, ImprimitiveError
from .structure import association_flag, struct_params

RULES = (
    "T32-1", "T32-2",
    "T42-1a", "T42-1b", "T42-2a", "T42-2b", "T42-3",
    "T53-1a", "T53-1b", "T53-1c", "T53-2a", "T53-2b", "T53-2c",
    "NOTE51a", "NOTE51b", "NOTE51c",
)


@dataclass(frozen=True)
class ExponentResult:
    value: int
    rule: str


def _alpha1_no_loop(g, p, flag) -> ExponentResult:
    m, mo, se = p.m, p.mo, p.se
    if m % 2:
        if flag(m):
            return ExponentResult(m + se + 5, "T42-1a")
        return ExponentResult(m + se + 3, "T42-1b")
    if mo is not None and mo >= m - se - 1:
        if flag(mo):
            return ExponentResult(mo + se + 5, "T42-2a")
        return ExponentResult(mo + se + 3, "T42-2b")
    return ExponentResult(m + 2, "T42-3")


def _alpha0_odd(m, se, h_prime, flag, prefix) -> ExponentResult:
    # m odd, so (m + 3) / 2 and (m + 5) / 2 are consecutive integers
    if 2 * h_prime >= m + 5:
        return ExponentResult(2 * h_prime + se, prefix + "a")
    if 2 <= h_prime and 2 * h_prime <= m + 3 and flag(m):
        return ExponentResult(m + se + 5, prefix + "b")
    return ExponentResult(m + se + 3, prefix + "c")


def _alpha0_no_loop(g, p, flag) -> ExponentResult:
    m, mo, se, h = p.m, p.mo, p.se, p.h
    if m % 2:
        return _alpha0_odd(m, se, p.h_prime, flag, "T53-1")
    if mo is not None and mo > m - se - 3:
        return _alpha0_odd(mo, se, p.h_prime, flag, "NOTE51")
    if 2 <= h and 2 * h <= m - se:
        return ExponentResult(m + 2, "T53-2a")
    if 2 * h >= m - se + 2:
        if p.ch_length == se + 3:
            return ExponentResult(2 * h + se, "T53-2b")
        return ExponentResult(2 * h + se + 2, "T53-2c")
    raise FormulaInconsistencyError(f"no clause covers {g}")


def exponent_formula(g: SymCompanionGraph) -> ExponentResult:
    """``exp(A)`` from the structural parameters of ``g``."""
    if not is_primitive(g):
        raise ImprimitiveError(f"{g} is imprimitive")
    p = struct_params(g)
    if g.tag.eps:
        t = (p.m + 1) // 2
        if g.tag.alpha:
            return ExponentResult(2 * (t + 1), "T32-1")
        t = max(p.h - 1, t)
        return ExponentResult(2 * (t + 1), "T32-2")

    def flag(target: int) -> bool:
        return association_flag(g, p.v1h, target)

    if g.tag.alpha:
        return _alpha1_no_loop(g, p, flag)
    return _alpha0_no_loop(g, p, flag)


def exponent_set_formula(n: int, tag: ClassTag) -> frozenset[int]:
    """Exponents attained in ``PSC_n^{alpha,eps}`` for ``n >= 4``."""
    if tag == ClassTag(1, 1):
        return frozenset(2 * (t + 1) for t in range(0, (n - 2) // 2 + 1))
    if tag == ClassTag(0, 1):
        return frozenset(2 * t for t in range(2, n))
    if tag == ClassTag(1, 0):
        return frozenset(2 * t for t in range(1, (n - 1) // 2 + 1))
    return frozenset(2 * t for t in range(2, n - 1))


def _evens(lo: int, hi: int) -> frozenset[int]:
    return frozenset(x for x in range(lo, hi + 1) if x % 2 == 0)


def part4_top(n: int, k: int) -> int | None:
    """Largest exponent ``l`` for odd ``k`` and even ``n`` (``None`` if ``n - k - 4`` is even)."""
    d = n - k - 4
    q, r = divmod(d, 4)
    if r == 1:
        return k + 2 * q + 3
    if r == 3:
        return k + 2 * q + 5
    return None


def run_length_clauses(n: int, k: int) -> list[tuple[str, frozenset[int]]]:
    """Every clause of the k-stratified exponent-set theorem that applies to ``(n, k)``.

    Listed in precedence order; more than one entry means overlapping clauses.
    """
    out: list[tuple[str, frozenset[int]]] = []
    if k == 0:
        return [("k0", frozenset({2}))]
    odd_n, odd_k = n % 2 == 1, k % 2 == 1
    if (odd_n and n >= 2 * (k + 2) + 1) or (not odd_n and n >= 3 * (k + 2) - 1):
        out.append(("1", _evens(k + 2, 2 * (k + 2))))
    if odd_k and odd_n and k + 3 <= n <= 2 * (k + 2) - 1:
        out.append(("2", _evens(k + 2, n - 1)))
    if not odd_k and odd_n and k + 3 <= n <= 2 * (k + 2) - 1:
        if n in (k + 5, k + 7):
            out.append(("3b", _evens(k + 2, n - 1)))
        else:
            out.append(("3a", _evens(k + 2, n - 1) - {k + 4}))
    if odd_k and not odd_n and k + 5 <= n <= 3 * (k + 1):
        out.append(("4", _evens(k + 3, part4_top(n, k))))
    if not odd_k and not odd_n:
        if k + 4 <= n <= 3 * k + 2:
            if n - k <= k + 2:
                out.append(("5b", frozenset({k + 2})))
            out.append(("5a", _evens(k + 2, n - k)))
        if n == 3 * k + 4:
            out.append(("5c", _evens(k + 2, 2 * (k + 1))))
    return out


def exponent_set_10_by_k(n: int, k: int) -> frozenset[int] | None:
    """Exponents of ``PSC_{n,k}^{1,0}`` (longest zero-run of Y equal to ``k``).

    ``None`` marks an ``(n, k)`` that no clause covers.  The single even-order
    class with ``k = n - 3`` (Y all zeros) is imprimitive, hence empty.
    """
    clauses = run_length_clauses(n, k)
    if clauses:
        return clauses[0][1]
    if k == n - 3 and n % 2 == 0:
        return frozenset()
    return None
