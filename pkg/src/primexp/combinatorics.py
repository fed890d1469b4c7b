"""Run-length string counts and closed-form exponent counts.

``f_count(n, q, k)`` counts binary strings of length ``n`` with ``q`` zeros whose
longest block of zeros has length exactly ``k``; ``t_count(r, n)`` counts
strings of length ``n`` with no block of ``r`` consecutive ones.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .companion import MULTIPLICITY
from .errors import InvalidParameterError
from .formula import part4_top


@lru_cache(maxsize=None)
def _zero_run_table(n: int) -> dict[tuple[int, int], int]:
    """``{(q, k): count}`` over all strings of length ``n``."""
    # state: (zeros used, current trailing zero run, longest run so far)
    states = {(0, 0, 0): 1}
    for _ in range(n):
        nxt: dict[tuple[int, int, int], int] = {}
        for (q, cur, best), c in states.items():
            key = (q, 0, best)
            nxt[key] = nxt.get(key, 0) + c
            run = cur + 1
            key = (q + 1, run, max(best, run))
            nxt[key] = nxt.get(key, 0) + c
        states = nxt
    table: dict[tuple[int, int], int] = {}
    for (q, _, best), c in states.items():
        table[q, best] = table.get((q, best), 0) + c
    return table


def f_count(n: int, q: int, k: int) -> int:
    """``F_n(q, k)``; zero outside ``n >= q >= k >= 0``."""
    if n < 0 or not n >= q >= k >= 0:
        return 0
    return _zero_run_table(n).get((q, k), 0)


@lru_cache(maxsize=None)
def _t_count(r: int, n: int) -> int:
    if n < r:
        return 1 << n
    return sum(_t_count(r, n - i) for i in range(1, r + 1))


def t_count(r: int, n: int) -> int:
    """``T_r(n)`` via the ``r``-step recurrence ``T(n) = T(n-1) + ... + T(n-r)``."""
    if r < 2:
        raise InvalidParameterError(f"r must be >= 2, got {r}")
    if n < 0:
        raise InvalidParameterError(f"n must be >= 0, got {n}")
    # iterate upward so deep n does not hit the recursion limit
    for i in range(0, n, 256):
        _t_count(r, i)
    return _t_count(r, n)


def n11_count(n: int, b: int) -> int:
    """Matrices of ``PSC_n^{1,1}`` with exponent ``b``.

    The exponent depends on ``m(V_1)`` only through ``floor((m+1)/2)``, so both
    ``m = 2t - 1`` and ``m = 2t`` contribute.
    """
    if b % 2 or b < 2:
        return 0
    t = b // 2 - 1
    total = 0
    for m in {max(2 * t - 1, 0), 2 * t}:
        if m > n - 3:
            continue
        total += sum(f_count(n - 3, q, m) for q in range(m, n - 2))
    return MULTIPLICITY * total


def n01_count(n: int, b: int) -> int:
    """Matrices of ``PSC_n^{0,1}`` with exponent ``b``."""
    if b % 2 or b < 4:
        return 0
    t = b // 2 - 1
    total = 0
    for i in range(0, t - 1):
        size = n - i - 4
        for k in (2 * t - 1, 2 * t):
            total += sum(f_count(size, q, k) for q in range(k, size + 1))
    tail = n - t - 3
    # tail == -1 is h = n-1: the single all-zero Y
    if tail >= 0:
        total += t_count(2 * t + 1, tail)
    elif tail == -1:
        total += 1
    return MULTIPLICITY * total


def s10_allowed_k(n: int, b: int) -> frozenset[int]:
    """Values of ``m(V_1)`` admitted for exponent ``b`` in ``PSC_n^{1,0}``.

    Only inclusions with a proof behind them are returned, so for
    odd ``n`` outside ``[b+5, 2b-5]`` the result is just ``{b - 2}``.
    """
    if b % 2 or b <= 2:
        raise InvalidParameterError(f"b must be an even exponent > 2, got {b}")
    # k = 0 forces exponent 2, so the interval starts at 1 at the latest
    lo, hi = max((b - 4) // 2, 1), b - 2
    allowed = {b - 2}
    if n % 2 and b + 5 <= n <= 2 * b - 5:
        allowed |= set(range(lo, hi + 1)) - {b - 4}
    elif n % 2 == 0:
        split = (n + 1) // 3 - 1
        allowed |= set(range(lo, min(hi, split - 1) + 1))
        for k in range(max(lo, split), hi + 1):
            if k % 2:
                l = part4_top(n, k) if k + 5 <= n <= 3 * (k + 1) else None
                if l is not None and l >= b:
                    allowed.add(k)
            else:
                if k <= n - b and 2 * k + 4 <= n <= 3 * k + 2:
                    allowed.add(k)
                if n == 3 * k + 4 and 3 * b <= 2 * (n - 1):
                    allowed.add(k)
    return frozenset(allowed)


def n10_lowest(n: int) -> int | None:
    """``N_n^{1,0}(2)``."""
    return MULTIPLICITY if n >= 4 else None


def n10_extremal(n: int) -> int | None:
    """``N_n^{1,0}(b)`` for the largest even ``b <= n - 1``; ``None`` when not covered."""
    if n % 2 and n >= 5:
        return 2 * (2 * n - 7)
    if n % 2 == 0 and n >= 8:
        return 18
    if n == 6:
        return 10
    return None


def n00_extremal(n: int) -> int | None:
    """``N_n^{0,0}(2n - 4)``."""
    return MULTIPLICITY if n >= 4 else None


def _binom(top: int, bottom: int) -> int:
    if top < 0 or bottom < 0 or bottom > top:
        return 0
    return comb(top, bottom)


def n00_lowest_bounds(n: int) -> tuple[int, int] | None:
    """Inclusive bounds on ``N_n^{0,0}(4)`` for ``n >= 5``."""
    if n < 5:
        return None
    lo = sum(_binom(n - 2 * q - 4, q) for q in range((n + 1) // 3 + 1))
    hi = (
        sum(f_count(n - 5, q, 1) for q in range(1, (2 * n - 7) // 5 + 1))
        + sum(f_count(n - 5, q, 2) for q in range(2, (2 * n + 2) // 3 + 1))
        + 1
    )
    return MULTIPLICITY * lo, MULTIPLICITY * hi
