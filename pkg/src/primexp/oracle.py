"""Brute-force exponents of Boolean matrices.

Two independent routes are provided:

* parity breadth-first search on the bipartite double cover, which yields
  shortest even and odd walk lengths and hence ``exp(A:i,j)`` for symmetric
  matrices;
* repeated Boolean matrix multiplication, which finds the smallest ``k``
  with ``A^k`` entrywise positive for any square Boolean matrix.

Both accept any object exposing ``n`` and ``rows`` (row ``i`` bitmask of the
out-neighbours of vertex ``i + 1``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ImprimitiveError


def wielandt_bound(n: int) -> int:
    """``(n-1)^2 + 1``: no primitive ``n x n`` matrix has a larger exponent."""
    return (n - 1) ** 2 + 1


@dataclass(frozen=True)
class BooleanMatrix:
    n: int
    rows: tuple[int, ...]

    @classmethod
    def from_array(cls, a) -> "BooleanMatrix":
        rows = []
        for r in a:
            mask = 0
            for j, x in enumerate(r):
                if x:
                    mask |= 1 << j
            rows.append(mask)
        return cls(len(rows), tuple(rows))

    @classmethod
    def identity(cls, n: int) -> "BooleanMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    def __matmul__(self, other: "BooleanMatrix") -> "BooleanMatrix":
        return BooleanMatrix(self.n, _bool_mul(self.rows, other.rows))

    def __pow__(self, k: int) -> "BooleanMatrix":
        out = BooleanMatrix.identity(self.n)
        for _ in range(k):
            out = out @ self
        return out

    def is_positive(self) -> bool:
        full = (1 << self.n) - 1
        return all(r == full for r in self.rows)

    def entry(self, i: int, j: int) -> int:
        """1-based entry access."""
        return self.rows[i - 1] >> (j - 1) & 1


def _bool_mul(left: tuple[int, ...], right: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for r in left:
        acc = 0
        while r:
            low = r & -r
            acc |= right[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class ParityDistances:
    """Shortest even and odd walk lengths; ``math.inf`` when no such walk exists.

    Indexed 0-based: ``d_even[i - 1][j - 1]`` is for vertices ``i, j``.
    """

    d_even: tuple[tuple[float, ...], ...]
    d_odd: tuple[tuple[float, ...], ...]

    def distance(self, i: int, j: int) -> float:
        return min(self.d_even[i - 1][j - 1], self.d_odd[i - 1][j - 1])


def _parity_bfs(rows, n: int, source: int):
    """Layered BFS from ``source`` (0-based) on the double cover.

    Returns ``(first_even, first_odd, depth)`` where the first two are lists of
    first arrival layers (``None`` if never) and ``depth`` is the last layer that
    discovered a new state.
    """
    first = ([None] * n, [None] * n)
    seen = [1 << source, 0]
    first[0][source] = 0
    frontier = 1 << source
    layer = 0
    depth = 0
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        layer += 1
        parity = layer & 1
        nxt &= ~seen[parity]
        if nxt:
            seen[parity] |= nxt
            depth = layer
            f = nxt
            while f:
                low = f & -f
                first[parity][low.bit_length() - 1] = layer
                f ^= low
        frontier = nxt
    return first[0], first[1], depth


def parity_distances(g) -> ParityDistances:
    """Exact shortest even/odd walk lengths between all vertex pairs."""
    n = g.n
    d_even, d_odd = [], []
    for s in range(n):
        ev, od, _ = _parity_bfs(g.rows, n, s)
        d_even.append(tuple(math.inf if x is None else x for x in ev))
        d_odd.append(tuple(math.inf if x is None else x for x in od))
    return ParityDistances(tuple(d_even), tuple(d_odd))


def exp_pair(g, i: int, j: int, dist: ParityDistances | None = None) -> int:
    """``exp(A:i,j)``: one less than the shortest walk of the other parity.

    Clamped below at 1, since the local exponent is a positive integer
    (a loop at ``i`` gives ``exp(A:i,i) = 1``).
    """
    if dist is None:
        ev, od, _ = _parity_bfs(g.rows, g.n, i - 1)
        a, b = ev[j - 1], od[j - 1]
        a = math.inf if a is None else a
        b = math.inf if b is None else b
    else:
        a, b = dist.d_even[i - 1][j - 1], dist.d_odd[i - 1][j - 1]
    worst = max(a, b)
    if worst == math.inf:
        raise ImprimitiveError(f"no walk of both parities between {i} and {j}")
    return max(int(worst) - 1, 1)


def exp_vertex(g, i: int) -> int:
    """``exp(A:i)``: the row exponent, i.e. the maximum of ``exp(A:i,j)`` over ``j``."""
    n = g.n
    ev, od, depth = _parity_bfs(g.rows, n, i - 1)
    if None in ev or None in od:
        raise ImprimitiveError(f"vertex {i} misses a parity class")
    return max(depth - 1, 1)


def exponent_oracle_bfs(g) -> int:
    """``exp(A)`` as the maximum local exponent over all vertices."""
    return max(exp_vertex(g, i) for i in range(1, g.n + 1))


def exponent_oracle_power(g) -> int:
    """Smallest ``k`` with ``A^k > 0``, by repeated Boolean multiplication.

    Raises :class:`ImprimitiveError` if the Wielandt bound is passed first.
    """
    n = g.n
    full = (1 << n) - 1
    base = tuple(g.rows)
    power = base
    cap = wielandt_bound(n)
    for k in range(1, cap + 1):
        if all(r == full for r in power):
            return k
        prev = power
        power = _bool_mul(power, base)
        if power == prev:
            break  # fixed point that is not positive
    raise ImprimitiveError(f"no positive power up to the Wielandt bound {cap}")
