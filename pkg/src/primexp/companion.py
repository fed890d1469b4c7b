"""Symmetric companion matrices and their support graphs.

A (0,1) companion matrix of order ``n`` is fixed except for its last row
``[a_1, ..., a_n]``.  The symmetric companion matrix ``F(A) = A + A^T`` has
support graph equal to the path ``1 - 2 - ... - n`` plus the edges ``n - i``
for every ``a_i = 1`` and a loop at ``n`` when ``a_n = 1``.

Vertices are 1-based throughout the public API.  Vertex ``v`` is stored as
bit ``v - 1`` of a row integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import InvalidOrderError

#: Matrices per canonical graph: ``a_{n,n-1}`` of ``F(A)`` is 1 or 2.
MULTIPLICITY = 2


@dataclass(frozen=True, order=True)
class ClassTag:
    """The pair ``(a_{n,1}, a_{n,n})`` selecting one of the four classes."""

    alpha: int
    eps: int

    def __post_init__(self):
        if self.alpha not in (0, 1) or self.eps not in (0, 1):
            raise InvalidOrderError(f"class bits must be 0/1, got {self.alpha},{self.eps}")

    @classmethod
    def parse(cls, text: str) -> "ClassTag":
        """Parse ``"1,0"`` (or ``"10"``) into a tag."""
        parts = text.replace(",", " ").split()
        if len(parts) == 1 and len(parts[0]) == 2:
            parts = list(parts[0])
        if len(parts) != 2:
            raise InvalidOrderError(f"cannot parse class tag {text!r}")
        return cls(int(parts[0]), int(parts[1]))

    def __str__(self) -> str:
        return f"{self.alpha},{self.eps}"


#: Row order of the census tables.
ALL_TAGS = (ClassTag(1, 1), ClassTag(0, 1), ClassTag(1, 0), ClassTag(0, 0))


@dataclass(frozen=True)
class LastRowSpec:
    """Last row ``[alpha, Y, heavy, eps]`` of a symmetric companion matrix.

    ``y`` is a 0/1 string of length ``n - 3`` holding ``a_{n,2} .. a_{n,n-2}``.
    """

    n: int
    tag: ClassTag
    y: str = ""
    heavy: int = 1

    def __post_init__(self):
        if self.n < 3:
            raise InvalidOrderError(f"order must be >= 3, got {self.n}")
        if len(self.y) != self.n - 3 or set(self.y) - {"0", "1"}:
            raise InvalidOrderError(
                f"Y must be a bit string of length {self.n - 3}, got {self.y!r}"
            )
        if self.heavy not in (1, 2):
            raise InvalidOrderError(f"heavy entry must be 1 or 2, got {self.heavy}")

    @property
    def y_int(self) -> int:
        return y_to_int(self.y)

    @classmethod
    def from_row(cls, row: str, loop: bool = False) -> "LastRowSpec":
        """Build from the CLI text format ``a_{n,1} .. a_{n,n-1}`` plus a loop flag."""
        if set(row) - {"0", "1"} or len(row) < 2:
            raise InvalidOrderError(f"row must be a bit string of length >= 2, got {row!r}")
        if row[-1] != "1":
            raise InvalidOrderError("a_{n,n-1} must be 1")
        return cls(len(row) + 1, ClassTag(int(row[0]), int(loop)), row[1:-1])


def y_to_int(y: str) -> int:
    """Y as an integer; bit ``j`` is ``y[j]`` (so the low bit is ``a_{n,2}``)."""
    return sum(1 << j for j, c in enumerate(y) if c == "1")


def int_to_y(value: int, length: int) -> str:
    return "".join("1" if value >> j & 1 else "0" for j in range(length))


@dataclass(frozen=True)
class SymCompanionGraph:
    """Support graph of a symmetric companion matrix.

    ``rows[v - 1]`` is the neighbourhood bitmask of vertex ``v``.
    """

    n: int
    rows: tuple[int, ...]
    tag: ClassTag

    @property
    def last_row(self) -> int:
        """Bits ``a_{n,1} .. a_{n,n-1}`` as a mask over vertices ``1 .. n-1``."""
        return self.rows[-1] & ((1 << (self.n - 1)) - 1)

    @property
    def y_int(self) -> int:
        return (self.last_row >> 1) & ((1 << (self.n - 3)) - 1)

    @property
    def y(self) -> str:
        return int_to_y(self.y_int, self.n - 3)

    @property
    def has_loop(self) -> bool:
        return bool(self.rows[-1] >> (self.n - 1) & 1)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i - 1] >> (j - 1) & 1)

    def neighbors(self, v: int) -> list[int]:
        r = self.rows[v - 1]
        return [u + 1 for u in range(self.n) if r >> u & 1]

    def adjacency(self) -> np.ndarray:
        """Dense 0/1 support matrix."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for i, r in enumerate(self.rows):
            for j in range(self.n):
                if r >> j & 1:
                    a[i, j] = 1
        return a

    def __str__(self) -> str:
        row = "".join(str(self.last_row >> i & 1) for i in range(self.n - 1))
        return f"SymCompanionGraph(n={self.n}, row={row}, loop={int(self.has_loop)})"


def graph_from_int(n: int, tag: ClassTag, y_int: int) -> SymCompanionGraph:
    """Fast constructor used by the enumeration loops."""
    if n < 3:
        raise InvalidOrderError(f"order must be >= 3, got {n}")
    rows = [0] * n
    for i in range(n - 1):
        rows[i] |= 1 << (i + 1)
        rows[i + 1] |= 1 << i
    last = tag.alpha | (y_int << 1) | (1 << (n - 2))
    for i in range(n - 1):
        if last >> i & 1:
            rows[i] |= 1 << (n - 1)
    rows[n - 1] |= last
    if tag.eps:
        rows[n - 1] |= 1 << (n - 1)
    return SymCompanionGraph(n, tuple(rows), tag)


def build_graph(spec: LastRowSpec) -> SymCompanionGraph:
    """Support graph of ``F(A)``; the heavy entry collapses to a single edge."""
    return graph_from_int(spec.n, spec.tag, spec.y_int)


def graph(n: int, tag: ClassTag | str, y: str = "") -> SymCompanionGraph:
    """Shorthand: ``graph(8, "1,0", "11111")``."""
    if isinstance(tag, str):
        tag = ClassTag.parse(tag)
    return build_graph(LastRowSpec(n, tag, y))


def companion_matrix(spec: LastRowSpec) -> np.ndarray:
    """The (0,1) companion matrix ``A`` whose symmetrisation has ``heavy`` at ``(n, n-1)``."""
    n = spec.n
    a = np.zeros((n, n), dtype=np.int64)
    for i in range(n - 1):
        a[i, i + 1] = 1
    a[n - 1, 0] = spec.tag.alpha
    for j, c in enumerate(spec.y):
        a[n - 1, j + 1] = int(c)
    a[n - 1, n - 2] = spec.heavy - 1
    a[n - 1, n - 1] = spec.tag.eps
    return a


def symmetric_companion_matrix(spec: LastRowSpec) -> np.ndarray:
    """``F(A) = A + A^T``."""
    a = companion_matrix(spec)
    return a + a.T


def enumerate_class(n: int, tag: ClassTag) -> Iterator[tuple[SymCompanionGraph, int]]:
    """All canonical graphs of ``C_n^{alpha,eps}`` in ascending Y order."""
    if n < 3:
        raise InvalidOrderError(f"order must be >= 3, got {n}")
    for y in range(1 << (n - 3)):
        yield graph_from_int(n, tag, y), MULTIPLICITY


def is_primitive(g) -> bool:
    """Non-bipartiteness by breadth-first 2-colouring.

    Works for any connected symmetric Boolean graph exposing ``n`` and ``rows``.
    """
    n = g.n
    color = [-1] * n
    color[0] = 0
    queue = [0]
    for v in queue:
        r = g.rows[v]
        if r >> v & 1:
            return True
        while r:
            low = r & -r
            u = low.bit_length() - 1
            r ^= low
            if color[u] < 0:
                color[u] = color[v] ^ 1
                queue.append(u)
            elif color[u] == color[v]:
                return True
    return False


def is_primitive_formula(g: SymCompanionGraph) -> bool:
    """Primitivity from the parity pattern of ``V_2`` alone."""
    n = g.n
    if g.tag.eps:
        return True
    v2 = {i + 1 for i in range(n - 1) if g.last_row >> i & 1}
    if g.tag.alpha:
        if n % 2:
            return True
        return not (v2 - {1, n - 1}) <= set(range(3, n - 2, 2))
    allowed = set(range(3, n - 2, 2)) if n % 2 == 0 else set(range(2, n - 2, 2))
    return not (v2 - {n - 1}) <= allowed
