"""Named graphs used throughout the tests and demos."""

from __future__ import annotations

from .companion import ClassTag, SymCompanionGraph, graph
from .oracle import BooleanMatrix


def fan(n: int = 8) -> SymCompanionGraph:
    """Fan graph: vertex ``n`` joined to every vertex of the path ``1 .. n-1``."""
    return graph(n, ClassTag(1, 0), "1" * (n - 3))


def imprimitive_even() -> SymCompanionGraph:
    """Order 10, ``V_2 = {1, 3, 5, 7, 9}``: maximal imprimitive member of ``C_10^{1,0}``."""
    return graph(10, ClassTag(1, 0), "0101010")


def imprimitive_odd() -> SymCompanionGraph:
    """Order 11, ``V_2 = {2, 4, 6, 8, 10}``: maximal imprimitive member of ``C_11^{0,0}``."""
    return graph(11, ClassTag(0, 0), "10101010")


def exponent_six() -> tuple[SymCompanionGraph, SymCompanionGraph]:
    """Two order-7 loop graphs of exponent 6.

    The first has ``h = 3`` (the prefix ``1, 2`` dominates); the second has
    ``h = 2`` and a run of three non-neighbours ``3, 4, 5``.
    """
    return graph(7, ClassTag(0, 1), "0111"), graph(7, ClassTag(0, 1), "1000")


def path_with_loop(n: int) -> SymCompanionGraph:
    """Path ``1 .. n`` with a loop at ``n``: exponent ``2n - 2``."""
    return graph(n, ClassTag(0, 1), "0" * (n - 3))


def lollipop(n: int) -> SymCompanionGraph:
    """Triangle ``{n-2, n-1, n}`` with the tail ``1 .. n-2``: exponent ``2(n - 2)``."""
    return graph(n, ClassTag(0, 0), "0" * (n - 4) + "1")


def parameter_example() -> SymCompanionGraph:
    """Order 12, ``V_1 = {2..5} | {7} | {9, 10}``, ``V_2 = {1, 6, 8, 11}``."""
    return graph(12, ClassTag(1, 0), "000010100")


def local_exponent_example() -> SymCompanionGraph:
    """Order 11, ``V_1 = {1, 3, 4, 6, 8, 9}``, ``V_2 = {2, 5, 7, 10}``."""
    return graph(11, ClassTag(0, 0), "10010100")


def wielandt(n: int) -> BooleanMatrix:
    """Wielandt digraph: ``i -> i+1``, ``n -> 1`` and ``n -> 2``; exponent ``(n-1)^2 + 1``."""
    rows = [1 << (i + 1) for i in range(n - 1)]
    rows.append(0b11)
    return BooleanMatrix(n, tuple(rows))
