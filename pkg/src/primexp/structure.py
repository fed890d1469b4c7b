"""Structural parameters of a symmetric companion graph.

Every cycle of these graphs passes through vertex ``n``.  Writing ``V_2`` for
the neighbours of ``n`` in ``[1, n-1]``, each pair of consecutive ``V_2``
vertices ``p < q`` closes an elementary cycle ``n - p - (p+1) - ... - q - n``
of length ``q - p + 2``; the vertices strictly between ``p`` and ``q`` form a
run of ``V_1``.  Odd cycles come from even runs and from adjacent ``V_2``
pairs (triangles).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterable

from .companion import SymCompanionGraph
from .errors import StructuralError


@dataclass(frozen=True)
class VertexPartition:
    v1: tuple[int, ...]
    v2: tuple[int, ...]


@dataclass(frozen=True)
class RunDecomposition:
    """Maximal intervals ``(start, end)`` of a vertex set, in increasing order."""

    runs: tuple[tuple[int, int], ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(b - a + 1 for a, b in self.runs)

    @property
    def m(self) -> int:
        return max(self.lengths, default=0)

    @property
    def mo(self) -> int | None:
        return max((x for x in self.lengths if x % 2), default=None)

    @property
    def q_even(self) -> int | None:
        return min((x for x in self.lengths if x % 2 == 0), default=None)

    def vertices(self) -> set[int]:
        return {v for a, b in self.runs for v in range(a, b + 1)}


def vertex_partition(g: SymCompanionGraph) -> VertexPartition:
    last = g.last_row
    v1 = tuple(i + 1 for i in range(g.n - 1) if not last >> i & 1)
    v2 = tuple(i + 1 for i in range(g.n - 1) if last >> i & 1)
    return VertexPartition(v1, v2)


def decompose_runs(s: Iterable[int]) -> RunDecomposition:
    runs = []
    for v in sorted(set(s)):
        if runs and runs[-1][1] == v - 1:
            runs[-1][1] = v
        else:
            runs.append([v, v])
    return RunDecomposition(tuple((a, b) for a, b in runs))


@dataclass(frozen=True)
class Cycle:
    """Elementary cycle through ``n`` between consecutive ``V_2`` vertices."""

    first: int
    last: int

    @property
    def length(self) -> int:
        return self.last - self.first + 2

    @property
    def run_length(self) -> int:
        return self.last - self.first - 1

    @property
    def run(self) -> tuple[int, int] | None:
        if self.run_length == 0:
            return None
        return (self.first + 1, self.last - 1)


@dataclass(frozen=True)
class CombinedCycle:
    d1: Cycle
    d2: Cycle
    length: int
    overlap: int  # |V(d1 + d2) & V_2|


@dataclass(frozen=True)
class CycleSystem:
    cycles: tuple[Cycle, ...]
    combined: tuple[CombinedCycle, ...]
    se: int | None

    def cycle_with_first(self, p: int) -> Cycle | None:
        for c in self.cycles:
            if c.first == p:
                return c
        return None

    def odd_cycles(self) -> tuple[Cycle, ...]:
        return tuple(c for c in self.cycles if c.length % 2)


def _gap_cycles(v2: tuple[int, ...], base: set[int]) -> list[Cycle]:
    out = []
    for p, q in zip(v2, v2[1:]):
        if all(v in base for v in range(p + 1, q)):
            out.append(Cycle(p, q))
    return out


def _se(cycles: list[Cycle]) -> int | None:
    odd = [c.length for c in cycles if c.length % 2]
    return min(odd) - 3 if odd else None


def _choose_associate(d1: Cycle, cycles: list[Cycle], se: int) -> CombinedCycle:
    best = None
    for d2 in cycles:
        if d2.length != se + 3:
            continue
        shares = d2.last == d1.first or d2.first == d1.last
        overlap = 3 if shares else 4
        length = d1.length + se + (1 if shares else 3)
        key = (length, d2.first)
        if best is None or key < best[0]:
            best = (key, CombinedCycle(d1, d2, length, overlap))
    return best[1]


def cycle_system(g: SymCompanionGraph, base: Iterable[int]) -> CycleSystem:
    """Elementary cycles over ``base`` and the combined cycles of ``C'(A)``.

    Each even cycle is paired with the associate of length ``se + 3`` giving
    the shortest combined cycle; ties go to the associate with the smaller
    first vertex.
    """
    part = vertex_partition(g)
    cycles = _gap_cycles(part.v2, set(base))
    se = _se(cycles)
    combined = []
    if se is not None:
        for d1 in cycles:
            if d1.length % 2 == 0:
                combined.append(_choose_associate(d1, cycles, se))
    return CycleSystem(tuple(cycles), tuple(combined), se)


def association_flag(g: SymCompanionGraph, base: Iterable[int], target: int) -> bool:
    """Whether some run of length ``target`` only has a disjoint associate."""
    system = cycle_system(g, base)
    return any(c.d1.run_length == target and c.overlap == 4 for c in system.combined)


@dataclass(frozen=True)
class StructParams:
    """Parameters measured on ``V_1^h = V_1 \\ [1, h-1]`` (which is ``V_1`` when ``alpha = 1``).

    ``se`` and ``h_prime`` are ``None`` only for loop graphs without any odd
    cycle of length >= 3.
    """

    m: int
    mo: int | None
    q_even: int | None
    se: int | None
    h: int
    h_prime: int | None
    v1h: tuple[int, ...]
    ch_length: int

    def as_dict(self) -> dict:
        return asdict(self)


def struct_params(g: SymCompanionGraph) -> StructParams:
    part = vertex_partition(g)
    h = part.v2[0]
    v1h = tuple(v for v in part.v1 if v >= h)
    runs = decompose_runs(v1h)
    cycles = _gap_cycles(part.v2, set(v1h))
    se = _se(cycles)
    if se is None and not g.tag.eps:
        raise StructuralError(f"{g} has no odd cycle")
    # c^h: the cycle whose first vertex is h; h < n-1 whenever alpha = 0
    ch = cycles[0] if cycles else None
    ch_length = ch.length if ch else 0
    h_prime = None
    if se is not None:
        h_prime = h if ch_length == se + 3 else h + 1
    return StructParams(
        m=runs.m,
        mo=runs.mo,
        q_even=runs.q_even,
        se=se,
        h=h,
        h_prime=h_prime,
        v1h=v1h,
        ch_length=ch_length,
    )


def debug_dump(g: SymCompanionGraph) -> dict:
    """JSON-ready dump of the partition, parameters and cycle system."""
    part = vertex_partition(g)
    out = {"v1": list(part.v1), "v2": list(part.v2)}
    try:
        sp = struct_params(g)
    except StructuralError:
        out.update(runs=[list(r) for r in decompose_runs(part.v1).runs], primitive=False)
        return out
    system = cycle_system(g, sp.v1h)
    out.update(
        runs=[list(r) for r in decompose_runs(sp.v1h).runs],
        m=sp.m,
        mo=sp.mo,
        q_even=sp.q_even,
        se=sp.se,
        h=sp.h,
        h_prime=sp.h_prime,
        cycles=[{"first": c.first, "last": c.last, "len": c.length} for c in system.cycles],
        combined=[
            {
                "d1": [c.d1.first, c.d1.last],
                "d2": [c.d2.first, c.d2.last],
                "len": c.length,
                "overlap": c.overlap,
            }
            for c in system.combined
        ],
    )
    return out
