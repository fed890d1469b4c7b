"""
Exponent of one symmetric companion matrix
==========================================

Build the last row, look at the graph, then compare the closed form with
the two brute-force oracles.
"""

from primexp import (
    LastRowSpec,
    build_graph,
    debug_dump,
    exponent_formula,
    exponent_oracle_bfs,
    exponent_oracle_power,
    symmetric_companion_matrix,
)
from primexp.companion import ClassTag

# a_{n,1} = 1, no loop, Y = a_{n,2} .. a_{n,n-2}
spec = LastRowSpec(12, ClassTag(1, 0), "000010100", heavy=2)
print(symmetric_companion_matrix(spec))

g = build_graph(spec)
print(g)
print("neighbours of n:", g.neighbors(g.n))

# runs of non-neighbours and the cycles through n
dump = debug_dump(g)
for key in ("v1", "v2", "runs", "m", "mo", "se", "cycles", "combined"):
    print(f"{key:>9}: {dump[key]}")

res = exponent_formula(g)
print(f"formula {res.value} via {res.rule}")
print("parity BFS", exponent_oracle_bfs(g))
print("Boolean powers", exponent_oracle_power(g))
