"""
Local exponents from parity distances
=====================================

A walk of every length >= k exists between i and j once both an even and
an odd walk are available, so exp(A:i,j) is governed by the two parity
distances.  The matrix exponent is their maximum.
"""

import numpy as np

from primexp import exp_pair, exponent_oracle_bfs, parity_distances, wielandt_bound
from primexp import fixtures as fx
from primexp.oracle import exponent_oracle_power

g = fx.local_exponent_example()
n = g.n
d = parity_distances(g)

local = np.array([[exp_pair(g, i, j, d) for j in range(1, n + 1)] for i in range(1, n + 1)])
print(local)
print("exp(A:2,2) =", local[1, 1], " exp(A:1,1) =", local[0, 0])
print("exp(A) =", local.max(), "=", exponent_oracle_bfs(g))

# the Wielandt digraph attains the general bound; the powering oracle handles it too
for k in range(3, 8):
    print(k, exponent_oracle_power(fx.wielandt(k)), wielandt_bound(k))
