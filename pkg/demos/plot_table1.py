"""
Exponent histograms for small orders
====================================

Enumerate every matrix of order 3..10 in the four classes and compare the
histograms with the published ones.
"""

import time

from primexp import table1

t0 = time.perf_counter()
report = table1(range(3, 11))
print(f"{len(report.censuses)} censuses in {time.perf_counter() - t0:.2f}s")

for c in report.censuses:
    bars = "  ".join(f"{b}:{k}" for b, k in c.histogram.items())
    print(f"n={c.n:<2} {c.tag}  {bars}")

# Three published cells disagree with every oracle here; show them
for cmp in report.failures:
    print(cmp.name)
    print("  published", cmp.expected)
    print("  computed ", cmp.actual)
