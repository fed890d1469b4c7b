"""
Parallel census
===============

A census splits Y into contiguous ranges.  Results are merged in order,
so the JSON report does not depend on the worker count.
"""

import os
import time

from primexp import ClassTag, run_census

tag = ClassTag(0, 0)
outputs = {}
for jobs in sorted({1, 2, os.cpu_count() or 1}):
    t0 = time.perf_counter()
    outputs[jobs] = run_census(14, tag, jobs).to_json()
    print(f"jobs={jobs}: {time.perf_counter() - t0:.2f}s")

print("identical:", len(set(outputs.values())) == 1)
print(outputs[1][:200])
