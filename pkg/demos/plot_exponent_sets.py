"""
Which exponents occur
=====================

Exponent sets per class and, for the class without loop and with
a_{n,1} = 1, per longest run k of non-neighbours of n.
"""

from primexp import ALL_TAGS, ClassTag, exponent_set_formula, run_census, run_length_clauses

n = 14
for tag in ALL_TAGS:
    c = run_census(n, tag)
    print(tag, sorted(c.exponent_set), sorted(c.exponent_set) == sorted(exponent_set_formula(n, tag)))

c = run_census(n, ClassTag(1, 0))
for k, hist in c.by_m.items():
    clauses = run_length_clauses(n, k)
    label = ",".join(cid for cid, _ in clauses) or "-"
    predicted = sorted(clauses[0][1]) if clauses else None
    print(f"k={k:<2} census {sorted(hist)}  clauses {label}: {predicted}")
