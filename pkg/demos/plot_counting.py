"""
Counting matrices by exponent
=============================

Closed-form counts built from F_n(q,k) (strings by number of zeros and
longest zero-run) and T_r(n) (strings without r consecutive ones),
checked against the census.
"""

from primexp import ClassTag, f_count, n01_count, n11_count, run_census, s10_allowed_k, t_count

print("F_6(4,2) =", f_count(6, 4, 2))
print("T_2(n):", [t_count(2, n) for n in range(12)])

n = 11
for tag, count in ((ClassTag(1, 1), n11_count), (ClassTag(0, 1), n01_count)):
    hist = run_census(n, tag).histogram
    rows = [(b, count(n, b), hist.get(b, 0)) for b in range(2, 2 * n - 1, 2)]
    print(tag, [r for r in rows if r[1] or r[2]])

print("S_20(12) =", sorted(s10_allowed_k(20, 12)))
print("S_20(16) =", sorted(s10_allowed_k(20, 16)))
