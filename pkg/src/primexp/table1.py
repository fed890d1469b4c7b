"""Published exponent histograms ``N_n^{alpha,eps}(b)`` for ``3 <= n <= 10``.

Keys are ``(n, (alpha, eps))``; values map exponent to matrix count.
"""

TABLE1: dict[tuple[int, tuple[int, int]], dict[int, int]] = {
    (3, (1, 1)): {2: 2},
    (3, (0, 1)): {4: 2},
    (3, (1, 0)): {2: 2},
    (3, (0, 0)): {},
    (4, (1, 1)): {2: 2, 4: 2},
    (4, (0, 1)): {4: 2, 6: 2},
    (4, (1, 0)): {2: 2},
    (4, (0, 0)): {4: 2},
    (5, (1, 1)): {2: 2, 4: 6},
    (5, (0, 1)): {4: 4, 6: 2, 8: 2},
    (5, (1, 0)): {2: 2, 4: 6},
    (5, (0, 0)): {4: 2, 6: 2},
    (6, (1, 1)): {2: 2, 4: 12, 6: 2},
    (6, (0, 1)): {4: 8, 6: 4, 8: 2, 10: 2},
    (6, (1, 0)): {2: 2, 4: 10},
    (6, (0, 0)): {4: 4, 6: 6, 8: 2},
    (7, (1, 1)): {2: 2, 4: 24, 6: 6},
    (7, (0, 1)): {4: 14, 6: 10, 8: 4, 10: 2, 12: 2},
    (7, (1, 0)): {2: 2, 4: 16, 6: 14},
    (7, (0, 0)): {4: 8, 6: 8, 8: 6, 10: 2},
    (8, (1, 1)): {2: 2, 4: 46, 6: 14, 8: 2},
    (8, (0, 1)): {4: 26, 6: 22, 8: 8, 10: 4, 12: 2, 14: 2},
    (8, (1, 0)): {2: 2, 4: 36, 6: 18},
    (8, (0, 0)): {4: 12, 6: 24, 8: 10, 10: 6, 12: 2},
    (9, (1, 1)): {2: 2, 4: 86, 6: 34, 8: 6},
    (9, (0, 1)): {4: 48, 6: 46, 8: 18, 10: 8, 12: 4, 14: 2, 16: 2},
    (9, (1, 0)): {2: 2, 4: 66, 6: 38, 8: 22},
    (9, (0, 0)): {4: 22, 6: 50, 8: 20, 10: 10, 12: 6, 14: 4},
    (10, (1, 1)): {2: 2, 4: 160, 6: 78, 8: 14, 10: 2},
    (10, (0, 1)): {4: 88, 6: 96, 8: 40, 10: 16, 12: 8, 14: 4, 16: 2, 18: 2},
    (10, (1, 0)): {2: 2, 4: 110, 6: 110, 8: 18},
    (10, (0, 0)): {4: 42, 6: 94, 8: 60, 10: 24, 12: 12, 14: 6, 16: 2},
}

#: Published ranges of ``N_n^{0,0}(4)`` (last column of the table).
TABLE1_N00_4_RANGE: dict[int, tuple[int, int]] = {
    5: (2, 2),
    6: (2, 4),
    7: (4, 8),
    8: (6, 12),
    9: (8, 26),
    10: (12, 46),
}
