"""Writes the bundled b-files from formulas that do not share code with the crate.

A000108  Catalan numbers, C(2n,n)/(n+1)
A000531  ((2n+1) C(2n,n) - 4^n) / 2
A122649  n! A000531(n) / 2^(n-1)
A213863  TC(n+1,n) / (n+1)!, TC from its first-order recurrence in n and k
"""
from math import comb, factorial

TOP = 60


def tc_table(nmax):
    tc = {(1, 0): 1}
    get = lambda n, k: tc.get((n, k), 0) if 0 <= k < n else 0
    for n in range(2, nmax + 1):
        for k in range(n):
            num = (n + 1 - k) * (n - k) * get(n, k - 1) + n * (2 * n + k - 3) * get(n - 1, k)
            assert num % (n - k) == 0
            tc[(n, k)] = num // (n - k)
    return get


def b_k1(n):
    return ((2 * n + 1) * comb(2 * n, n) - 4**n) // 2


def write(name, offset, values):
    with open(f"b{name[1:]}.txt", "w") as f:
        for i, v in enumerate(values, start=offset):
            f.write(f"{i} {v}\n")


tc = tc_table(TOP + 1)
write("A000108", 0, [comb(2 * n, n) // (n + 1) for n in range(TOP + 1)])
write("A000531", 1, [b_k1(n) for n in range(1, TOP + 1)])
write("A122649", 1, [factorial(n) * b_k1(n) // 2 ** (n - 1) for n in range(1, TOP + 1)])
write("A213863", 0, [tc(n + 1, n) // factorial(n + 1) for n in range(TOP + 1)])
