#!/usr/bin/env python3
"""Reference values for the interpolation degree bound and decoding radius.

D = ceil((n + s(k-1) + 1) / (s+1)), radius = largest t with t < s(n-k+1)/(s+1).
Evaluated with exact rationals; prints C++ initializer rows.
"""
import math
import random
from fractions import Fraction


def degree_bound(n, k, s):
    return math.ceil(Fraction(n + s * (k - 1) + 1, s + 1))


def radius(n, k, s):
    bound = Fraction(s * (n - k + 1), s + 1)
    t = 0
    while t + 1 < bound:
        t += 1
    return t


def main():
    rng = random.Random(2024)
    triples = [(8, 2, 1), (8, 4, 1), (16, 4, 1), (16, 4, 2), (12, 3, 2), (8, 2, 2)]
    while len(triples) < 20:
        n = rng.randint(1, 200)
        k = rng.randint(1, n)
        s = rng.randint(1, 6)
        if (n, k, s) not in triples:
            triples.append((n, k, s))
    for n, k, s in triples:
        print(f"    {{{n}, {k}, {s}, {degree_bound(n, k, s)}, {radius(n, k, s)}}},")


if __name__ == "__main__":
    main()
