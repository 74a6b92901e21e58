"""Slow, independent reference implementations used only by the tests.

None of these import the package's linear algebra; they are deliberately
naive so that agreement is meaningful.
"""
from fractions import Fraction
from itertools import permutations, product
from math import gcd

import numpy as np


def det_leibniz(a):
    """Determinant by the permutation expansion (fine up to 8x8)."""
    n = len(a)
    total = 0
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = 1
        for i in range(n):
            term *= a[i][p[i]]
            if term == 0:
                break
        total += -term if inv % 2 else term
    return total


def det_fraction(a):
    """Plain Gaussian elimination over Q."""
    m = [[Fraction(x) for x in row] for row in a]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    return int(det)


def signature_float(gram):
    w = np.linalg.eigvalsh(np.array(gram, dtype=float))
    return int((w > 1e-9).sum()), int((w < -1e-9).sum())


def inverse_fraction(a):
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        p = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def dual_group_elements(gram):
    """All classes of L^v/L as tuples of residues in [0,1), by closure.

    Generated by the rows of G^-1 (the dual basis in lattice coordinates).
    """
    inv = inverse_fraction(gram)
    gens = [tuple(x - (x.numerator // x.denominator) for x in row) for row in inv]
    seen = {tuple(Fraction(0) for _ in gram)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple((a + b) - ((a + b).numerator // (a + b).denominator) for a, b in zip(x, g))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen, inv


def brute_bvalues(gram):
    """Sorted list of b(x, x) mod 1 over all classes, from the dual vectors."""
    elems, _ = dual_group_elements(gram)
    out = []
    for x in elems:
        s = sum(x[i] * gram[i][j] * x[j] for i in range(len(x)) for j in range(len(x)))
        # x are coordinates in L (x.G.x), already rational
        out.append(s - (s.numerator // s.denominator))
    return sorted(out)


def primes_dividing(n):
    n = abs(n)
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def subgroups_z2n(n):
    """All subgroups of (Z/2)^n as frozensets of tuples, by spanning sets."""
    elems = list(product(range(2), repeat=n))
    out = set()
    for k in range(0, n + 1):
        for gens in product(elems, repeat=k):
            span = {tuple([0] * n)}
            for g in gens:
                span |= {tuple((a + b) % 2 for a, b in zip(s, g)) for s in span}
            out.add(frozenset(span))
    return out


def coprime_units(d):
    return [n for n in range(d) if gcd(n, d) == 1]
