"""Exact integer and rational linear algebra.

Matrices are tuples of row tuples holding Python ints (or
:class:`fractions.Fraction` for the rational helpers). Nothing in here
touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import Degenerate, NonSquare, NonSymmetric

IntMatrix = tuple[tuple[int, ...], ...]
IntVector = tuple[int, ...]


def as_matrix(a: Sequence[Sequence[int]]) -> IntMatrix:
    rows = tuple(tuple(int(x) for x in row) for row in a)
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError("ragged matrix")
    return rows


def shape(a: Sequence[Sequence]) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(m: int, n: int) -> IntMatrix:
    return tuple((0,) * n for _ in range(m))


def diagonal(entries: Sequence[int]) -> IntMatrix:
    n = len(entries)
    return tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a: Sequence[Sequence]) -> tuple:
    return tuple(zip(*a)) if a and a[0] else tuple(() for _ in range(len(a[0]) if a else 0))


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    cols = transpose(b)
    if len(b) == 0:
        return tuple(() for _ in a)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def matvec(a: Sequence[Sequence], x: Sequence) -> tuple:
    return tuple(sum(r * y for r, y in zip(row, x)) for row in a)


def dot(x: Sequence, y: Sequence):
    return sum(a * b for a, b in zip(x, y))


def bilinear(gram: Sequence[Sequence], x: Sequence, y: Sequence):
    return dot(x, matvec(gram, y))


def congruent(gram: Sequence[Sequence], t: Sequence[Sequence]) -> tuple:
    """Return t^T * gram * t."""
    return matmul(transpose(t), matmul(gram, t))


def block_diagonal(blocks: Sequence[Sequence[Sequence[int]]]) -> IntMatrix:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    k = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[k + i][k + j] = x
        k += len(b)
    return as_matrix(out)


def is_symmetric(a: Sequence[Sequence]) -> bool:
    n, m = shape(a)
    return n == m and all(a[i][j] == a[j][i] for i in range(n) for j in range(i))


def vector_gcd(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


# ---------------------------------------------------------------------------
# determinant


def determinant(a: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    n, m = shape(a)
    if n != m:
        raise NonSquare(f"determinant of a {n}x{m} matrix")
    if n == 0:
        return 1
    M = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = M[k][k]
        rowk = M[k]
        for i in range(k + 1, n):
            rowi = M[i]
            mik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * pk - mik * rowk[j]) // prev
        prev = pk
    return sign * M[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SnfResult:
    """``u * a * v == d`` with ``u``, ``v`` unimodular and ``d`` diagonal."""

    d: IntMatrix
    u: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.d[i][i] for i in range(min(shape(self.d))))

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """Nonzero diagonal entries, including 1s."""
        return tuple(x for x in self.diagonal if x)


def _smallest_nonzero(A, t, m, n):
    best = None
    for i in range(t, m):
        row = A[i]
        for j in range(t, n):
            x = row[j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
                if best[0] == 1:
                    return best
    return best


def smith_normal_form(a: Sequence[Sequence[int]]) -> SnfResult:
    """Smith normal form with transformation matrices.

    Pivot choice is the smallest nonzero absolute value in the active block,
    scanned row-major, so the transforms are reproducible.
    """
    m, n = shape(a)
    if m == 0:
        return SnfResult((), (), identity(n))
    A = [list(row) for row in a]
    U = [list(row) for row in identity(m)]
    # V is stored transposed so column operations become row operations.
    Vt = [list(row) for row in identity(n)]

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in A:
                row[i], row[j] = row[j], row[i]
            Vt[i], Vt[j] = Vt[j], Vt[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        rd, rs = A[dst], A[src]
        for k in range(n):
            if rs[k]:
                rd[k] += q * rs[k]
        ud, us = U[dst], U[src]
        for k in range(m):
            if us[k]:
                ud[k] += q * us[k]

    def add_col(dst, src, q):
        for row in A:
            if row[src]:
                row[dst] += q * row[src]
        vd, vs = Vt[dst], Vt[src]
        for k in range(n):
            if vs[k]:
                vd[k] += q * vs[k]

    for t in range(min(m, n)):
        best = _smallest_nonzero(A, t, m, n)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                x = A[i][t]
                if x:
                    q = x // p
                    if q:
                        add_row(i, t, -q)
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                x = A[t][j]
                if x:
                    q = x // p
                    if q:
                        add_col(j, t, -q)
                    if A[t][j]:
                        clean = False
            if not clean:
                # move the smallest remainder in row/column t to the pivot
                best = (abs(p), t, t)
                for i in range(t + 1, m):
                    if A[i][t] and abs(A[i][t]) < best[0]:
                        best = (abs(A[i][t]), i, t)
                for j in range(t + 1, n):
                    if A[t][j] and abs(A[t][j]) < best[0]:
                        best = (abs(A[t][j]), t, j)
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            bad = None
            for i in range(t + 1, m):
                row = A[i]
                for j in range(t + 1, n):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return SnfResult(as_matrix(A), as_matrix(U), transpose(as_matrix(Vt)))


def invariant_factors(a: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return smith_normal_form(a).invariant_factors


def rank(a: Sequence[Sequence[int]]) -> int:
    return smith_normal_form(a).rank if a else 0


# ---------------------------------------------------------------------------
# Hermite normal form, kernels, integer solving


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """Row-style HNF of the Z-span of ``rows``; zero rows are dropped.

    Pivots are positive and entries above a pivot lie in ``[0, pivot)``.
    """
    A = [list(r) for r in rows]
    m = len(A)
    n = len(A[0]) if A else 0
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if A[i][c]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(A[i][c]), i))
            A[r], A[i0] = A[i0], A[r]
            p = A[r][c]
            done = True
            for i in range(r + 1, m):
                x = A[i][c]
                if x:
                    q = x // p
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    if A[i][c]:
                        done = False
            if done:
                break
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
        p = A[r][c]
        for i in range(r):
            q = A[i][c] // p
            if q:
                A[i] = [a - q * b for a, b in zip(A[i], A[r])]
        r += 1
    return as_matrix(A[:r])


def kernel_basis(a: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    """Basis of ``{x in Z^n : a x = 0}`` as the columns of an ``n x k`` matrix.

    The basis is saturated and put in Hermite normal form (as rows before
    transposing), so the output is deterministic.
    """
    m = len(a)
    n = len(a[0]) if m else (ncols or 0)
    if m == 0:
        return identity(n)
    snf = smith_normal_form(a)
    r = snf.rank
    kernel_rows = [tuple(snf.v[i][j] for i in range(n)) for j in range(r, n)]
    if not kernel_rows:
        return tuple(() for _ in range(n))
    return transpose(hermite_normal_form(kernel_rows))


def solve_integer(a: Sequence[Sequence[int]], b: Sequence[int]) -> IntVector | None:
    """An integer solution of ``a x = b``, or None if there is none."""
    m, n = shape(a)
    snf = smith_normal_form(a)
    ub = matvec(snf.u, b)
    diag = snf.diagonal
    y = [0] * n
    for i in range(m):
        di = diag[i] if i < len(diag) else 0
        if di == 0:
            if ub[i] != 0:
                return None
        else:
            if ub[i] % di:
                return None
            y[i] = ub[i] // di
    return matvec(snf.v, y)


def inverse_rational(a: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse over Q by Gauss-Jordan elimination."""
    n, m = shape(a)
    if n != m:
        raise NonSquare(f"inverse of a {n}x{m} matrix")
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            raise Degenerate("singular matrix")
        M[c], M[piv] = M[piv], M[c]
        p = M[c][c]
        M[c] = [x / p for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return tuple(tuple(row[n:]) for row in M)


# ---------------------------------------------------------------------------
# signature


def signature(gram: Sequence[Sequence[int]]) -> tuple[int, int]:
    """(positive, negative) inertia of a nondegenerate symmetric matrix.

    Symmetric Gaussian elimination over Q: a nonzero diagonal pivot is split
    off as a 1x1 block; if the whole diagonal vanishes a 2x2 block
    ``[[0, b], [b, 0]]`` is split off, contributing one of each sign.
    """
    if not is_symmetric(gram):
        raise NonSymmetric("signature of a non-symmetric matrix")
    if determinant(gram) == 0:
        raise Degenerate("signature of a degenerate matrix")
    S = [[Fraction(x) for x in row] for row in gram]
    pos = neg = 0
    while S:
        k = len(S)
        i = next((i for i in range(k) if S[i][i] != 0), None)
        if i is not None:
            order = [i] + [j for j in range(k) if j != i]
            S = [[S[r][c] for c in order] for r in order]
            p = S[0][0]
            if p > 0:
                pos += 1
            else:
                neg += 1
            col = [S[r][0] for r in range(1, k)]
            S = [[S[r][c] - col[r - 1] * col[c - 1] / p for c in range(1, k)]
                 for r in range(1, k)]
            continue
        i, j = next((i, j) for i in range(k) for j in range(k) if S[i][j] != 0)
        order = [i, j] + [r for r in range(k) if r not in (i, j)]
        S = [[S[r][c] for c in order] for r in order]
        b = S[0][1]
        pos += 1
        neg += 1
        # inverse of [[0, b], [b, 0]] is [[0, 1/b], [1/b, 0]]
        rest = range(2, k)
        S = [[S[r][c] - (S[r][0] * S[1][c] + S[r][1] * S[0][c]) / b for c in rest]
             for r in rest]
    return pos, neg
