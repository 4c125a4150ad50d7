"""Exact integer and rational linear algebra on tuple-based matrices.

Matrices are tuples of row tuples, vectors are tuples; everything is
immutable at the interfaces and exact (int or Fraction).  The Smith normal
form carries its transform matrices because lattice coinvariants need the
change of basis, not just the invariant factors.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Vec = Tuple[int, ...]
Mat = Tuple[Vec, ...]


# -- construction and basic ops ---------------------------------------------


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zero_matrix(rows: int, cols: int) -> Mat:
    return tuple((0,) * cols for _ in range(rows))


def freeze(rows: Sequence[Sequence[int]]) -> Mat:
    return tuple(tuple(r) for r in rows)


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a)) if a else ()


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a: Mat, x: Sequence) -> Tuple:
    return tuple(sum(c * xi for c, xi in zip(row, x)) for row in a)


def mat_add(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

def mat_sub(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a: Mat) -> Mat:
    return tuple(tuple(c * x for x in row) for row in a)


def vec_add(x: Sequence, y: Sequence) -> Tuple:
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Sequence, y: Sequence) -> Tuple:
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c, x: Sequence) -> Tuple:
    return tuple(c * a for a in x)


def vec_dot(x: Sequence, y: Sequence):
    return sum(a * b for a, b in zip(x, y))


def is_integer_matrix(a) -> bool:
    return all(isinstance(x, int) for row in a for x in row)


def det_bareiss(a: Mat) -> int:
    """Exact integer determinant (fraction-free Gaussian elimination)."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


def is_unimodular(a: Mat) -> bool:
    if a and len(a) != len(a[0]):
        return False
    return abs(det_bareiss(a)) == 1


# -- Smith normal form -------------------------------------------------------


def smith_normal_form(a: Mat) -> Tuple[Mat, Mat, Mat]:
    """Return (u, d, v) with u*a*v = d diagonal, d_i | d_{i+1}, u, v unimodular.

    Small-matrix textbook algorithm: repeatedly move a minimal nonzero entry
    to the pivot, clear its row and column by exact division steps, then
    repair divisibility violations by folding the offending column in and
    re-clearing.  The identity u*a*v = d is asserted before returning.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    M = [list(row) for row in a]
    U = [list(row) for row in identity(m)]
    V = [list(row) for row in identity(n)]

    def add_row(i: int, j: int, c: int) -> None:  # row i += c * row j
        M[i] = [x + c * y for x, y in zip(M[i], M[j])]
        U[i] = [x + c * y for x, y in zip(U[i], U[j])]

    def add_col(i: int, j: int, c: int) -> None:  # col i += c * col j
        for r in range(m):
            M[r][i] += c * M[r][j]
        for r in range(n):
            V[r][i] += c * V[r][j]

    def swap_rows(i: int, j: int) -> None:
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i: int, j: int) -> None:
        for r in range(m):
            M[r][i], M[r][j] = M[r][j], M[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    def neg_row(i: int) -> None:
        M[i] = [-x for x in M[i]]
        U[i] = [-x for x in U[i]]

    def diagonalize_from(t0: int) -> None:
        for t in range(t0, min(m, n)):
            # pick the entry of minimal absolute value in the t.. block
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if M[i][j] and (best is None or abs(M[i][j]) < abs(M[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            while True:
                if M[t][t] < 0:
                    neg_row(t)
                dirty = False
                for i in range(t + 1, m):
                    if M[i][t]:
                        q = M[i][t] // M[t][t]
                        add_row(i, t, -q)
                        if M[i][t]:
                            swap_rows(i, t)
                            dirty = True
                for j in range(t + 1, n):
                    if M[t][j]:
                        q = M[t][j] // M[t][t]
                        add_col(j, t, -q)
                        if M[t][j]:
                            swap_cols(j, t)
                            dirty = True
                if not dirty:
                    break

    diagonalize_from(0)
    rank = sum(1 for t in range(min(m, n)) if M[t][t])
    while True:
        bad = None
        for t in range(rank - 1):
            if M[t + 1][t + 1] % M[t][t]:
                bad = t
                break
        if bad is None:
            break
        add_col(bad, bad + 1, 1)
        diagonalize_from(bad)

    u, d, v = freeze(U), freeze(M), freeze(V)
    assert mat_mul(mat_mul(u, a), v) == d, "SNF transform identity violated"
    return u, d, v


def invariant_factors(a: Mat) -> Tuple[int, ...]:
    _, d, _ = smith_normal_form(a)
    return tuple(d[t][t] for t in range(min(len(d), len(d[0]) if d else 0))
                 if d[t][t])


def kernel_basis(a: Mat) -> Tuple[Vec, ...]:
    """Basis of the integer kernel {x : a*x = 0} (saturated by SNF)."""
    m = len(a)
    n = len(a[0]) if m else 0
    if n == 0:
        return ()
    if m == 0:
        return identity(n)
    _, d, v = smith_normal_form(a)
    rank = sum(1 for t in range(min(m, n)) if d[t][t])
    cols = transpose(v)
    return tuple(cols[j] for j in range(rank, n))


def column_space_basis(cols: Sequence[Vec]) -> Tuple[Vec, ...]:
    """A basis of the sublattice of Z^n spanned by the given columns."""
    cols = [tuple(c) for c in cols if any(c)]
    if not cols:
        return ()
    n = len(cols[0])
    a = transpose(freeze(cols))
    u, d, _ = smith_normal_form(a)
    uinv = integer_inverse(u)
    uinv_cols = transpose(uinv)
    out = []
    for t in range(min(n, len(cols))):
        if d[t][t]:
            out.append(vec_scale(d[t][t], uinv_cols[t]))
    return tuple(out)


def solve_integer(a: Mat, b: Sequence[int]) -> Optional[Vec]:
    """One integer solution x of a*x = b, or None when none exists."""
    m = len(a)
    n = len(a[0]) if m else 0
    u, d, v = smith_normal_form(a)
    ub = mat_vec(u, b)
    y = [0] * n
    for i in range(m):
        di = d[i][i] if i < min(m, n) else 0
        if di:
            if ub[i] % di:
                return None
            y[i] = ub[i] // di
        elif ub[i]:
            return None
    return mat_vec(v, y)


# -- rational elimination ----------------------------------------------------


def _frac_rows(a) -> List[List[Fraction]]:
    return [[Fraction(x) for x in row] for row in a]


def frac_rank(a) -> int:
    m = _frac_rows(a)
    rank = 0
    cols = len(m[0]) if m else 0
    for j in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][j]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][j]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][j]:
                c = m[i][j]
                m[i] = [x - c * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def frac_solve(a, b) -> Optional[Tuple[Fraction, ...]]:
    """One rational solution of a*x = b, or None when inconsistent."""
    m = _frac_rows(a)
    rows = len(m)
    cols = len(m[0]) if m else 0
    bb = [Fraction(x) for x in b]
    aug = [m[i] + [bb[i]] for i in range(rows)]
    pivots = []
    rank = 0
    for j in range(cols):
        piv = next((i for i in range(rank, rows) if aug[i][j]), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = 1 / aug[rank][j]
        aug[rank] = [x * inv for x in aug[rank]]
        for i in range(rows):
            if i != rank and aug[i][j]:
                c = aug[i][j]
                aug[i] = [x - c * y for x, y in zip(aug[i], aug[rank])]
        pivots.append(j)
        rank += 1
    for i in range(rank, rows):
        if aug[i][cols]:
            return None
    x = [Fraction(0)] * cols
    for i, j in enumerate(pivots):
        x[j] = aug[i][cols]
    return tuple(x)


def frac_inverse(a) -> Mat:
    """Exact inverse of a square matrix over Fraction."""
    n = len(a)
    m = _frac_rows(a)
    aug = [m[i] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i in range(n)]
    for j in range(n):
        piv = next((i for i in range(j, n) if aug[i][j]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[j], aug[piv] = aug[piv], aug[j]
        inv = 1 / aug[j][j]
        aug[j] = [x * inv for x in aug[j]]
        for i in range(n):
            if i != j and aug[i][j]:
                c = aug[i][j]
                aug[i] = [x - c * y for x, y in zip(aug[i], aug[j])]
    return tuple(tuple(row[n:]) for row in aug)


def integer_inverse(a: Mat) -> Mat:
    """Inverse of a unimodular integer matrix, returned over int."""
    inv = frac_inverse(a)
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not invertible over the integers")
    return tuple(tuple(int(x) for x in row) for row in inv)
