"""Integer linear-algebra kernels, pure Python.

Mirrors the interface of the optional compiled module ``_speedups``; the
selector in ``_exact`` imports whichever is available.  All entries are
Python ints, so there is no overflow anywhere; Bareiss elimination keeps the
intermediate values as true minors of the input.
"""

from fractions import Fraction


def det_int(rows):
    """Determinant of a square integer matrix, fraction-free Bareiss."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
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
        pkk = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            mik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pkk * ri[j] - mik * rk[j]) // prev
            ri[k] = 0
        prev = pkk
    return sign * m[n - 1][n - 1]


def solve_int(a_rows, b_col):
    """Solve A x = b for square integer A and integer b, exactly.

    Returns a list of Fractions, or None when A is singular.  Forward pass is
    Bareiss (all-integer); back substitution switches to Fractions.
    """
    n = len(a_rows)
    if n == 0:
        return []
    m = [list(r) + [b] for r, b in zip(a_rows, b_col)]
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    break
            else:
                return None
        pkk = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            mik = ri[k]
            for j in range(k + 1, n + 1):
                ri[j] = (pkk * ri[j] - mik * rk[j]) // prev
            ri[k] = 0
        prev = pkk
    if m[n - 1][n - 1] == 0:
        return None
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(m[i][n])
        row = m[i]
        for j in range(i + 1, n):
            if row[j]:
                s -= row[j] * x[j]
        x[i] = s / row[i]
    return x
