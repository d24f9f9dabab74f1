# cython: language_level=3
"""Compiled Bareiss kernels.

Entries stay Python ints (arbitrary precision is required: the minors of the
stretched-configuration systems run to hundreds of digits), so the win over
the pure version comes from typed loop indices and list accesses, not from
machine arithmetic.  Interface matches _puredet exactly.
"""

from fractions import Fraction


def det_int(rows):
    """Determinant of a square integer matrix, fraction-free Bareiss."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k
    cdef int sign = 1
    if n == 0:
        return 1
    cdef list m = [list(r) for r in rows]
    cdef list rk, ri
    prev = 1
    for k in range(n - 1):
        rk = m[k]
        if rk[k] == 0:
            for i in range(k + 1, n):
                if (<list>m[i])[k] != 0:
                    m[k], m[i] = m[i], m[k]
                    rk = m[k]
                    sign = -sign
                    break
            else:
                return 0
        pkk = rk[k]
        for i in range(k + 1, n):
            ri = m[i]
            mik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pkk * ri[j] - mik * rk[j]) // prev
            ri[k] = 0
        prev = pkk
    return sign * (<list>m[n - 1])[n - 1]


def solve_int(a_rows, b_col):
    """Solve A x = b for square integer A and integer b, exactly.

    Returns a list of Fractions, or None when A is singular.
    """
    cdef Py_ssize_t n = len(a_rows)
    cdef Py_ssize_t i, j, k
    if n == 0:
        return []
    cdef list m = [list(r) + [b] for r, b in zip(a_rows, b_col)]
    cdef list rk, ri, row
    prev = 1
    for k in range(n - 1):
        rk = m[k]
        if rk[k] == 0:
            for i in range(k + 1, n):
                if (<list>m[i])[k] != 0:
                    m[k], m[i] = m[i], m[k]
                    rk = m[k]
                    break
            else:
                return None
        pkk = rk[k]
        for i in range(k + 1, n):
            ri = m[i]
            mik = ri[k]
            for j in range(k + 1, n + 1):
                ri[j] = (pkk * ri[j] - mik * rk[j]) // prev
            ri[k] = 0
        prev = pkk
    if (<list>m[n - 1])[n - 1] == 0:
        return None
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        row = m[i]
        s = Fraction(row[n])
        for j in range(i + 1, n):
            if row[j]:
                s -= row[j] * x[j]
        x[i] = s / row[i]
    return x
