"""Exact affine linear systems with incremental rows and O(1) rollback.

The enumeration engines walk a search tree, adding two equations per marked
point.  A subtree can be abandoned as soon as the accumulated equations become
inconsistent, so the elimination state must support cheap snapshot/rollback.

Rows are kept in acceptance order.  Each incoming row is reduced against the
accepted rows only; accepted rows are never touched again.  Acceptance is
therefore append-only and rollback is list truncation.  The accepted rows are
zero on all earlier pivot columns and carry a leading 1 on their own pivot,
which makes the final solve a reverse-order substitution.

Everything is done over Fractions.  No floating point anywhere.
"""

from fractions import Fraction

ADDED = "added"
REDUNDANT = "redundant"
INCONSISTENT = "inconsistent"

_ZERO = Fraction(0)


class AffineSystem:
    """Growable system ``A x = b`` over the rationals.

    ``ncols`` is fixed at construction.  Rows are sequences of numbers
    (int or Fraction) of length ``ncols`` plus a right-hand side.
    """

    __slots__ = ("ncols", "_rows", "_pivots")

    def __init__(self, ncols):
        self.ncols = ncols
        self._rows = []          # list of (pivot_col, coeff_list_with_rhs)
        self._pivots = {}        # pivot_col -> row index

    @property
    def rank(self):
        return len(self._rows)

    def mark(self):
        """Snapshot token for rollback."""
        return len(self._rows)

    def rollback(self, token):
        for pivot, _ in self._rows[token:]:
            del self._pivots[pivot]
        del self._rows[token:]

    def add(self, coeffs, rhs):
        """Insert one equation.  Returns ADDED, REDUNDANT or INCONSISTENT.

        On INCONSISTENT the system is left unchanged, so the caller can
        roll back to an earlier mark without special-casing the failure.
        """
        n = self.ncols
        row = [Fraction(c) if not isinstance(c, Fraction) else c for c in coeffs]
        row.append(Fraction(rhs) if not isinstance(rhs, Fraction) else rhs)
        for pivot, accepted in self._rows:
            f = row[pivot]
            if f:
                for j in range(n + 1):
                    aj = accepted[j]
                    if aj:
                        row[j] = row[j] - f * aj
        pivot = -1
        for j in range(n):
            if row[j]:
                pivot = j
                break
        if pivot < 0:
            return REDUNDANT if row[n] == 0 else INCONSISTENT
        lead = row[pivot]
        if lead != 1:
            inv = Fraction(1) / lead
            for j in range(n + 1):
                if row[j]:
                    row[j] = row[j] * inv
        self._pivots[pivot] = len(self._rows)
        self._rows.append((pivot, row))
        return ADDED

    def solve(self):
        """Unique solution as a list of Fractions, or None if rank < ncols."""
        n = self.ncols
        if len(self._rows) < n:
            return None
        x = [_ZERO] * n
        for pivot, row in reversed(self._rows):
            s = row[n]
            for j in range(pivot + 1, n):
                cj = row[j]
                if cj:
                    s = s - cj * x[j]
            x[pivot] = s
        return x

    def box_feasible(self, nonneg, pairs, passes=3):
        """Interval check of the system against sign constraints.

        ``nonneg`` lists columns required >= 0; ``pairs`` holds (s, b) pairs
        meaning x_s <= x_b.  Propagates intervals through the accepted rows
        (a bounded number of passes, so this is a relaxation).  Returns False
        only when the constraint box is provably empty, which makes it a
        sound pruning test: feasible systems are never rejected.
        """
        n = self.ncols
        lo = [None] * n
        hi = [None] * n
        for j in nonneg:
            lo[j] = _ZERO
        supports = []
        for _, row in self._rows:
            supports.append([(j, row[j]) for j in range(n) if row[j]])
        for _ in range(passes):
            changed = False
            for (pivot_row, support) in zip(self._rows, supports):
                rhs = pivot_row[1][n]
                # interval of sum c_j x_j, tracking infinite contributions
                s_lo = s_hi = _ZERO
                inf_lo = inf_hi = 0
                inf_lo_at = inf_hi_at = -1
                terms = []
                for j, c in support:
                    if c > 0:
                        tlo, thi = lo[j], hi[j]
                    else:
                        tlo = None if hi[j] is None else c * hi[j]
                        thi = None if lo[j] is None else c * lo[j]
                    if c > 0:
                        tlo = None if tlo is None else c * tlo
                        thi = None if thi is None else c * thi
                    terms.append((j, c, tlo, thi))
                    if tlo is None:
                        inf_lo += 1
                        inf_lo_at = j
                    else:
                        s_lo += tlo
                    if thi is None:
                        inf_hi += 1
                        inf_hi_at = j
                    else:
                        s_hi += thi
                for j, c, tlo, thi in terms:
                    # others = rhs - c_j x_j must fit in the others' interval
                    if inf_hi - (1 if thi is None else 0) == 0:
                        oth_hi = s_hi if thi is None else s_hi - thi
                        # c_j x_j >= rhs - oth_hi
                        bound = rhs - oth_hi
                        if c > 0:
                            cand = bound / c
                            if lo[j] is None or cand > lo[j]:
                                lo[j] = cand
                                changed = True
                        else:
                            cand = bound / c
                            if hi[j] is None or cand < hi[j]:
                                hi[j] = cand
                                changed = True
                    if inf_lo - (1 if tlo is None else 0) == 0:
                        oth_lo = s_lo if tlo is None else s_lo - tlo
                        bound = rhs - oth_lo
                        if c > 0:
                            cand = bound / c
                            if hi[j] is None or cand < hi[j]:
                                hi[j] = cand
                                changed = True
                        else:
                            cand = bound / c
                            if lo[j] is None or cand > lo[j]:
                                lo[j] = cand
                                changed = True
                    if lo[j] is not None and hi[j] is not None and lo[j] > hi[j]:
                        return False
            for s, b in pairs:
                if hi[b] is not None and (hi[s] is None or hi[b] < hi[s]):
                    hi[s] = hi[b]
                    changed = True
                if lo[s] is not None and lo[s] > 0 and (lo[b] is None or lo[s] > lo[b]):
                    lo[b] = lo[s]
                    changed = True
                if lo[s] is not None and hi[s] is not None and lo[s] > hi[s]:
                    return False
                if lo[b] is not None and hi[b] is not None and lo[b] > hi[b]:
                    return False
            if not changed:
                break
        return True

    def solve_partial(self):
        """Back-substitute the accepted rows, leaving free columns at zero.

        Returns (x, pivot_columns).  Useful when trailing columns were
        reserved but never used; the caller decides whether missing pivots
        among the used columns mean anything.
        """
        n = self.ncols
        x = [_ZERO] * n
        for pivot, row in reversed(self._rows):
            s = row[n]
            for j in range(pivot + 1, n):
                cj = row[j]
                if cj:
                    s = s - cj * x[j]
            x[pivot] = s
        return x, set(self._pivots)

    def evaluate_free(self, coeffs, rhs):
        """Reduce an equation without inserting it.

        Returns the residual row (length ncols + 1) after elimination by the
        accepted rows.  All-zero coefficients with nonzero rhs means the
        equation contradicts the system; all-zero with zero rhs means it is
        implied.
        """
        n = self.ncols
        row = [Fraction(c) if not isinstance(c, Fraction) else c for c in coeffs]
        row.append(Fraction(rhs) if not isinstance(rhs, Fraction) else rhs)
        for pivot, accepted in self._rows:
            f = row[pivot]
            if f:
                for j in range(n + 1):
                    aj = accepted[j]
                    if aj:
                        row[j] = row[j] - f * aj
        return row
