"""Closed-form count of elliptic curves with fixed cycle length.

The count on a Hirzebruch surface decomposes into three summands: curves
whose cycle survives as a visible polygon (interior lattice points of the
Newton polygon times the rational count), curves degenerating into a
central component met twice by a long vertical string (double-tangency
rational counts), and curves whose cycle flattens onto a single weighted
contact end (single-tangency rational counts).  The last two exist only
when the surface parameter n leaves room for positive contact weights, so
they vanish on F_0 and F_1.

Rational counts enter through an injected provider, so formula evaluation
is decoupled from how the numbers are produced (recursion, enumeration
engine, or cache).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .polygon_lattice import interior_lattice_points, polygon_of_degree
from .rational_count import CountQuery, count_rational, wdvv_p2

Split = Tuple[int, int]


def multinomial(total: int, parts: Sequence[int]) -> int:
    """Ways to distribute ``total`` labelled items into groups of the given
    sizes.  The sizes must be nonnegative and sum to the total."""
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be nonnegative")
    if sum(parts) != total:
        raise ValueError("multinomial parts must sum to the total")
    out = 1
    rem = total
    for p in parts:
        out *= math.comb(rem, p)
        rem -= p
    return out


@dataclass(frozen=True)
class PartitionTerm:
    """One index of the degeneration sum.

    ``row`` 2 stands for a central component met by the string at two
    separate contact ends, row 3 for a single contact end of weight
    w0' + w0'' carrying a flattened cycle.  ``splits`` lists (a_j, b_j) for
    the central component (j = 0) and the k side components; the side
    contact weights are sorted descending.  ``point_splits`` records how
    many of the point conditions each component absorbs and
    ``coefficient`` the multinomial number of ways to deal the points.
    """

    row: int
    k: int
    cycle_weights: Tuple[int, int]
    side_weights: Tuple[int, ...]
    splits: Tuple[Split, ...]
    point_splits: Tuple[int, ...]
    coefficient: int

    def __post_init__(self) -> None:
        if self.row not in (2, 3):
            raise ValueError("row must be 2 or 3")
        w1, w2 = self.cycle_weights
        if not (w1 >= w2 >= 1):
            raise ValueError("cycle weights must satisfy w0' >= w0'' >= 1")
        if any(
            self.side_weights[i] < self.side_weights[i + 1]
            for i in range(len(self.side_weights) - 1)
        ):
            raise ValueError("side weights must be sorted descending")
        if len(self.side_weights) != self.k:
            raise ValueError("side weight count must equal k")
        if len(self.splits) != self.k + 1 or len(self.point_splits) != self.k + 1:
            raise ValueError("splits and point splits must cover 0..k")
        if any(nj < 0 for nj in self.point_splits):
            raise ValueError("point splits must be nonnegative")

    def to_json(self) -> Dict:
        return {
            "row": self.row,
            "k": self.k,
            "cycle_weights": list(self.cycle_weights),
            "side_weights": list(self.side_weights),
            "splits": [list(s) for s in self.splits],
            "point_splits": list(self.point_splits),
            "coefficient": self.coefficient,
        }


@dataclass(frozen=True)
class EllipticResult:
    """Total count with its three-summand breakdown and term audit trail."""

    n: int
    a: int
    b: int
    total: int
    summand1: int
    summand2: int
    summand3: int
    terms: Tuple[Tuple[PartitionTerm, int], ...]

    def __post_init__(self) -> None:
        if self.total != self.summand1 + self.summand2 + self.summand3:
            raise ValueError("total must equal the sum of the three summands")

    def to_json(self) -> Dict:
        return {
            "surface_n": self.n,
            "degree": [self.a, self.b],
            "total": self.total,
            "summands": [self.summand1, self.summand2, self.summand3],
            "terms": [
                {"term": t.to_json(), "value": v} for t, v in self.terms
            ],
        }


def _descending_partitions(total: int) -> Iterator[Tuple[int, ...]]:
    """All partitions of ``total`` into positive parts, sorted descending;
    the empty partition when total is 0."""

    def rec(rem: int, cap: int):
        if rem == 0:
            yield ()
            return
        for w in range(min(cap, rem), 0, -1):
            for rest in rec(rem - w, w):
                yield (w,) + rest

    yield from rec(total, total)


def _compositions(total: int, nparts: int) -> Iterator[Tuple[int, ...]]:
    """Ordered choices of ``nparts`` nonnegative integers summing to total."""
    if nparts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, nparts - 1):
            yield (first,) + rest


def enumerate_terms(n: int, a: int, b: int) -> List[PartitionTerm]:
    """Every feasible degeneration index for bidegree (a, b) on F_n.

    A term needs positive contact weights summing to n, so n < 2 gives no
    terms at all (row 3 alone needs a weight >= 2, and row 2 needs two).
    Terms whose components would face more point conditions than they can
    carry, or contact weights exceeding the component's rightward degree,
    index empty curve sets and are dropped.
    """
    if n < 0 or a < 1 or b < 0:
        raise ValueError("need n >= 0, a >= 1, b >= 0")
    if n < 2:
        return []
    npoints = 2 * b + (n + 2) * a - 1
    terms: List[PartitionTerm] = []

    def split_data(cw_sum_0, sides, extra0):
        """Common inner loops: yields feasible (splits, point_splits)."""
        k = len(sides)
        for asplit in _compositions(a - 1, k + 1):
            for bsplit in _compositions(b + n, k + 1):
                if cw_sum_0 > bsplit[0]:
                    continue
                if any(w > bs for w, bs in zip(sides, bsplit[1:])):
                    continue
                pts = [2 * bsplit[0] + (n + 2) * asplit[0] - cw_sum_0 + extra0]
                pts += [
                    2 * bs + (n + 2) * asp - w
                    for w, asp, bs in zip(sides, asplit[1:], bsplit[1:])
                ]
                if any(nj < 0 for nj in pts):
                    continue
                if sum(pts) != npoints:
                    raise AssertionError("point splits must exhaust the points")
                yield tuple(zip(asplit, bsplit)), tuple(pts)

    # row 2: two separate contact ends on the central component
    for w0p in range(1, n):
        for w0pp in range(1, w0p + 1):
            rest = n - w0p - w0pp
            if rest < 0:
                continue
            for sides in _descending_partitions(rest):
                for splits, pts in split_data(w0p + w0pp, sides, 1):
                    terms.append(
                        PartitionTerm(
                            row=2,
                            k=len(sides),
                            cycle_weights=(w0p, w0pp),
                            side_weights=sides,
                            splits=splits,
                            point_splits=pts,
                            coefficient=multinomial(npoints, pts),
                        )
                    )

    # row 3: one contact end of weight w0 = w0' + w0'', each unordered
    # weight pair once (the half-for-double-counting compensation folded in)
    for w0 in range(2, n + 1):
        for sides in _descending_partitions(n - w0):
            for w0pp in range(1, w0 // 2 + 1):
                w0p = w0 - w0pp
                for splits, pts in split_data(w0, sides, 1):
                    terms.append(
                        PartitionTerm(
                            row=3,
                            k=len(sides),
                            cycle_weights=(w0p, w0pp),
                            side_weights=sides,
                            splits=splits,
                            point_splits=pts,
                            coefficient=multinomial(npoints, pts),
                        )
                    )
    return terms


class CachedCounts:
    """Rational-count provider backed by count_rational and its cache."""

    def __init__(self, seed: int = 0, use_cache: bool = True):
        self.seed = seed
        self.use_cache = use_cache

    def _count(self, n: int, a: int, b: int, tangency) -> int:
        query = CountQuery(surface_n=n, degree=(a, b), tangency=tangency)
        return count_rational(
            query, seed=self.seed, use_cache=self.use_cache
        ).value

    def standard(self, n: int, a: int, b: int) -> int:
        return self._count(n, a, b, None)

    def relative(self, n: int, a: int, b: int, w: int) -> int:
        return self._count(n, a, b, w)

    def relative_pair(self, n: int, a: int, b: int, w1: int, w2: int) -> int:
        return self._count(n, a, b, (w1, w2))


def elliptic_count(
    n: int, a: int, b: int, counts: Optional[CachedCounts] = None
) -> EllipticResult:
    """Evaluate the three-summand formula for bidegree (a, b) on F_n."""
    if counts is None:
        counts = CachedCounts()
    interior = interior_lattice_points(polygon_of_degree(n, a, b))
    summand1 = interior * counts.standard(n, a, b)
    summand2 = 0
    summand3 = 0
    valued: List[Tuple[PartitionTerm, int]] = []
    for term in enumerate_terms(n, a, b):
        (a0, b0) = term.splits[0]
        side = 1
        for w, (aj, bj) in zip(term.side_weights, term.splits[1:]):
            side *= w * counts.relative(n, aj, bj, w)
        w0p, w0pp = term.cycle_weights
        if term.row == 2:
            value = (
                2
                * term.coefficient
                * w0p
                * w0pp
                * counts.relative_pair(n, a0, b0, w0p, w0pp)
                * side
            )
            summand2 += value
        else:
            w0 = w0p + w0pp
            value = term.coefficient * w0 * counts.relative(n, a0, b0, w0) * side
            summand3 += value
        valued.append((term, value))
    total = summand1 + summand2 + summand3
    return EllipticResult(
        n=n,
        a=a,
        b=b,
        total=total,
        summand1=summand1,
        summand2=summand2,
        summand3=summand3,
        terms=tuple(valued),
    )


def p2_elliptic(d: int, counts: Optional[CachedCounts] = None) -> int:
    """Plane elliptic curves of degree d with fixed generic cycle length.

    The plane sits under the one-point blow-up, where bidegree (d, 0)
    reproduces degree-d plane curves; the closed form is the triangle's
    interior count binom(d-1, 2) times the rational number.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    n0 = counts.standard(1, d, 0) if counts is not None else wdvv_p2(d)
    return math.comb(d - 1, 2) * n0


def f1_elliptic(a: int, b: int, counts: Optional[CachedCounts] = None) -> int:
    """Closed form on the one-point blow-up of the plane."""
    if a < 1 or b < 0:
        raise ValueError("need a >= 1, b >= 0")
    numer = a * a + 2 * a * b - 3 * a - 2 * b + 2
    if numer % 2:
        raise AssertionError("interior-count numerator must be even")
    if counts is not None:
        n0 = counts.standard(1, a, b)
    else:
        n0 = CachedCounts().standard(1, a, b)
    return (numer // 2) * n0


def results_to_csv(results: Sequence[EllipticResult]) -> str:
    """Flat table of totals and summands, one result per row."""
    lines = ["n,a,b,summand1,summand2,summand3,total"]
    for r in results:
        lines.append(
            f"{r.n},{r.a},{r.b},{r.summand1},{r.summand2},{r.summand3},{r.total}"
        )
    return "\n".join(lines) + "\n"


def result_to_json_str(result: EllipticResult) -> str:
    return json.dumps(result.to_json(), sort_keys=True, indent=2)
