"""Rational curve counts on the plane and on Hirzebruch surfaces.

The number of rational tropical curves of a fixed degree through a rigid
configuration of generic points does not depend on the configuration, so it is
a well defined integer.  This module computes those integers three ways:

* ``wdvv_p2`` / ``wdvv_f1``: divisorial recursions with exact big-integer
  arithmetic, instant at any degree this package cares about;
* ``count_rational``: the public entry point; routes to a recursion when one
  applies and otherwise runs the placement engine in :mod:`._enum`;
* ``brute_force_enumerate``: the independent oracle from :mod:`._trees`,
  feasible for small leaf counts only.

Every enumeration draws its point configuration from a seeded generator and
records the seed, so results are reproducible and can be re-checked at a
second configuration.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union

from . import _cache
from ._enum import (
    DegenerateConfig,
    degree_of_query,
    enumerate_rational,
    normalize_tangency,
    random_config,
)
from ._trees import oracle_enumerate
from .tropical_core import TropicalCurve

Tangency = Union[None, int, Tuple[int, int]]

__all__ = [
    "CountQuery",
    "CountRecord",
    "brute_force_enumerate",
    "count_elliptic_direct",
    "count_rational",
    "rigid_point_count",
    "wdvv_f1",
    "wdvv_p2",
]

_MAX_REDRAWS = 8


def rigid_point_count(surface_n: int, a: int, b: int, tangency: Tangency = None) -> int:
    """Number of generic points that pin down a rational curve of this degree.

    Equals one less than the number of unbounded ends: with tangency None,
    w, or (w', w''), that is 2b+(n+2)a-1, 2b+(n+2)a-w, and
    2b+(n+2)a-w'-w''+1 respectively.
    """
    return degree_of_query(surface_n, a, b, tangency).num_ends - 1


@dataclass(frozen=True)
class CountQuery:
    """A counting problem: degree data plus the number of point conditions.

    ``num_points`` defaults to the rigid count for the degree; passing more
    points is allowed (the answer is 0), fewer is rejected since the count
    would not be finite.
    """

    surface_n: int
    degree: Tuple[int, int]
    tangency: Tangency = None
    genus: int = 0
    num_points: Optional[int] = None

    def __post_init__(self):
        a, b = self.degree
        if a < 0 or b < 0 or (a, b) == (0, 0):
            raise ValueError("degree must be a nonzero pair of nonnegative integers")
        if self.surface_n < 0:
            raise ValueError("surface index must be nonnegative")
        if self.genus not in (0, 1):
            raise ValueError("only genus 0 and 1 are supported")
        tang = normalize_tangency(self.tangency)
        object.__setattr__(self, "tangency", tang)
        # Validates tangency feasibility as a side effect.
        rigid = rigid_point_count(self.surface_n, a, b, tang)
        if self.num_points is None:
            object.__setattr__(self, "num_points", rigid)
        elif self.num_points < 0:
            raise ValueError("num_points must be nonnegative")

    @property
    def rigid_points(self) -> int:
        a, b = self.degree
        return rigid_point_count(self.surface_n, a, b, self.tangency)

    def cache_key(self) -> str:
        a, b = self.degree
        return _cache.cache_key(self.surface_n, a, b, self.tangency, self.genus)


@dataclass(frozen=True)
class CountRecord:
    """The answer to a query, together with how it was obtained."""

    query: CountQuery
    value: int
    method: str  # tropical_enum | wdvv | brute_force | formula
    witness: Optional[Tuple[Tuple[TropicalCurve, int], ...]] = None
    seed: Optional[int] = None

    def __post_init__(self):
        if self.witness is not None:
            total = sum(m for _, m in self.witness)
            if total != self.value:
                raise ValueError("witness multiplicities do not sum to the count")

    def to_json(self) -> dict:
        q = self.query
        tang = q.tangency
        if tang is None:
            tang_json = None
        elif isinstance(tang, int):
            tang_json = [tang]
        else:
            tang_json = list(tang)
        data = {
            "surface_n": q.surface_n,
            "degree": list(q.degree),
            "tangency": tang_json,
            "genus": q.genus,
            "num_points": q.num_points,
            "value": self.value,
            "method": self.method,
            "seed": self.seed,
        }
        if self.witness is not None:
            data["witnesses"] = [
                {"multiplicity": m, "curve": c.to_json()} for c, m in self.witness
            ]
        return data


@lru_cache(maxsize=None)
def wdvv_p2(d: int) -> int:
    """Count of rational plane curves of degree d through 3d-1 points.

    Kontsevich's recursion seeded with the line count 1; exact integers.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    if d == 1:
        return 1
    total = 0
    for d1 in range(1, d):
        d2 = d - d1
        n1, n2 = wdvv_p2(d1), wdvv_p2(d2)
        total += n1 * n2 * (
            d1 * d1 * d2 * d2 * math.comb(3 * d - 4, 3 * d1 - 2)
            - d1 ** 3 * d2 * math.comb(3 * d - 4, 3 * d1 - 1)
        )
    return total


def _f1_pair(c1: Tuple[int, int], c2: Tuple[int, int]) -> int:
    # Intersection pairing in the (section, fiber) basis used here:
    # (a,b).(a',b') = ab' + a'b + aa'.
    a1, b1 = c1
    a2, b2 = c2
    return a1 * b2 + a2 * b1 + a1 * a2


def _f1_points(c: Tuple[int, int]) -> int:
    a, b = c
    return 3 * a + 2 * b - 1


def _f1_supported(a: int, b: int) -> bool:
    # Classes that can carry a nonzero count; checked before recursing so
    # the recursion never climbs to larger classes.
    if a < 0 or b < -1 or (a, b) == (0, 0):
        return False
    if a == 0:
        return b == 1
    if b == -1:
        return a == 1
    return True


@lru_cache(maxsize=None)
def wdvv_f1(a: int, b: int) -> int:
    """Rational curve count of bidegree (a,b) on the first Hirzebruch surface.

    Degree (a,b) carries a ends in direction (1,1), b in (1,0), a in (0,-1)
    and a+b in (-1,0); the count is through 3a+2b-1 generic points.  Computed
    by a WDVV recursion in the rank-two class lattice.  The class lattice
    contains one rigid class with negative self-intersection, counted once
    through zero points; it enters the recursion as the seed (1,-1).
    """
    # Support boundary: everything outside it counts 0.
    if a < 0 or b < -1:
        return 0
    if a == 0:
        return 1 if b == 1 else 0
    if b == -1:
        return 1 if a == 1 else 0
    if (a, b) == (1, 0):
        return 1
    c = (a, b)
    nc = _f1_points(c)
    # Pairing against the two divisor classes used in the associativity
    # relation: X = (1,0) (section class), Y = (0,1) (fiber class).
    # (C.Y_div) below means intersection with the divisor, not lattice dot.
    def dot_x(cl):  # C . X
        return cl[0] + cl[1]

    def dot_y(cl):  # C . Y
        return cl[0]

    q = dot_y(c) * (dot_y(c) - 2 * dot_x(c))  # = -a(a+2b), nonzero here
    if q == 0:
        raise ArithmeticError("recursion pivot vanished; class outside its domain")
    total = 0
    for a1 in range(0, a + 1):
        for b1 in range(-1, b + 2):
            c1 = (a1, b1)
            c2 = (a - a1, b - b1)
            if not _f1_supported(*c1) or not _f1_supported(*c2):
                continue
            n1 = wdvv_f1(*c1)
            if n1 == 0:
                continue
            n2 = wdvv_f1(*c2)
            if n2 == 0:
                continue
            p1, p2 = _f1_points(c1), _f1_points(c2)
            total += (
                math.comb(nc - 1, p1)
                * n1
                * n2
                * _f1_pair(c1, c2)
                * dot_x(c1)
                * dot_y(c2)
                * (dot_y(c1) * dot_x(c2) - dot_x(c1) * dot_y(c2))
            )
    if total % q != 0:
        raise ArithmeticError("recursion produced a non-integer count")
    return total // q


def _config_for(query: CountQuery, seed: int, attempt: int) -> List:
    rng = random.Random(1_000_003 * seed + 7919 * attempt + 12345)
    return random_config(rng, query.num_points)


def _run_with_redraws(query: CountQuery, seed: int, runner):
    last = None
    for attempt in range(_MAX_REDRAWS):
        points = _config_for(query, seed, attempt)
        try:
            return runner(points)
        except DegenerateConfig as exc:  # redraw and retry
            last = exc
    raise RuntimeError(
        "could not draw a generic configuration after %d attempts: %s"
        % (_MAX_REDRAWS, last)
    )


def _excess_or_deficit(query: CountQuery) -> Optional[CountRecord]:
    rigid = query.rigid_points
    if query.num_points > rigid:
        # Overconstrained: no curve of the degree passes through that many
        # generic points, so the count is 0 without any enumeration.
        return CountRecord(query=query, value=0, method="formula")
    if query.num_points < rigid:
        raise ValueError("non-rigid configuration")
    return None


def count_rational(
    query: CountQuery,
    seed: int = 0,
    use_cache: bool = True,
    want_witness: bool = False,
    cross_check: bool = False,
) -> CountRecord:
    """Count rational curves for *query*, counted with multiplicity.

    Routing: surfaces with n=1 and no tangency go through the WDVV recursion
    (this includes the plane, b=0); everything else runs the placement
    engine on a seeded generic configuration.  With ``cross_check`` the
    enumeration is repeated at a second configuration and the totals must
    agree.  ``want_witness`` forces an enumeration so the record carries the
    curves themselves.
    """
    if query.genus != 0:
        raise ValueError("count_rational handles genus zero only")
    short = _excess_or_deficit(query)
    if short is not None:
        return short

    key = query.cache_key()
    if use_cache and not want_witness and not cross_check:
        hit = _cache.lookup(key)
        if hit is not None:
            value, method = hit
            return CountRecord(query=query, value=value, method=method, seed=None)

    a, b = query.degree
    if query.surface_n == 1 and query.tangency is None and not want_witness:
        value = wdvv_f1(a, b)
        record = CountRecord(query=query, value=value, method="wdvv")
        _cache.store(key, value, "wdvv")
        return record

    def runner(points):
        return enumerate_rational(query.surface_n, a, b, query.tangency, points)

    total, witnesses = _run_with_redraws(query, seed, runner)
    if cross_check:
        total2, _ = _run_with_redraws(query, seed + 1, runner)
        if total2 != total:
            raise AssertionError(
                "count changed between configurations: %d vs %d" % (total, total2)
            )
    record = CountRecord(
        query=query,
        value=total,
        method="tropical_enum",
        witness=tuple(witnesses) if want_witness else None,
        seed=seed,
    )
    _cache.store(key, total, "tropical_enum")
    return record


def brute_force_enumerate(
    query: CountQuery,
    leaf_cap: int = 11,
    seed: int = 0,
    want_witness: bool = False,
) -> CountRecord:
    """Independent oracle: exhaust marked trees instead of placing offsets.

    Shares nothing with the main engine beyond the exact linear algebra
    kernel, so agreement between the two is meaningful evidence.
    """
    if query.genus != 0:
        raise ValueError("the oracle handles genus zero only")
    short = _excess_or_deficit(query)
    if short is not None:
        return short
    a, b = query.degree

    def runner(points):
        return oracle_enumerate(
            query.surface_n, a, b, query.tangency, points, leaf_cap=leaf_cap
        )

    total, witnesses = _run_with_redraws(query, seed, runner)
    return CountRecord(
        query=query,
        value=total,
        method="brute_force",
        witness=tuple(witnesses) if want_witness else None,
        seed=seed,
    )


def count_elliptic_direct(
    surface_n: int,
    a: int,
    b: int,
    j_length=None,
    seed: int = 0,
    want_witness: bool = False,
) -> CountRecord:
    """Count genus-one curves of standard degree (a,b) with fixed cycle length.

    Enumerates genus-one tropical curves through 2b+(n+2)a-1 generic points
    whose cycle has total lattice length ``j_length``, keeps the well spaced
    ones, and sums the deficiency-appropriate multiplicities.  Feasible for
    small degrees only; see :mod:`._genus1`.
    """
    from ._genus1 import enumerate_elliptic

    if j_length is None:
        j_length = Fraction(999_983, 7)
    query = CountQuery(surface_n=surface_n, degree=(a, b), genus=1)
    key = query.cache_key()

    def runner(points):
        return enumerate_elliptic(surface_n, a, b, j_length, points)

    total, witnesses = _run_with_redraws(query, seed, runner)
    record = CountRecord(
        query=query,
        value=total,
        method="tropical_enum",
        witness=tuple(witnesses) if want_witness else None,
        seed=seed,
    )
    _cache.store(key, total, "tropical_enum")
    return record
