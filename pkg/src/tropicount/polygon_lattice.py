"""Lattice polygons, tropical degrees, and the duality between them.

A curve of bidegree (a, b) on the Hirzebruch surface F_n has Newton polygon
(0,0), (a,0), (a,b), (0, b+a*n) and, dually, ends in the four directions
(n,1), (1,0), (0,-1), (-1,0) with total weights a, b, a, a*n+b.  The plane
P^2 is reached as n = 1, b = 0 (degree-d triangle).  Everything is exact:
integer vertices, Fraction areas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Tuple, Union

Vec = Tuple[int, int]
Tangency = Union[None, int, Tuple[int, int]]


@dataclass(frozen=True)
class LatticePolygon:
    """Convex lattice polygon with counterclockwise integer vertices.

    Strict convexity is enforced: consecutive edge cross products must be
    positive, so no three consecutive vertices are collinear and all
    vertices are genuine corners.
    """

    vertices: Tuple[Vec, ...]

    def __init__(self, vertices: Sequence[Sequence[int]]):
        verts = tuple((int(x), int(y)) for x, y in vertices)
        if len(verts) < 3:
            raise ValueError("a lattice polygon needs at least 3 vertices")
        if len(set(verts)) != len(verts):
            raise ValueError("polygon vertices must be pairwise distinct")
        n = len(verts)
        for i in range(n):
            ax, ay = verts[i]
            bx, by = verts[(i + 1) % n]
            cx, cy = verts[(i + 2) % n]
            cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
            if cross <= 0:
                raise ValueError(
                    "vertices must be in strictly convex counterclockwise position"
                )
        object.__setattr__(self, "vertices", verts)

    def edges(self) -> Iterator[Tuple[Vec, Vec]]:
        """Yield the edges as (tail, head) vertex pairs, counterclockwise."""
        n = len(self.vertices)
        for i in range(n):
            yield self.vertices[i], self.vertices[(i + 1) % n]

    def edge_vectors(self) -> list[Vec]:
        return [(h[0] - t[0], h[1] - t[1]) for t, h in self.edges()]

    @property
    def area(self) -> Fraction:
        """Euclidean area by the shoelace formula (exact rational)."""
        twice = 0
        n = len(self.vertices)
        for i in range(n):
            x0, y0 = self.vertices[i]
            x1, y1 = self.vertices[(i + 1) % n]
            twice += x0 * y1 - x1 * y0
        return Fraction(twice, 2)

    def boundary_lattice_points(self) -> int:
        """Number of lattice points on the boundary (vertices included)."""
        return sum(math.gcd(abs(vx), abs(vy)) for vx, vy in self.edge_vectors())

    def contains_strict(self, point: Vec) -> bool:
        """True when point lies strictly inside the polygon."""
        px, py = point
        for (ax, ay), (bx, by) in self.edges():
            if (bx - ax) * (py - ay) - (by - ay) * (px - ax) <= 0:
                return False
        return True

    def bounding_box(self) -> Tuple[int, int, int, int]:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def to_json(self) -> dict:
        return {"vertices": [[x, y] for x, y in self.vertices]}

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticePolygon):
            return NotImplemented
        return _rotate_min(self.vertices) == _rotate_min(other.vertices)

    def __hash__(self) -> int:
        return hash(_rotate_min(self.vertices))


def _rotate_min(verts: Tuple[Vec, ...]) -> Tuple[Vec, ...]:
    # canonical rotation: start at the lexicographically smallest vertex
    k = verts.index(min(verts))
    return verts[k:] + verts[:k]


@dataclass(frozen=True)
class TropicalDegree:
    """Multiset of weighted primitive end directions of a tropical curve.

    ``ends`` holds one (direction, weight) entry per end, repeats allowed.
    The weighted directions always sum to zero; this is the closedness of the
    dual polygon and is checked on construction.
    """

    ends: Tuple[Tuple[Vec, int], ...]
    surface_n: int
    bidegree: Tuple[int, int]
    tangency: Tangency = None

    def __post_init__(self):
        sx = sy = 0
        for (dx, dy), w in self.ends:
            if w <= 0:
                raise ValueError("end weights must be positive")
            if math.gcd(dx, dy) != 1:
                raise ValueError(f"end direction {(dx, dy)} is not primitive")
            sx += w * dx
            sy += w * dy
        if (sx, sy) != (0, 0):
            raise ValueError("weighted end directions must sum to zero")

    @property
    def num_ends(self) -> int:
        """D, the number of ends counted without weights."""
        return len(self.ends)

    @property
    def is_degenerate(self) -> bool:
        """True for pure fiber classes (a = 0): every end is horizontal."""
        return self.bidegree[0] == 0

    def sorted_ends(self) -> Tuple[Tuple[Vec, int], ...]:
        return tuple(sorted(self.ends))

    def to_json(self) -> dict:
        return {
            "ends": [
                {"dir": [d[0], d[1]], "weight": w} for d, w in self.sorted_ends()
            ]
        }


def _check_nab(n: int, a: int, b: int) -> None:
    if n < 0 or a < 0 or b < 0:
        raise ValueError("n, a, b must be nonnegative")
    if (a, b) == (0, 0):
        raise ValueError("bidegree (0, 0) has no curves")


def polygon_of_degree(n: int, a: int, b: int) -> LatticePolygon:
    """Newton polygon of bidegree (a, b) on F_n.

    The generic shape is the trapezoid (0,0), (a,0), (a,b), (0, b+a*n);
    b = 0 collapses the right edge and a triangle is returned.  a must be
    positive, otherwise the polygon degenerates to a segment.
    """
    _check_nab(n, a, b)
    if a == 0:
        raise ValueError("a = 0 degenerates the polygon to a segment")
    if b == 0:
        if n == 0:
            raise ValueError("(n, b) = (0, 0) degenerates the polygon to a segment")
        return LatticePolygon([(0, 0), (a, 0), (0, a * n)])
    return LatticePolygon([(0, 0), (a, 0), (a, b), (0, b + a * n)])


def degree_standard(n: int, a: int, b: int) -> TropicalDegree:
    """Degree of bidegree-(a, b) curves on F_n: all ends of weight 1.

    Ends: a copies of (n,1), b of (1,0), a of (0,-1), a*n+b of (-1,0).
    """
    _check_nab(n, a, b)
    ends = []
    ends += [((n, 1), 1)] * a
    ends += [((1, 0), 1)] * b
    ends += [((0, -1), 1)] * a
    ends += [((-1, 0), 1)] * (a * n + b)
    return TropicalDegree(tuple(ends), n, (a, b))


def degree_relative(n: int, a: int, b: int, tangency: Tangency) -> TropicalDegree:
    """Degree with one or two weighted rightward ends (boundary tangency).

    A single tangency w replaces w of the weight-1 ends (1,0) by one end of
    weight w; a pair (w', w'') replaces w'+w'' of them by two weighted ends.
    Raises ValueError("tangency exceeds bidegree") when they do not fit.
    """
    _check_nab(n, a, b)
    if tangency is None:
        return degree_standard(n, a, b)
    if isinstance(tangency, int):
        weights = (tangency,)
    else:
        weights = tuple(tangency)
        if len(weights) != 2:
            raise ValueError("tangency must be a single weight or a pair")
    if any(w < 1 for w in weights):
        raise ValueError("tangency weights must be >= 1")
    total = sum(weights)
    if total > b:
        raise ValueError("tangency exceeds bidegree")
    ends = []
    ends += [((n, 1), 1)] * a
    ends += [((1, 0), 1)] * (b - total)
    ends += [((1, 0), w) for w in weights]
    ends += [((0, -1), 1)] * a
    ends += [((-1, 0), 1)] * (a * n + b)
    tkey: Tangency = weights[0] if len(weights) == 1 else (weights[0], weights[1])
    return TropicalDegree(tuple(ends), n, (a, b), tkey)


def interior_lattice_points(p: LatticePolygon) -> int:
    """Number of lattice points strictly inside p.

    Computed by a bounding-box scan and cross-checked against the Pick
    rearrangement I = A - B/2 + 1.
    """
    x0, y0, x1, y1 = p.bounding_box()
    count = 0
    for x in range(x0 + 1, x1):
        for y in range(y0 + 1, y1):
            if p.contains_strict((x, y)):
                count += 1
    by_pick = p.area - Fraction(p.boundary_lattice_points(), 2) + 1
    if by_pick != count:
        raise AssertionError(
            f"Pick check failed: scan {count} vs A - B/2 + 1 = {by_pick}"
        )
    return count


def pick_data(p: LatticePolygon) -> Tuple[Fraction, int, int]:
    """(area, boundary lattice points, interior lattice points) of p.

    Satisfies Pick's identity area = interior + boundary/2 - 1 exactly.
    """
    return p.area, p.boundary_lattice_points(), interior_lattice_points(p)
