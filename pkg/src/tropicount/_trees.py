"""Brute-force oracle: build every marked tree literally and solve it.

The placement engine treats a marked point as an offset along a skeleton
edge.  The oracle instead inserts each marked point as an honest leaf: the
chosen edge is split at a new 2-valent vertex, the two halves get their own
length unknowns tied to the parent length by a bookkeeping equation, and the
point's evaluation rows are written against the finer tree.  Placements that
turn inconsistent are abandoned (that is still exhaustive search: such a
subtree provably contains no solutions), as are placements whose sign
relaxation is empty.

The oracle shares only the exact linear algebra with the engine; shapes,
unknowns and the final solve are organised differently, so value agreement
between the two is a genuine cross-check.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from tropicount._enum import (
    DegenerateConfig,
    _line_count,
    canonical_key,
    degree_of_query,
    orient_tree,
    tree_class_key,
    trivalent_trees,
)
from tropicount._linsys import ADDED, INCONSISTENT, REDUNDANT, AffineSystem
from tropicount.tropical_core import Edge, TropicalCurve, multiplicity_genus0

Vec = Tuple[int, int]
Point = Tuple[Fraction, Fraction]


class _OEdge:
    """One live edge of the growing tree (bounded or unbounded)."""

    __slots__ = ("tail", "head", "m", "col")

    def __init__(self, tail: int, head: Optional[int], m: Vec, col: Optional[int]):
        self.tail = tail
        self.head = head
        self.m = m
        self.col = col


def _search_marked_trees(sk, ends, points, out) -> None:
    npoints = len(points)
    ninter = len([e for e in sk.edges if e[3] is not None])
    ncols = 2 + ninter + 2 * npoints
    sys = AffineSystem(ncols)

    live: List[_OEdge] = []
    for tail, head, m, col in sk.edges:
        if col is None:
            live.append(_OEdge(tail, None, m, None))
        else:
            live.append(_OEdge(tail, head, m, col))
    paths: Dict[int, Tuple[Tuple[int, Vec], ...]] = {
        v: tuple(p) for v, p in sk.paths.items()
    }
    state = {"next_col": 2 + ninter, "next_vertex": 10_000}
    marks: List[Tuple[int, int]] = []  # (vertex, point index)
    nonneg = list(range(2, 2 + ninter))
    pairs: List[Tuple[int, int]] = []
    order = sorted(range(npoints), key=lambda j: points[j][1], reverse=True)

    def eval_rows(vertex_path, px, py):
        rowx = [0] * ncols
        rowy = [0] * ncols
        rowx[0] = 1
        rowy[1] = 1
        for col, m in vertex_path:
            rowx[2 + col] += m[0]
            rowy[2 + col] += m[1]
        r1 = sys.add(rowx, px)
        if r1 is REDUNDANT:
            raise DegenerateConfig("redundant evaluation row")
        if r1 is INCONSISTENT:
            return False, 0
        r2 = sys.add(rowy, py)
        if r2 is REDUNDANT:
            raise DegenerateConfig("redundant evaluation row")
        if r2 is INCONSISTENT:
            return False, 1
        return True, 2

    def place(depth: int) -> None:
        j = order[depth]
        px, py = points[j]
        for i in range(len(live)):
            e = live[i]
            token = sys.mark()
            w = state["next_vertex"]
            state["next_vertex"] += 1
            c1 = state["next_col"]
            added_nonneg = 0
            if e.col is not None:
                c2 = c1 + 1
                state["next_col"] += 2
                # split lengths: x_c1 + x_c2 = x_parent
                link = [0] * ncols
                link[c1] = 1
                link[c2] = 1
                link[2 + e.col] = -1
                if sys.add(link, 0) is not ADDED:
                    raise DegenerateConfig("length bookkeeping row collapsed")
                halves = (
                    _OEdge(e.tail, w, e.m, c1 - 2),
                    _OEdge(w, e.head, e.m, c2 - 2),
                )
                nonneg.extend((c1, c2))
                added_nonneg = 2
            else:
                state["next_col"] += 1
                halves = (
                    _OEdge(e.tail, w, e.m, c1 - 2),
                    _OEdge(w, None, e.m, None),
                )
                nonneg.append(c1)
                added_nonneg = 1
            wpath = paths[e.tail] + ((c1 - 2, e.m),)
            paths[w] = wpath
            ok, nrows = eval_rows(wpath, px, py)
            if ok:
                live[i : i + 1] = list(halves)
                marks.append((w, j))
                if depth + 1 == npoints:
                    _finalize()
                elif sys.box_feasible(nonneg, pairs):
                    place(depth + 1)
                live[i : i + 2] = [e]
                marks.pop()
            sys.rollback(token)
            del paths[w]
            del nonneg[len(nonneg) - added_nonneg :]
            state["next_col"] = c1
            state["next_vertex"] = w

    def _finalize() -> None:
        used = state["next_col"]
        sol, pivots = sys.solve_partial()
        for col in range(used):
            if col not in pivots:
                raise DegenerateConfig("under-determined marked tree")
        live_cols = [e.col for e in live if e.col is not None]
        for col in live_cols:
            v = sol[2 + col]
            if v == 0:
                raise DegenerateConfig("zero edge length")
            if v < 0:
                return
        positions: Dict[int, Point] = {}
        for v, path in paths.items():
            x, y = sol[0], sol[1]
            for col, m in path:
                x += sol[2 + col] * m[0]
                y += sol[2 + col] * m[1]
            positions[v] = (x, y)
        curve_edges: List[Edge] = []
        for e in live:
            w = math.gcd(e.m[0], e.m[1])
            d = (e.m[0] // w, e.m[1] // w)
            if e.col is None:
                curve_edges.append(Edge(e.tail, None, w, d))
            else:
                curve_edges.append(Edge(e.tail, e.head, w, d, sol[2 + e.col]))
        for w_vertex, j in marks:
            curve_edges.append(Edge(w_vertex, None, 0, (0, 0), marking=f"m{j:02d}"))
        curve = TropicalCurve(positions, curve_edges)
        key = canonical_key(curve)
        if key in out:
            return
        out[key] = (curve, multiplicity_genus0(curve))

    place(0)


def oracle_enumerate(
    surface_n: int,
    a: int,
    b: int,
    tangency,
    points: Sequence[Point],
    leaf_cap: int = 11,
) -> Tuple[int, List[Tuple[TropicalCurve, int]]]:
    """Exhaustive count of rigid rational curves through the points.

    Same contract as the placement engine; refuses instances whose total
    leaf count (unbounded ends plus marked points) exceeds ``leaf_cap``
    because the naive tree space explodes.
    """
    degree = degree_of_query(surface_n, a, b, tangency)
    ends = list(degree.ends)
    if len(points) != degree.num_ends - 1:
        if len(points) > degree.num_ends - 1:
            return 0, []
        raise ValueError("non-rigid configuration")
    if degree.num_ends + len(points) > leaf_cap:
        raise ValueError("instance too large for oracle")
    if degree.num_ends == 2:
        return _line_count(ends, points)
    end_momenta = [(d[0] * w, d[1] * w) for d, w in ends]
    class_of: Dict[Tuple[Vec, int], int] = {}
    classes = []
    for e in ends:
        classes.append(class_of.setdefault(e, len(class_of)))
    out: Dict = {}
    seen = set()
    for tree in trivalent_trees(len(ends)):
        sk = orient_tree(tree, end_momenta)
        if sk is None:
            continue
        shape = tree_class_key(tree, classes)
        if shape in seen:
            continue
        seen.add(shape)
        _search_marked_trees(sk, ends, points, out)
    witnesses = list(out.values())
    return sum(m for _, m in witnesses), witnesses
