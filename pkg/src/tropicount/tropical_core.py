"""Tropical curves and their multiplicity rules.

A tropical curve here is a connected metric graph with a piecewise-linear map
to the plane: every edge has an integer weight and a primitive direction, and
the image displacement across a bounded edge of length l is l * weight *
direction.  Marked points are contracted ends (direction (0, 0)).  Genus-1
curves carry a unique cycle; its total metric length is the tropical
j-invariant, and the dimension of the affine span of its image classifies the
cycle: planar (deficiency 0), on a line (deficiency 1, a "flat cycle" made of
two parallel arcs), or a point (deficiency 2, a contracted loop).

The counting rules implemented here:

* genus 0: |det| of the marked-point evaluation system;
* genus 1, deficiency 0: |det| of the evaluation system extended by the
  cycle-length row and the two cycle-closing rows (the lattice index of the
  cycle-closing map is an intrinsic factor of this determinant);
* deficiency 1 and 2: reduction to the genus-0 curve with the cycle removed,
  times an explicit local factor;
* string-type curves: a product formula over the components hanging off the
  moving string.

Everything is exact; no floats.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from tropicount._exact import det_int, lattice_index_rank2
from tropicount.polygon_lattice import LatticePolygon, interior_lattice_points

Vec = Tuple[int, int]
Point = Tuple[Fraction, Fraction]


def _rot90(v: Vec) -> Vec:
    return (-v[1], v[0])


@dataclass(frozen=True)
class Edge:
    """One edge of a tropical curve.

    head is None for unbounded ends.  Contracted edges (markings, loops,
    crossing edges) have direction (0, 0) and weight 0; bounded contracted
    edges still carry a positive length.  A marking is a contracted end with
    a label.
    """

    tail: int
    head: Optional[int]
    weight: int
    direction: Vec
    length: Optional[Fraction] = None
    marking: Optional[str] = None

    @property
    def is_end(self) -> bool:
        return self.head is None

    @property
    def is_marking(self) -> bool:
        return self.marking is not None

    @property
    def is_contracted(self) -> bool:
        return self.direction == (0, 0)

    @property
    def momentum(self) -> Vec:
        return (self.weight * self.direction[0], self.weight * self.direction[1])


class TropicalCurve:
    """Connected tropical curve: vertex positions plus edges."""

    def __init__(self, positions: Dict[int, Point], edges: Sequence[Edge]):
        self.positions: Dict[int, Point] = {
            v: (Fraction(x), Fraction(y)) for v, (x, y) in positions.items()
        }
        self.edges: Tuple[Edge, ...] = tuple(edges)
        for e in self.edges:
            if e.tail not in self.positions:
                raise ValueError(f"edge tail {e.tail} has no position")
            if e.head is not None and e.head not in self.positions:
                raise ValueError(f"edge head {e.head} has no position")
            if not e.is_contracted and math.gcd(*e.direction) != 1:
                raise ValueError(f"direction {e.direction} is not primitive")
        if not self._connected():
            raise ValueError("curve must be connected")

    # -- basic structure ---------------------------------------------------

    def bounded_edges(self) -> List[Tuple[int, Edge]]:
        return [(i, e) for i, e in enumerate(self.edges) if not e.is_end]

    def end_edges(self) -> List[Tuple[int, Edge]]:
        return [(i, e) for i, e in enumerate(self.edges) if e.is_end and not e.is_marking]

    def markings(self) -> List[Tuple[int, Edge]]:
        return [(i, e) for i, e in enumerate(self.edges) if e.is_marking]

    def vertices(self) -> List[int]:
        return sorted(self.positions)

    def _adjacency(self) -> Dict[int, List[Tuple[int, Edge]]]:
        adj: Dict[int, List[Tuple[int, Edge]]] = {v: [] for v in self.positions}
        for i, e in enumerate(self.edges):
            adj[e.tail].append((i, e))
            if e.head is not None:
                adj[e.head].append((i, e))
        return adj

    def _connected(self) -> bool:
        verts = set(self.positions)
        if not verts:
            return False
        seen = set()
        stack = [next(iter(verts))]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            for e in self.edges:
                if e.tail == v and e.head is not None and e.head not in seen:
                    stack.append(e.head)
                if e.head == v and e.tail not in seen:
                    stack.append(e.tail)
        return seen == verts

    @property
    def genus(self) -> int:
        """First Betti number of the graph (0 or 1 throughout this package)."""
        nb = len([e for e in self.edges if not e.is_end])
        return nb - len(self.positions) + 1

    def valence(self, v: int) -> int:
        """Edge count at v; loops count twice, markings and ends count once."""
        total = 0
        for e in self.edges:
            if e.tail == v:
                total += 1
            if e.head == v:
                total += 1
        return total

    # -- cycle -------------------------------------------------------------

    def cycle(self) -> List[Tuple[int, int]]:
        """The unique cycle of a genus-1 curve as (edge index, sign) pairs.

        The sign is +1 when the edge is traversed tail -> head.  Obtained by
        pruning leaves until only the cycle remains.
        """
        if self.genus != 1:
            raise ValueError("cycle requires a genus-1 curve")
        deg: Dict[int, int] = {v: 0 for v in self.positions}
        alive = set()
        for i, e in enumerate(self.edges):
            if e.is_end or e.tail == e.head:
                continue
            alive.add(i)
            deg[e.tail] += 1
            deg[e.head] += 1
        for i, e in enumerate(self.edges):
            if not e.is_end and e.tail == e.head:
                return [(i, 1)]  # a loop is the whole cycle
        changed = True
        while changed:
            changed = False
            for i in list(alive):
                e = self.edges[i]
                if deg[e.tail] == 1 or deg[e.head] == 1:
                    alive.discard(i)
                    deg[e.tail] -= 1
                    deg[e.head] -= 1
                    changed = True
        if not alive:
            raise ValueError("no cycle found in genus-1 curve")
        # order the surviving edges into a closed walk
        start = self.edges[next(iter(alive))].tail
        walk: List[Tuple[int, int]] = []
        v = start
        used = set()
        while True:
            step = None
            for i in alive:
                if i in used:
                    continue
                e = self.edges[i]
                if e.tail == v:
                    step = (i, 1, e.head)
                    break
                if e.head == v:
                    step = (i, -1, e.tail)
                    break
            if step is None:
                raise ValueError("cycle edges do not close up")
            walk.append((step[0], step[1]))
            used.add(step[0])
            v = step[2]
            if v == start:
                break
        if used != alive:
            raise ValueError("cycle edges do not form a single loop")
        return walk

    @property
    def j_length(self) -> Fraction:
        """Total metric length of the cycle (the tropical j-invariant)."""
        return sum((self.edges[i].length for i, _ in self.cycle()), Fraction(0))

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        def frac(x: Fraction) -> str:
            return f"{x.numerator}/{x.denominator}"

        return {
            "vertices": {
                str(v): [frac(p[0]), frac(p[1])] for v, p in sorted(self.positions.items())
            },
            "edges": [
                {
                    "tail": e.tail,
                    "head": e.head,
                    "weight": e.weight,
                    "direction": list(e.direction),
                    "length": None if e.length is None else frac(e.length),
                    "marking": e.marking,
                }
                for e in self.edges
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "TropicalCurve":
        def unfrac(s) -> Fraction:
            return Fraction(s) if isinstance(s, str) else Fraction(s)

        positions = {
            int(v): (unfrac(p[0]), unfrac(p[1])) for v, p in data["vertices"].items()
        }
        edges = [
            Edge(
                tail=e["tail"],
                head=e["head"],
                weight=e["weight"],
                direction=(e["direction"][0], e["direction"][1]),
                length=None if e.get("length") is None else unfrac(e["length"]),
                marking=e.get("marking"),
            )
            for e in data["edges"]
        ]
        return TropicalCurve(positions, edges)


# ---------------------------------------------------------------------------
# balancing and deficiency


def balancing_failures(c: TropicalCurve) -> List[int]:
    """Vertices where balancing or edge geometry fails."""
    bad = []
    for v in c.vertices():
        sx = sy = 0
        for e in c.edges:
            mx, my = e.momentum
            if e.tail == v:
                sx += mx
                sy += my
            if e.head == v:
                sx -= mx
                sy -= my
        if (sx, sy) != (0, 0):
            bad.append(v)
            continue
    for e in c.edges:
        if e.is_end:
            continue
        if e.length is None or e.length <= 0:
            bad.append(e.tail)
            continue
        tx, ty = c.positions[e.tail]
        hx, hy = c.positions[e.head]
        if (hx - tx, hy - ty) != (
            e.length * e.weight * e.direction[0],
            e.length * e.weight * e.direction[1],
        ):
            bad.append(e.tail)
    return sorted(set(bad))


def check_balancing(c: TropicalCurve) -> bool:
    """True iff every vertex balances and edge geometry is consistent."""
    return not balancing_failures(c)


def deficiency(c: TropicalCurve) -> int:
    """2 minus the dimension of the affine span of the cycle image."""
    if c.genus != 1:
        raise ValueError("deficiency requires a genus-1 curve")
    cyc = c.cycle()
    pts = []
    for i, _ in cyc:
        e = c.edges[i]
        pts.append(c.positions[e.tail])
        if e.head is not None:
            pts.append(c.positions[e.head])
    base = pts[0]
    dirs = [(p[0] - base[0], p[1] - base[1]) for p in pts[1:]]
    dirs = [d for d in dirs if d != (0, 0)]
    if not dirs:
        return 2
    d0 = dirs[0]
    for d in dirs[1:]:
        if d0[0] * d[1] - d0[1] * d[0] != 0:
            return 0
    return 1


# ---------------------------------------------------------------------------
# combinatorial cells and their weights


@dataclass(frozen=True)
class CombinatorialCell:
    """Combinatorial type of a genus-1 curve, with the data its weight needs.

    cycle_map holds the momentum columns (weight * direction) of the cycle
    edges; for deficiency 1 the arc weights and whether the cycle carries a
    marked point; for deficiency 2 the local star of the loop vertex.
    """

    deficiency: int
    cycle_map: Tuple[Vec, ...] = ()
    arc_weights: Optional[Tuple[int, int]] = None
    marked_cycle: bool = False
    # deficiency 2: momenta of the non-loop edges at the loop vertex
    loop_star: Tuple[Vec, ...] = ()

    @staticmethod
    def of_curve(c: TropicalCurve) -> "CombinatorialCell":
        d = deficiency(c)
        cyc = c.cycle()
        cyc_idx = {i for i, _ in cyc}
        cyc_vertices = set()
        for i, _ in cyc:
            cyc_vertices.add(c.edges[i].tail)
            if c.edges[i].head is not None:
                cyc_vertices.add(c.edges[i].head)
        marked = any(
            e.is_marking and e.tail in cyc_vertices for e in c.edges
        )
        cols = tuple(c.edges[i].momentum for i, _ in cyc)
        if d == 1:
            # split the cycle walk into its two arcs at the branch vertices
            # (cycle vertices carrying a real non-cycle edge); marks may
            # subdivide an arc without changing its weight
            cyc_edge_idx = {i for i, _ in cyc}
            branch = set()
            for v in cyc_vertices:
                for j, e in enumerate(c.edges):
                    if j in cyc_edge_idx or e.is_contracted:
                        continue
                    if e.tail == v or e.head == v:
                        branch.add(v)
            walk = list(cyc)
            for k, (i, sign) in enumerate(walk):
                e = c.edges[i]
                start = e.tail if sign == 1 else e.head
                if start in branch:
                    walk = walk[k:] + walk[:k]
                    break
            run_weights: List[int] = []
            current: Optional[int] = None
            for i, sign in walk:
                e = c.edges[i]
                start = e.tail if sign == 1 else e.head
                if start in branch:
                    current = None
                if not e.is_contracted:
                    if current is None:
                        run_weights.append(e.weight)
                        current = e.weight
                    elif current != e.weight:
                        raise ValueError("arc weight changes along a run")
            if len(run_weights) != 2:
                raise ValueError("flat cycle must consist of two arcs")
            ws = tuple(sorted(run_weights, reverse=True))
            return CombinatorialCell(1, cols, (ws[0], ws[1]), marked)
        if d == 2:
            (loop_i, _), = [(i, s) for i, s in cyc][:1]
            v = c.edges[loop_i].tail
            star = tuple(
                e.momentum
                for e in c.edges
                if (e.tail == v or e.head == v) and not e.is_contracted
            )
            return CombinatorialCell(2, cols, None, marked, star)
        return CombinatorialCell(0, cols, None, marked)


def dual_triangle(momenta: Sequence[Vec]) -> Optional[LatticePolygon]:
    """Dual triangle of a trivalent vertex star, or None when degenerate."""
    if len(momenta) != 3:
        return None
    r = [_rot90(m) for m in momenta]
    pts = [(0, 0), r[0], (r[0][0] + r[1][0], r[0][1] + r[1][1])]
    area2 = r[0][0] * r[1][1] - r[0][1] * r[1][0]
    if area2 == 0:
        return None
    if area2 < 0:
        pts = [pts[0], pts[2], pts[1]]
    return LatticePolygon(pts)


def cell_weight(t: CombinatorialCell) -> Fraction:
    """Weight of a maximal genus-1 cell, by deficiency.

    Deficiency 0: lattice index in Z^2 of the image of the cycle-closing map.
    Deficiency 1: gcd of the arc weights, halved when they coincide and no
    marked point lies on the cycle.  Deficiency 2: interior count of the dual
    triangle (loop at a 5-valent vertex), (L-1)/2 for a loop on an edge of
    weight L, zero otherwise.
    """
    if t.deficiency == 0:
        return Fraction(abs(lattice_index_rank2(t.cycle_map)))
    if t.deficiency == 1:
        w1, w2 = t.arc_weights
        g = math.gcd(w1, w2)
        if w1 != w2 or t.marked_cycle:
            return Fraction(g)
        return Fraction(g, 2)
    star = t.loop_star
    if len(star) == 3:
        tri = dual_triangle(star)
        if tri is None:
            return Fraction(0)
        return Fraction(interior_lattice_points(tri))
    if len(star) == 2:
        m1, m2 = star
        if m1[0] * m2[1] - m1[1] * m2[0] != 0:
            return Fraction(0)  # non-parallel pair cannot balance anyway
        length = math.gcd(*m1)
        return Fraction(length - 1, 2)
    return Fraction(0)


# ---------------------------------------------------------------------------
# evaluation systems and determinant multiplicities


def _root_paths(c: TropicalCurve) -> Tuple[int, Dict[int, List[Tuple[int, int]]]]:
    """Spanning-tree paths (edge index, sign) from a root to every vertex.

    Signs are +1 when the edge is traversed tail -> head.  Cycle edges left
    out of the spanning tree simply do not appear in any path.
    """
    root = min(c.positions)
    paths: Dict[int, List[Tuple[int, int]]] = {root: []}
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for i, e in enumerate(c.edges):
                if e.is_end or e.tail == e.head:
                    continue
                if e.tail == v and e.head not in paths:
                    paths[e.head] = paths[v] + [(i, 1)]
                    nxt.append(e.head)
                elif e.head == v and e.tail not in paths:
                    paths[e.tail] = paths[v] + [(i, -1)]
                    nxt.append(e.tail)
        frontier = nxt
    return root, paths


def _evaluation_rows(
    c: TropicalCurve, columns: List[int]
) -> List[List[int]]:
    """Two rows per marking: the position of its vertex in the unknowns.

    Unknowns: root x, root y, then one length per edge index in `columns`.
    """
    _, paths = _root_paths(c)
    col_of = {idx: 2 + k for k, idx in enumerate(columns)}
    rows = []
    for _, mark in sorted(
        ((e.marking, (i, e)) for i, e in c.markings()), key=lambda t: t[0]
    ):
        i, e = mark
        v = e.tail
        if v not in paths:
            raise ValueError("marking on a vertex outside the spanning tree")
        rowx = [0] * (2 + len(columns))
        rowy = [0] * (2 + len(columns))
        rowx[0] = 1
        rowy[1] = 1
        for idx, sign in paths[v]:
            ed = c.edges[idx]
            if idx in col_of:
                rowx[col_of[idx]] += sign * ed.weight * ed.direction[0]
                rowy[col_of[idx]] += sign * ed.weight * ed.direction[1]
        rows.append(rowx)
        rows.append(rowy)
    return rows


def multiplicity_genus0(c: TropicalCurve) -> int:
    """|det| of the marked-point evaluation system of a rational curve.

    Requires squareness: twice the number of marked points must equal
    2 + (number of bounded edges); otherwise the configuration is not rigid.
    """
    if c.genus != 0:
        raise ValueError("multiplicity_genus0 requires a genus-0 curve")
    columns = [i for i, _ in c.bounded_edges()]
    rows = _evaluation_rows(c, columns)
    if len(rows) != 2 + len(columns):
        raise ValueError("non-rigid configuration")
    return abs(det_int(rows))


def multiplicity_genus1_def0(c: TropicalCurve) -> int:
    """Multiplicity of a deficiency-0 genus-1 curve.

    |det| of the square system [evaluation rows; cycle-length row; two
    cycle-closing rows] over [root, bounded edge lengths].  The lattice index
    of the cycle-closing map (the deficiency-0 cell weight) is an intrinsic
    factor of this determinant, so the result is the full multiplicity.
    """
    if c.genus != 1:
        raise ValueError("requires a genus-1 curve")
    if deficiency(c) != 0:
        raise ValueError("requires a deficiency-0 cycle")
    columns = [i for i, _ in c.bounded_edges()]
    col_of = {idx: 2 + k for k, idx in enumerate(columns)}
    rows = _evaluation_rows(c, columns)
    jrow = [0] * (2 + len(columns))
    closex = [0] * (2 + len(columns))
    closey = [0] * (2 + len(columns))
    for i, sign in c.cycle():
        e = c.edges[i]
        jrow[col_of[i]] += 1
        closex[col_of[i]] += sign * e.weight * e.direction[0]
        closey[col_of[i]] += sign * e.weight * e.direction[1]
    rows += [jrow, closex, closey]
    if len(rows) != 2 + len(columns):
        raise ValueError("non-rigid configuration")
    return abs(det_int(rows))


# ---------------------------------------------------------------------------
# deficiency 1: flat cycles


def _flat_cycle_parts(c: TropicalCurve):
    """Arcs, branch vertices and flanking edges of a flat cycle.

    Returns (arc indices, P, Q, flank edge indices) where P, Q are the two
    trivalent branch vertices of the cycle and the flanks are the collinear
    edges continuing beyond them.
    """
    cyc = c.cycle()
    arcs = [i for i, _ in cyc if not c.edges[i].is_contracted]
    if len(arcs) != 2:
        raise ValueError("flat cycle must consist of two parallel arcs")
    e1, e2 = c.edges[arcs[0]], c.edges[arcs[1]]
    ends1 = {e1.tail, e1.head}
    ends2 = {e2.tail, e2.head}
    if ends1 != ends2:
        raise ValueError("flat cycle arcs must share both endpoints")
    p, q = sorted(ends1)
    flanks = []
    for v in (p, q):
        for i, e in enumerate(c.edges):
            if i in arcs or e.is_contracted:
                continue
            if e.tail == v or e.head == v:
                flanks.append(i)
    return arcs, p, q, flanks


def _has_marked_cycle(c: TropicalCurve) -> bool:
    """True when a marking attaches at any cycle vertex (branch points too)."""
    cyc_vertices = set()
    for i, _ in c.cycle():
        cyc_vertices.add(c.edges[i].tail)
        if c.edges[i].head is not None:
            cyc_vertices.add(c.edges[i].head)
    return any(e.is_marking and e.tail in cyc_vertices for e in c.edges)


def _contract_flat_cycle(c: TropicalCurve) -> TropicalCurve:
    """Rational curve with the cycle and both flanking edges merged into one.

    The branch vertices would survive as straight 2-valent joints and alias
    the flank length columns, so the merged edge runs between the far ends
    of the flanks; an unbounded flank makes the merged edge unbounded.  The
    merged edge is appended last.
    """
    arcs, p, q, flanks = _flat_cycle_parts(c)
    if len(flanks) != 2:
        raise ValueError("flat cycle must have exactly two flanking edges")
    a0 = c.edges[arcs[0]]
    a1 = c.edges[arcs[1]]
    w = a0.weight + a1.weight

    def far(v: int, i: int) -> Optional[int]:
        e = c.edges[i]
        return e.head if e.tail == v else e.tail

    fp = far(p, flanks[0])
    fq = far(q, flanks[1])
    if fp is None and fq is None:
        raise ValueError("flat cycle with two unbounded flanks")
    # direction of the line, oriented p -> q
    d = a0.direction if a0.tail == p else (-a0.direction[0], -a0.direction[1])
    drop = set(arcs) | set(flanks)
    edges = [e for i, e in enumerate(c.edges) if i not in drop]
    positions = {v: c.positions[v] for v in c.positions if v not in (p, q)}
    if fp is None:
        edges.append(Edge(fq, None, w, (-d[0], -d[1])))
    elif fq is None:
        edges.append(Edge(fp, None, w, d))
    else:
        sx, sy = c.positions[fp]
        tx, ty = c.positions[fq]
        span = tx - sx if d[0] else ty - sy
        length = Fraction(span, d[0] if d[0] else d[1]) / w
        edges.append(Edge(fp, fq, w, d, length))
    return TropicalCurve(positions, edges)


def multiplicity_flat_cycle(c: TropicalCurve) -> int:
    """Multiplicity of a genus-1 curve whose cycle is flat.

    2 (w' + w'') Mult' when the arc weights differ, (w' + w'') Mult' when
    they agree, where Mult' is the multiplicity of the contracted curve.
    A marked point on the cycle is outside this rule.
    """
    if deficiency(c) != 1:
        raise ValueError("requires a flat cycle")
    if _has_marked_cycle(c):
        raise ValueError("unsupported: marked cycle")
    arcs, _, _, _ = _flat_cycle_parts(c)
    w1 = c.edges[arcs[0]].weight
    w2 = c.edges[arcs[1]].weight
    base = multiplicity_genus0(_contract_flat_cycle(c))
    factor = 2 if w1 != w2 else 1
    return factor * (w1 + w2) * base


def flat_cycle_raw_multiplicity(c: TropicalCurve) -> int:
    """Cell weight times |det| of the flat-cycle slice system.

    Independent of multiplicity_flat_cycle: parametrizes the well-spaced
    slice directly (tied flanking lengths, one cycle coordinate with the arc
    lengths in ratio w'' : w') and computes the determinant of [evaluation
    rows; cycle-length row].  Used to cross-check the product formula.
    """
    if deficiency(c) != 1:
        raise ValueError("requires a flat cycle")
    if _has_marked_cycle(c):
        raise ValueError("unsupported: marked cycle")
    arcs, p, q, flanks = _flat_cycle_parts(c)
    if len(flanks) != 2:
        raise ValueError("flat cycle must have exactly two flanking edges")
    if any(c.edges[i].is_end for i in flanks):
        raise ValueError("flat cycle flanks must be bounded")
    w1 = c.edges[arcs[0]].weight
    w2 = c.edges[arcs[1]].weight
    g = math.gcd(w1, w2)
    m1, m2 = w1 // g, w2 // g
    other = [
        i
        for i, e in c.bounded_edges()
        if i not in arcs and i not in flanks
    ]
    # unknowns: root (2) | other lengths | shared flank length | cycle coord t
    columns = other + [flanks[0]] + [arcs[0]]
    col_of = {idx: 2 + k for k, idx in enumerate(columns)}
    ncols = 2 + len(columns)
    _, paths = _root_paths(c)
    flank_col = col_of[flanks[0]]
    t_col = col_of[arcs[0]]

    def row_pair(v: int) -> Tuple[List[int], List[int]]:
        rowx = [0] * ncols
        rowy = [0] * ncols
        rowx[0] = 1
        rowy[1] = 1
        for idx, sign in paths[v]:
            e = c.edges[idx]
            mx, my = sign * e.weight * e.direction[0], sign * e.weight * e.direction[1]
            if idx in (flanks[0], flanks[1]):
                rowx[flank_col] += mx
                rowy[flank_col] += my
            elif idx in arcs:
                # arc lengths are m2*t (weight w1 arc) and m1*t (weight w2 arc)
                scale = m2 if idx == arcs[0] else m1
                rowx[t_col] += scale * mx
                rowy[t_col] += scale * my
            else:
                rowx[col_of[idx]] += mx
                rowy[col_of[idx]] += my
        return rowx, rowy

    rows = []
    for _, (i, e) in sorted(
        ((e.marking, (i, e)) for i, e in c.markings()), key=lambda t: t[0]
    ):
        rx, ry = row_pair(e.tail)
        rows.append(rx)
        rows.append(ry)
    jrow = [0] * ncols
    jrow[t_col] = m1 + m2
    rows.append(jrow)
    if len(rows) != ncols:
        raise ValueError("non-rigid configuration")
    cell = CombinatorialCell.of_curve(c)
    weight = cell_weight(cell)
    value = weight * abs(det_int(rows))
    if value.denominator != 1:
        raise AssertionError("flat-cycle multiplicity must be an integer")
    return int(value)


# ---------------------------------------------------------------------------
# deficiency 2: contracted loops


def _loop_vertex(c: TropicalCurve) -> Tuple[int, int]:
    """(edge index of the loop, vertex) for a contracted-loop curve."""
    for i, e in enumerate(c.edges):
        if not e.is_end and e.tail == e.head:
            if not e.is_contracted:
                raise ValueError("loops must be contracted")
            return i, e.tail
    raise ValueError("no contracted loop found")


def _remove_loop(c: TropicalCurve) -> TropicalCurve:
    """Genus-0 curve obtained by deleting the loop.

    A 4-valent loop vertex (loop plus two parallel edges) is erased by
    splicing the parallel edges into one; marks attached at the loop vertex
    stay on the spliced vertex.
    """
    loop_i, v = _loop_vertex(c)
    edges = [e for i, e in enumerate(c.edges) if i != loop_i]
    real = [
        e
        for e in edges
        if (e.tail == v or e.head == v) and not e.is_contracted
    ]
    if len(real) == 3:
        return TropicalCurve(dict(c.positions), edges)
    if len(real) != 2:
        raise ValueError("loop vertex must be 4- or 5-valent")
    e1, e2 = real
    has_marks = any(e.is_marking and e.tail == v for e in edges)
    if has_marks:
        # keep the vertex; it stays 2-valent plus markings, which the
        # evaluation system handles (it adds one length unknown and the
        # marking rows still see the same geometry)
        return TropicalCurve(dict(c.positions), edges)
    # orient both away from v and splice
    def away(e: Edge) -> Tuple[int, Vec, Optional[Fraction]]:
        if e.tail == v:
            return e.head, e.direction, e.length
        return e.tail, (-e.direction[0], -e.direction[1]), e.length

    (v1, d1, l1), (v2, d2, l2) = away(e1), away(e2)
    if e1.weight != e2.weight:
        raise ValueError("parallel edges at a loop vertex must share weight")
    edges = [e for e in edges if e not in (e1, e2)]
    positions = {u: p for u, p in c.positions.items() if u != v}
    if v1 is None and v2 is None:
        raise ValueError("loop on a doubly unbounded line is not supported")
    if v2 is None:
        v1, d1, l1, v2, d2, l2 = v2, d2, l2, v1, d1, l1
    if v1 is None:
        # an end: the spliced edge is an end from v2 in direction d2 reversed
        edges.append(Edge(v2, None, e1.weight, (-d2[0], -d2[1])))
    else:
        edges.append(Edge(v1, v2, e1.weight, (-d1[0], -d1[1]), l1 + l2))
    return TropicalCurve(positions, edges)


def multiplicity_contracted_loop(c: TropicalCurve) -> int:
    """Multiplicity of a genus-1 curve whose cycle is a contracted loop.

    m times the multiplicity of the loopless curve, where m counts interior
    lattice points of the dual triangle (loop at a 5-valent vertex) or of
    the dual edge (loop on an edge: weight minus one).
    """
    if deficiency(c) != 2:
        raise ValueError("requires a contracted loop")
    cell = CombinatorialCell.of_curve(c)
    star = cell.loop_star
    if len(star) == 3:
        tri = dual_triangle(star)
        m = 0 if tri is None else interior_lattice_points(tri)
    elif len(star) == 2:
        m = math.gcd(*star[0]) - 1
    else:
        return 0
    if m == 0:
        return 0
    return m * multiplicity_genus0(_remove_loop(c))


def contracted_loop_raw_multiplicity(c: TropicalCurve) -> int:
    """Cell weight times |det| of the loop slice system.

    The slice ties the two flanking halves of an edge loop (one shared
    length); the cycle-length row meets only the loop column.  Cross-check
    for multiplicity_contracted_loop.
    """
    if deficiency(c) != 2:
        raise ValueError("requires a contracted loop")
    loop_i, v = _loop_vertex(c)
    cell = CombinatorialCell.of_curve(c)
    star = cell.loop_star
    flank_pair: Optional[Tuple[int, int]] = None
    if len(star) == 2:
        flank_idx = [
            i
            for i, e in enumerate(c.edges)
            if (e.tail == v or e.head == v) and not e.is_contracted and not e.is_end
        ]
        if len(flank_idx) == 2:
            flank_pair = (flank_idx[0], flank_idx[1])
    columns: List[int] = []
    for i, _e in c.bounded_edges():
        if flank_pair and i == flank_pair[1]:
            continue
        columns.append(i)
    col_of = {idx: 2 + k for k, idx in enumerate(columns)}
    if flank_pair:
        col_of[flank_pair[1]] = col_of[flank_pair[0]]
    ncols = 2 + len(columns)
    _, paths = _root_paths(c)
    rows = []
    for _, (i, e) in sorted(
        ((e.marking, (i, e)) for i, e in c.markings()), key=lambda t: t[0]
    ):
        rowx = [0] * ncols
        rowy = [0] * ncols
        rowx[0] = 1
        rowy[1] = 1
        for idx, sign in paths[e.tail]:
            ed = c.edges[idx]
            rowx[col_of[idx]] += sign * ed.weight * ed.direction[0]
            rowy[col_of[idx]] += sign * ed.weight * ed.direction[1]
        rows.append(rowx)
        rows.append(rowy)
    jrow = [0] * ncols
    jrow[col_of[loop_i]] = 1
    rows.append(jrow)
    if len(rows) != ncols:
        raise ValueError("non-rigid configuration")
    value = cell_weight(cell) * abs(det_int(rows))
    if value.denominator != 1:
        raise AssertionError("loop multiplicity must be an integer")
    return int(value)


# ---------------------------------------------------------------------------
# well-spacedness


def departure_distances(c: TropicalCurve) -> List[Fraction]:
    """Lattice distances from a flat cycle to the points leaving its line.

    Walks the connected subgraph of edges mapping into the cycle's line,
    starting at the two branch vertices, and records the image lattice
    distance at every vertex where a non-collinear edge emanates.  Markings
    do not count as departures.
    """
    if deficiency(c) != 1:
        raise ValueError("departure distances require a flat cycle")
    arcs, p, q, _ = _flat_cycle_parts(c)
    a0 = c.edges[arcs[0]]
    line_dir = a0.direction

    def collinear(e: Edge) -> bool:
        return (
            not e.is_contracted
            and e.direction[0] * line_dir[1] - e.direction[1] * line_dir[0] == 0
        )

    dists: List[Fraction] = []
    seen = {p, q}
    frontier: List[Tuple[int, Fraction]] = [(p, Fraction(0)), (q, Fraction(0))]
    while frontier:
        v, d = frontier.pop()
        departs = False
        for i, e in enumerate(c.edges):
            if i in arcs or e.is_contracted:
                continue
            if e.tail != v and e.head != v:
                continue
            if collinear(e):
                if e.is_end:
                    continue  # the curve continues along the line forever
                u = e.head if e.tail == v else e.tail
                if u not in seen:
                    seen.add(u)
                    step = e.length * e.weight  # image lattice length
                    frontier.append((u, d + step))
            else:
                departs = True
        if departs:
            dists.append(d)
    return sorted(dists)


def is_well_spaced(c: TropicalCurve) -> bool:
    """Speyer realizability for genus-1 curves.

    Planar cycles are never superabundant, so they pass.  For a flat cycle
    the minimum departure distance must occur at least twice.  Contracted
    loops sit at a single image point; every adjacent edge departs there, so
    they pass whenever the loop vertex has at least two other edges (always).
    """
    d = deficiency(c)
    if d == 0:
        return True
    if d == 2:
        return True
    dists = departure_distances(c)
    if len(dists) < 2:
        return False
    return dists.count(dists[0]) >= 2


# ---------------------------------------------------------------------------
# strings


@dataclass(frozen=True)
class String:
    """A marked-point-free subgraph that can move: a path or the cycle.

    edge_indices lists the edges in order; for a path the first and last are
    unbounded ends, for the cycle (is_cycle True) the sequence closes up.
    """

    edge_indices: Tuple[int, ...]
    is_cycle: bool


def find_strings(c: TropicalCurve) -> List[String]:
    """All maximal marked-free strings of the curve.

    A vertex carrying a marking blocks every string through it.  Path
    strings connect two distinct unmarked unbounded ends through unblocked
    vertices; the cycle of a genus-1 curve is a string when none of its
    vertices carries a marking.
    """
    blocked = {e.tail for e in c.edges if e.is_marking}
    strings: List[String] = []
    if c.genus == 1:
        cyc = c.cycle()
        verts = set()
        for i, _ in cyc:
            verts.add(c.edges[i].tail)
            if c.edges[i].head is not None:
                verts.add(c.edges[i].head)
        if not (verts & blocked):
            strings.append(String(tuple(i for i, _ in cyc), True))
    free_ends = [
        (i, e) for i, e in c.end_edges() if e.tail not in blocked
    ]
    adj: Dict[int, List[int]] = {v: [] for v in c.positions}
    for i, e in enumerate(c.edges):
        if e.is_end or e.is_marking:
            continue
        adj[e.tail].append(i)
        if e.head is not None and e.head != e.tail:
            adj[e.head].append(i)

    def paths_between(src: int, dst: int) -> Iterable[Tuple[int, ...]]:
        start_v = c.edges[src].tail
        goal_v = c.edges[dst].tail
        stack: List[Tuple[int, Tuple[int, ...], frozenset]] = [
            (start_v, (), frozenset([start_v]))
        ]
        while stack:
            v, used, seen = stack.pop()
            if v == goal_v:
                yield used
                continue
            for i in adj[v]:
                if i in used:
                    continue
                e = c.edges[i]
                u = e.head if e.tail == v else e.tail
                if u is None or u in blocked or u in seen:
                    continue
                stack.append((u, used + (i,), seen | {u}))

    for (i, ei), (j, ej) in itertools.combinations(free_ends, 2):
        if ei.tail == ej.tail:
            strings.append(String((i, j), False))
            continue
        for mid in paths_between(i, j):
            strings.append(String((i,) + mid + (j,), False))
    return strings


# ---------------------------------------------------------------------------
# string-type decomposition and multiplicity


@dataclass
class StringDecomposition:
    """A genus-1 curve split along its moving string.

    kind 2: the cycle runs through the string and the doubly attached
    component, whose two connecting edges have weights w0 = (w0a, w0b).
    kind 3: the cycle is flat and sits on the single connecting edge of the
    distinguished component; w0 are the arc weights of that bulge.
    components[0] is the distinguished component; every component is
    returned as a relative curve whose connecting edges became weighted
    unbounded ends, paired with the weights of those ends.  For abstract
    decompositions the curves may be None when multiplicities are supplied.
    """

    kind: int
    w0: Tuple[int, int]
    components: List[Tuple[Optional[TropicalCurve], Tuple[int, ...]]]
    string_edges: Tuple[int, ...] = ()
    multiplicities: Optional[Tuple[int, ...]] = None


def _component_split(
    c: TropicalCurve, string_vertices: set, string_edges: set
) -> List[Tuple[set, List[int]]]:
    """Connected components after removing the string, with connector edges."""
    comp_of: Dict[int, int] = {}
    comps: List[set] = []
    for v in c.positions:
        if v in string_vertices or v in comp_of:
            continue
        comp = set()
        stack = [v]
        while stack:
            u = stack.pop()
            if u in comp or u in string_vertices:
                continue
            comp.add(u)
            comp_of[u] = len(comps)
            for i, e in enumerate(c.edges):
                if i in string_edges or e.is_end:
                    continue
                if e.tail == u and e.head is not None and e.head not in string_vertices:
                    stack.append(e.head)
                if e.head == u and e.tail not in string_vertices:
                    stack.append(e.tail)
        comps.append(comp)
    out = []
    for k, comp in enumerate(comps):
        connectors = [
            i
            for i, e in enumerate(c.edges)
            if i not in string_edges
            and not e.is_end
            and (
                (e.tail in comp and e.head in string_vertices)
                or (e.head in comp and e.tail in string_vertices)
            )
        ]
        out.append((comp, connectors))
    return out


def _extract_component(
    c: TropicalCurve, comp: set, connectors: List[int]
) -> Tuple[TropicalCurve, Tuple[int, ...]]:
    """Component as a standalone curve; connectors become weighted ends."""
    weights = []
    edges: List[Edge] = []
    for i, e in enumerate(c.edges):
        if i in connectors:
            # orient away from the component vertex
            if e.tail in comp:
                edges.append(Edge(e.tail, None, e.weight, e.direction))
            else:
                edges.append(
                    Edge(e.head, None, e.weight, (-e.direction[0], -e.direction[1]))
                )
            weights.append(e.weight)
            continue
        if e.tail in comp and (e.head is None or e.head in comp):
            edges.append(e)
    positions = {v: c.positions[v] for v in comp}
    return TropicalCurve(positions, edges), tuple(sorted(weights, reverse=True))


def _surface_profile(c: TropicalCurve) -> Tuple[int, int, int]:
    """(n, a, b) read off the unbounded ends of a Hirzebruch-shaped curve.

    Up ends must share one primitive direction (n, 1) and have weight 1,
    down ends must be weight-1 (0, -1); b is the total weight going east.
    """
    ups = []
    downs = []
    b = 0
    for _, e in c.end_edges():
        dx, dy = e.direction
        if dy == 1:
            ups.append(e)
        elif (dx, dy) == (0, -1):
            downs.append(e)
        elif (dx, dy) == (1, 0):
            b += e.weight
        elif (dx, dy) != (-1, 0):
            raise ValueError("not a string-type curve")
    if not ups or not downs or len(ups) != len(downs):
        raise ValueError("not a string-type curve")
    n = ups[0].direction[0]
    if n < 0 or any(e.direction != (n, 1) or e.weight != 1 for e in ups):
        raise ValueError("not a string-type curve")
    if any(e.weight != 1 for e in downs):
        raise ValueError("not a string-type curve")
    return n, len(downs), b


def _component_degrees(curve: TropicalCurve) -> Tuple[int, int]:
    """(a_j, b_j) of a split-off component, counting its connector ends."""
    a_j = 0
    b_j = 0
    for _, e in curve.end_edges():
        if e.direction == (0, -1):
            a_j += 1
        elif e.direction == (1, 0):
            b_j += e.weight
    return a_j, b_j


def _assemble(
    c: TropicalCurve,
    comps: List[Tuple[set, List[int]]],
    first: int,
    profile: Tuple[int, int, int],
) -> Optional[List[Tuple[TropicalCurve, Tuple[int, ...]]]]:
    """Extract components with the distinguished one first; None if the
    bidegree bookkeeping does not balance against the string."""
    n, a, b = profile
    order = [first] + [k for k in range(len(comps)) if k != first]
    out = []
    a_total = 0
    b_total = 0
    for k in order:
        comp, conn = comps[k]
        curve, weights = _extract_component(c, comp, conn)
        a_j, b_j = _component_degrees(curve)
        a_total += a_j
        b_total += b_j
        out.append((curve, weights))
    if a_total != a - 1 or b_total != b + n:
        return None
    return out


def _string_closure(c: TropicalCurve, edge_indices: Sequence[int]) -> set:
    vertices = set()
    for i in edge_indices:
        e = c.edges[i]
        vertices.add(e.tail)
        if e.head is not None:
            vertices.add(e.head)
    return vertices


def decompose_string_curve(c: TropicalCurve) -> StringDecomposition:
    """Split a large-j genus-1 curve along its moving string.

    kind 2 (planar cycle): the string is the unique unmarked end-to-end
    path; the cycle threads it and the doubly attached component.
    kind 3 (flat cycle): the bulge sits on a connecting edge and the string
    carries exactly one marked point, so it is found by pairing the spare
    down end with the spare up end on the flattened curve.  All connecting
    edges must be horizontal; string edge indices refer to the input curve
    for kind 2 but to the flattened curve for kind 3.
    """
    if c.genus != 1:
        raise ValueError("not a string-type curve")
    profile = _surface_profile(c)
    defic = deficiency(c)

    if defic == 1:
        return _decompose_flat(c, profile)
    if defic != 0:
        raise ValueError("not a string-type curve")

    cyc_edges = {i for i, _ in c.cycle()}
    results = []
    for s in find_strings(c):
        if s.is_cycle:
            continue
        dec = _try_kind2(c, s, cyc_edges, profile)
        if dec is not None:
            results.append(dec)
    if len(results) != 1:
        raise ValueError("not a string-type curve")
    return results[0]


def _try_kind2(
    c: TropicalCurve,
    s: String,
    cyc_edges: set,
    profile: Tuple[int, int, int],
) -> Optional[StringDecomposition]:
    string_edges = set(s.edge_indices)
    string_vertices = _string_closure(c, s.edge_indices)
    # a candidate through the cycle strands some edge between its vertices
    for i, e in c.bounded_edges():
        if i not in string_edges and e.tail in string_vertices and e.head in string_vertices:
            return None
    comps = _component_split(c, string_vertices, string_edges)
    doubly = [k for k, (_, conn) in enumerate(comps) if len(conn) == 2]
    if len(doubly) != 1 or any(len(conn) not in (1, 2) for _, conn in comps):
        return None
    for _, conn in comps:
        if any(c.edges[i].direction[1] != 0 for i in conn):
            return None
    # the cycle must close through both connectors of the doubled component
    if not set(comps[doubly[0]][1]) <= cyc_edges:
        return None
    components = _assemble(c, comps, doubly[0], profile)
    if components is None:
        return None
    w = components[0][1]
    return StringDecomposition(2, (w[0], w[1]), components, tuple(s.edge_indices))


def _decompose_flat(
    c: TropicalCurve, profile: Tuple[int, int, int]
) -> StringDecomposition:
    """kind 3: flatten the bulge, then walk the one-marked-point string."""
    arcs, _, _, _ = _flat_cycle_parts(c)
    wa, wb = sorted((c.edges[arcs[0]].weight, c.edges[arcs[1]].weight), reverse=True)
    flat = _contract_flat_cycle(c)
    bulge_index = len(flat.edges) - 1  # merged edge is appended last

    adj: Dict[int, List[Tuple[int, int]]] = {}
    for i, e in enumerate(flat.edges):
        if e.is_end:
            continue
        adj.setdefault(e.tail, []).append((i, e.head))
        adj.setdefault(e.head, []).append((i, e.tail))

    downs = [
        i
        for i, e in enumerate(flat.edges)
        if e.is_end and not e.is_marking and e.direction == (0, -1)
    ]
    ups = [
        i
        for i, e in enumerate(flat.edges)
        if e.is_end and not e.is_marking and e.direction[1] == 1
    ]
    marks_at: Dict[int, int] = {}
    for e in flat.edges:
        if e.is_marking:
            marks_at[e.tail] = marks_at.get(e.tail, 0) + 1

    for di in downs:
        for ui in ups:
            path = _tree_path(adj, flat.edges[di].tail, flat.edges[ui].tail)
            if path is None:
                continue
            string_edges = set(path) | {di, ui}
            string_vertices = _string_closure(flat, string_edges)
            if sum(marks_at.get(v, 0) for v in string_vertices) != 1:
                continue
            if any(
                i not in string_edges
                and e.tail in string_vertices
                and e.head in string_vertices
                for i, e in flat.bounded_edges()
            ):
                continue
            comps = _component_split(flat, string_vertices, string_edges)
            if any(len(conn) != 1 for _, conn in comps):
                continue
            connectors = [conn[0] for _, conn in comps]
            if any(flat.edges[i].direction[1] != 0 for i in connectors):
                continue
            if bulge_index not in connectors:
                continue
            first = connectors.index(bulge_index)
            components = _assemble(flat, comps, first, profile)
            if components is None:
                continue
            return StringDecomposition(
                3, (wa, wb), components, tuple(sorted(string_edges))
            )
    raise ValueError("not a string-type curve")


def _tree_path(
    adj: Dict[int, List[Tuple[int, int]]], start: int, goal: int
) -> Optional[List[int]]:
    """Edge indices of the unique bounded path between two tree vertices."""
    parent: Dict[int, Tuple[int, int]] = {start: (-1, start)}
    queue = [start]
    while queue:
        v = queue.pop()
        if v == goal:
            path = []
            while v != start:
                i, v = parent[v]
                path.append(i)
            return path
        for i, u in adj.get(v, ()):
            if u not in parent:
                parent[u] = (i, v)
                queue.append(u)
    return None


def multiplicity_string(dec: StringDecomposition) -> int:
    """Multiplicity of a string-type genus-1 curve from its decomposition.

    kind 2: (w0' + w0'') * Mult of the doubly attached component, times
    prod over the other components of (connecting weight times component
    multiplicity).  The leading factor is what the cycle-length row
    contributes when the columns of the two connecting edges are combined;
    it reduces to 2 in the common unit-weight case.
    kind 3: (2 if the bulge arcs differ else 1) times prod over components
    of (connecting weight times multiplicity), the distinguished component
    entering with its full edge weight w0 = w0' + w0''.
    """
    if dec.multiplicities is not None:
        mults = list(dec.multiplicities)
    else:
        mults = [multiplicity_genus0(curve) for curve, _ in dec.components]
    if dec.kind == 2:
        total = (dec.w0[0] + dec.w0[1]) * mults[0]
        for (_, weights), m in zip(dec.components[1:], mults[1:]):
            total *= weights[0] * m
        return total
    if dec.kind == 3:
        wa, wb = dec.w0
        total = 2 if wa != wb else 1
        for (_, weights), m in zip(dec.components, mults):
            total *= weights[0] * m
        return total
    raise ValueError("not a string-type curve")


# ---------------------------------------------------------------------------
# geometry of the image: crossings and simplicity


@dataclass(frozen=True)
class Crossing:
    """Transversal interior crossing of two edge images.

    t1 and t2 are metric distances from the tails of edges i and j to the
    crossing point.
    """

    i: int
    j: int
    t1: Fraction
    t2: Fraction
    point: Point


def _edge_image(c: TropicalCurve, i: int):
    """(origin, momentum, metric length or None) with point = o + t * m."""
    e = c.edges[i]
    return c.positions[e.tail], e.momentum, e.length


def image_crossings(c: TropicalCurve) -> List[Crossing]:
    """All transversal crossings of edge-image interiors.

    Edges sharing a vertex emanate from one point along straight rays, so
    they are skipped; parallel overlaps are a simplicity failure detected by
    is_simple, not a crossing.
    """
    items = [i for i, e in enumerate(c.edges) if not e.is_contracted]
    out = []
    for i, j in itertools.combinations(items, 2):
        ei, ej = c.edges[i], c.edges[j]
        if ({ei.tail, ei.head} & {ej.tail, ej.head}) - {None}:
            continue
        o1, m1, l1 = _edge_image(c, i)
        o2, m2, l2 = _edge_image(c, j)
        det = m1[0] * m2[1] - m1[1] * m2[0]
        if det == 0:
            continue
        dx, dy = o2[0] - o1[0], o2[1] - o1[1]
        t1 = Fraction(dx * m2[1] - dy * m2[0], det)
        t2 = Fraction(dx * m1[1] - dy * m1[0], det)
        if t1 <= 0 or t2 <= 0:
            continue
        if l1 is not None and t1 >= l1:
            continue
        if l2 is not None and t2 >= l2:
            continue
        pt = (o1[0] + t1 * m1[0], o1[1] + t1 * m1[1])
        out.append(Crossing(i, j, t1, t2, pt))
    return out


def _parallel_overlap(c: TropicalCurve, i: int, j: int) -> bool:
    """True when two parallel edge images share more than a point."""
    o1, m1, l1 = _edge_image(c, i)
    o2, m2, l2 = _edge_image(c, j)
    dx, dy = o2[0] - o1[0], o2[1] - o1[1]
    if m1[0] * dy - m1[1] * dx != 0:
        return False  # different parallel lines
    key = 0 if m1[0] else 1
    r2 = Fraction(m2[key], m1[key])
    a2 = Fraction(dx if key == 0 else dy, m1[key])
    b2 = None if l2 is None else a2 + r2 * l2
    lo2, hi2 = a2, b2
    if hi2 is not None and hi2 < lo2:
        lo2, hi2 = hi2, lo2
    elif hi2 is None and r2 < 0:
        lo2, hi2 = None, a2
    lo1: Optional[Fraction] = Fraction(0)
    hi1: Optional[Fraction] = l1
    lo = lo1 if lo2 is None else (lo2 if lo1 is None else max(lo1, lo2))
    hi = hi1 if hi2 is None else (hi2 if hi1 is None else min(hi1, hi2))
    if lo is None or hi is None:
        return True  # both unbounded on the same side of the same line
    return lo < hi


def is_simple(c: TropicalCurve) -> bool:
    """Trivalent vertices, no overlaps, vertices off other edges, and all
    image crossings transversal double points."""
    for v in c.vertices():
        real = sum(
            (1 if e.tail == v else 0) + (1 if e.head == v else 0)
            for e in c.edges
            if not e.is_contracted
        )
        # 2-valent vertices are straight pass-throughs (mark attachments)
        if real not in (2, 3):
            return False
    items = [i for i, e in enumerate(c.edges) if not e.is_contracted]
    for i, j in itertools.combinations(items, 2):
        _, m1, _ = _edge_image(c, i)
        _, m2, _ = _edge_image(c, j)
        if m1[0] * m2[1] - m1[1] * m2[0] == 0 and _parallel_overlap(c, i, j):
            return False
    for v, p in c.positions.items():
        for i in items:
            e = c.edges[i]
            if e.tail == v or e.head == v:
                continue
            o, m, l = _edge_image(c, i)
            if m[0] * (p[1] - o[1]) - m[1] * (p[0] - o[0]) != 0:
                continue
            key = 0 if m[0] else 1
            t = Fraction(p[key] - o[key], m[key])
            if 0 < t and (l is None or t < l):
                return False
    pts = [cr.point for cr in image_crossings(c)]
    return len(pts) == len(set(pts))


def polygon_of_ends(ends: Iterable[Tuple[Vec, int]]) -> LatticePolygon:
    """Newton polygon dual to a multiset of (direction, total weight) ends."""
    groups: Dict[Vec, int] = {}
    for d, w in ends:
        groups[d] = groups.get(d, 0) + w

    def angle_key(d: Vec):
        x, y = d
        # sort by angle starting from direction (1, 0), counterclockwise;
        # within each half-plane -x/y increases with the angle
        half = 0 if (y > 0 or (y == 0 and x > 0)) else 1
        if y == 0:
            return (half, 0, Fraction(0))
        return (half, 1, Fraction(-x, y))

    ordered = sorted(groups.items(), key=lambda kv: angle_key(kv[0]))
    pts = [(0, 0)]
    for d, w in ordered:
        r = _rot90((w * d[0], w * d[1]))
        pts.append((pts[-1][0] + r[0], pts[-1][1] + r[1]))
    if pts[-1] != (0, 0):
        raise ValueError("end momenta do not balance")
    pts.pop()
    # normalize: shift to nonnegative quadrant for stability
    mx = min(p[0] for p in pts)
    my = min(p[1] for p in pts)
    return LatticePolygon([(x - mx, y - my) for x, y in pts])


def contracted_edge_total(c: TropicalCurve) -> int:
    """Sum of genus-1 multiplicities over all cycle placements on c.

    For a simple rational curve: loops at trivalent vertices (interior count
    of the dual triangle), loops on bounded edges (weight minus one), and
    contracted edges joining the branches of each image crossing (area of
    the dual parallelogram), all times the multiplicity of c.  Equals the
    interior lattice point count of the Newton polygon times Mult(c).
    """
    if c.genus != 0:
        raise ValueError("requires simple curve")
    if not is_simple(c):
        raise ValueError("requires simple curve")
    base = multiplicity_genus0(c)
    total = 0
    real_valence: Dict[int, int] = {v: 0 for v in c.positions}
    for e in c.edges:
        if e.is_contracted:
            continue
        real_valence[e.tail] += 1
        if e.head is not None:
            real_valence[e.head] += 1
    for v in c.vertices():
        star = [
            e.momentum if e.tail == v else (-e.momentum[0], -e.momentum[1])
            for e in c.edges
            if (e.tail == v or e.head == v) and not e.is_contracted
        ]
        tri = dual_triangle(star)
        if tri is not None:
            total += interior_lattice_points(tri)
    # loops live on maximal straight chains between branch vertices; a mark
    # subdivides the graph but not the image edge, so merge across 2-valent
    # vertices and skip chains that run off to infinity
    seen_chain = set()
    for i, e in c.bounded_edges():
        if e.is_contracted or i in seen_chain:
            continue
        chain = {i}
        endpoints = []
        unbounded = False
        frontier = [(e.tail, i), (e.head, i)]
        while frontier:
            v, via = frontier.pop()
            if real_valence[v] != 2:
                endpoints.append(v)
                continue
            nxt = [
                (k, f)
                for k, f in enumerate(c.edges)
                if k != via and not f.is_contracted and (f.tail == v or f.head == v)
            ]
            (k, f), = nxt
            if f.is_end:
                unbounded = True
                continue
            if k not in chain:
                chain.add(k)
                frontier.append((f.head if f.tail == v else f.tail, k))
        seen_chain |= chain
        if not unbounded:
            total += e.weight - 1
    for cr in image_crossings(c):
        mi = c.edges[cr.i].momentum
        mj = c.edges[cr.j].momentum
        total += abs(mi[0] * mj[1] - mi[1] * mj[0])
    result = total * base
    if result != expected_contracted_edge_total(c):
        raise AssertionError("contracted-edge placements disagree with polygon count")
    return result


def expected_contracted_edge_total(c: TropicalCurve) -> int:
    """Interior count of the Newton polygon times Mult(c), for comparison."""
    ends = [
        (e.direction, e.weight) for _, e in c.end_edges()
    ]
    poly = polygon_of_ends(ends)
    return interior_lattice_points(poly) * multiplicity_genus0(c)


# ---------------------------------------------------------------------------
# six-valent vertex resolutions


@dataclass(frozen=True)
class Resolution:
    """One way to place the cycle after splitting a 6-valent vertex.

    kind: "vertex-loop", "edge-loop" or "crossing"; family indexes the
    subdivision of the dual polygon the placement lives in; multiplicity is
    the local count times the externally supplied base multiplicity.
    """

    kind: str
    family: int
    multiplicity: int


def _interior_of_triangle(a: Vec, b: Vec, c0: Vec) -> int:
    area2 = abs(
        (b[0] - a[0]) * (c0[1] - a[1]) - (b[1] - a[1]) * (c0[0] - a[0])
    )
    if area2 == 0:
        return 0
    tri = LatticePolygon(
        [a, b, c0]
        if (b[0] - a[0]) * (c0[1] - a[1]) - (b[1] - a[1]) * (c0[0] - a[0]) > 0
        else [a, c0, b]
    )
    return interior_lattice_points(tri)


def _lattice_len(a: Vec, b: Vec) -> int:
    return math.gcd(abs(b[0] - a[0]), abs(b[1] - a[1]))


def resolve_sixvalent(p: LatticePolygon, m: int) -> List[List[Resolution]]:
    """Genus-1 resolutions of a vertex dual to triangle or quadrilateral p.

    Returns one list per subdivision family; within each family the
    multiplicities (local cycle count times m) sum to interior(p) * m.
    Triangles admit the single loop-at-the-vertex placement.  Quadrilaterals
    admit two diagonal splits and at most one corner parallelogram whose far
    corner lies inside p (a crossing of the two extended edges).  Placements
    of multiplicity zero are dropped; a polygon without interior points
    yields no resolutions.
    """
    verts = list(p.vertices)
    families: List[List[Resolution]] = []
    if len(verts) == 3:
        inner = interior_lattice_points(p)
        if inner:
            families.append([Resolution("vertex-loop", 0, inner * m)])
        return families
    if len(verts) != 4:
        raise ValueError("resolve_sixvalent expects a triangle or quadrilateral")
    a, b, c0, d = verts
    fam_no = 0
    # two diagonal splits
    for diag, (t1, t2) in (
        ((a, c0), ((a, b, c0), (a, c0, d))),
        ((b, d), ((b, c0, d), (b, d, a))),
    ):
        fam: List[Resolution] = []
        i1 = _interior_of_triangle(*t1)
        i2 = _interior_of_triangle(*t2)
        if i1:
            fam.append(Resolution("vertex-loop", fam_no, i1 * m))
        if i2:
            fam.append(Resolution("vertex-loop", fam_no, i2 * m))
        ell = _lattice_len(*diag) - 1
        if ell:
            fam.append(Resolution("edge-loop", fam_no, ell * m))
        families.append(fam)
        fam_no += 1
    # corner parallelograms: spanned by the two edges at a corner; the far
    # corner must fall strictly inside p and leave two honest triangles
    quad = [a, b, c0, d]
    for k in range(4):
        corner = quad[k]
        nxt = quad[(k + 1) % 4]
        prv = quad[(k - 1) % 4]
        far = (nxt[0] + prv[0] - corner[0], nxt[1] + prv[1] - corner[1])
        opp = quad[(k + 2) % 4]
        if not p.contains_strict(far):
            continue
        t_b = (nxt, opp, far)
        t_c = (far, opp, prv)
        area_b = (opp[0] - nxt[0]) * (far[1] - nxt[1]) - (opp[1] - nxt[1]) * (
            far[0] - nxt[0]
        )
        area_c = (opp[0] - far[0]) * (prv[1] - far[1]) - (opp[1] - far[1]) * (
            prv[0] - far[0]
        )
        if area_b == 0 or area_c == 0:
            continue
        fam = []
        i1 = _interior_of_triangle(*t_b)
        i2 = _interior_of_triangle(*t_c)
        if i1:
            fam.append(Resolution("vertex-loop", fam_no, i1 * m))
        if i2:
            fam.append(Resolution("vertex-loop", fam_no, i2 * m))
        ell = _lattice_len(far, opp) - 1
        if ell:
            fam.append(Resolution("edge-loop", fam_no, ell * m))
        pgram_area = abs(
            (nxt[0] - corner[0]) * (prv[1] - corner[1])
            - (nxt[1] - corner[1]) * (prv[0] - corner[0])
        )
        if pgram_area:
            fam.append(Resolution("crossing", fam_no, pgram_area * m))
        families.append(fam)
        fam_no += 1
    return [fam for fam in families if fam]
