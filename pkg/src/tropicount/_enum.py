"""Combinatorial-type search for rational tropical curves through points.

The engine fixes the shape of the unmarked curve first: a trivalent tree on
the labelled ends, whose bounded-edge momenta are forced by how the ends are
partitioned.  Shapes with a zero-momentum bounded edge are dropped (such an
edge would be contracted, which cannot happen in a rigid count).  Marked
points are then placed one at a time: a placement picks an edge and adds two
evaluation equations with one fresh offset unknown, so every placement is
tested for consistency the moment it is made and dead branches are abandoned
early.  Surviving full placements give a square system; the solution must
have strictly positive lengths and offsets interior to their edges.

Curves are rebuilt from the solved coordinates and deduplicated by their
drawn image, because relabelling interchangeable ends reaches the same curve
through several labelled shapes.

Everything runs over Fractions; genericity failures (a redundant evaluation
row, a zero length, an offset hitting a vertex) raise DegenerateConfig so the
caller can redraw the point configuration and try again.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from tropicount._linsys import ADDED, INCONSISTENT, REDUNDANT, AffineSystem
from tropicount.polygon_lattice import TropicalDegree, degree_relative, degree_standard
from tropicount.tropical_core import Edge, TropicalCurve, multiplicity_genus0

Vec = Tuple[int, int]
Point = Tuple[Fraction, Fraction]


class DegenerateConfig(Exception):
    """The point data hit a non-generic coincidence; redraw and retry."""


# ---------------------------------------------------------------------------
# degrees, point configurations


def normalize_tangency(tangency):
    """None, a bare weight, or an ordered pair of weights."""
    if tangency is None:
        return None
    if isinstance(tangency, int):
        return tangency
    weights = tuple(tangency)
    if len(weights) == 1:
        return weights[0]
    if len(weights) == 2:
        return (max(weights), min(weights))
    raise ValueError("tangency must be a single weight or a pair")


def degree_of_query(surface_n: int, a: int, b: int, tangency) -> TropicalDegree:
    tangency = normalize_tangency(tangency)
    if tangency is not None:
        return degree_relative(surface_n, a, b, tangency)
    return degree_standard(surface_n, a, b)


def random_config(rng, count: int, spread: int = 720720) -> List[Point]:
    """Generic-looking rational points in a box.

    Denominators vary per point so that no two coordinates or differences
    collide; genuine genericity is not certified here, the engines detect
    coincidences and the caller redraws.
    """
    pts = []
    for i in range(count):
        den = 7 + 2 * i
        x = Fraction(rng.randrange(-spread, spread), den)
        y = Fraction(rng.randrange(-spread, spread), den + 4)
        pts.append((x, y))
    return pts


# ---------------------------------------------------------------------------
# labelled trivalent trees on the ends


def trivalent_trees(nleaves: int) -> Iterator[List[Tuple[int, int]]]:
    """Yield every labelled trivalent tree once, as a list of (u, v) pairs.

    Leaves are 0..nleaves-1, internal vertices nleaves, nleaves+1, ...
    Leaf k is attached to the tree on leaves 0..k-1 by splitting one of its
    edges; removing the highest leaf inverts the step, so each tree shows up
    exactly once.
    """
    if nleaves < 3:
        raise ValueError("need at least three ends")
    base = [(0, nleaves), (1, nleaves), (2, nleaves)]

    def rec(edges: List[Tuple[int, int]], leaf: int, internal: int):
        if leaf == nleaves:
            yield edges
            return
        for i in range(len(edges)):
            u, v = edges[i]
            rest = edges[:i] + edges[i + 1 :]
            rest.append((u, internal))
            rest.append((internal, v))
            rest.append((leaf, internal))
            yield from rec(rest, leaf + 1, internal + 1)

    yield from rec(base, 3, nleaves + 1)


def tree_class_key(tree: Sequence[Tuple[int, int]], classes: Sequence[int]):
    """Canonical form of a leaf-class-labelled tree.

    Two labelled trees get the same key exactly when some permutation of
    equal-class leaves maps one to the other; the search then only needs one
    representative, since relabelling interchangeable ends redraws the same
    curves.  Rooted at the tree's centre (peel leaves until one vertex or one
    edge remains), children sorted by canonical subtree string.
    """
    adj: Dict[int, List[int]] = {}
    for u, v in tree:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    degree = {v: len(ns) for v, ns in adj.items()}
    layer = [v for v, d in degree.items() if d == 1]
    alive = set(adj)
    while len(alive) > 2:
        nxt = []
        for v in layer:
            alive.discard(v)
            for w in adj[v]:
                if w in alive:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    nleaves = len(classes)

    def canon(v: int, parent: Optional[int]):
        if v < nleaves:
            return ("L", classes[v])
        kids = tuple(sorted(canon(w, v) for w in adj[v] if w != parent))
        return ("I",) + kids

    centre = sorted(alive)
    if len(centre) == 1:
        return canon(centre[0], None)
    a, b = centre
    return tuple(sorted((canon(a, b), canon(b, a))))


class Skeleton:
    """One labelled shape with oriented edges and forced momenta.

    Edges are (tail, head, momentum, col): tail is the parent in the tree
    rooted at the first internal vertex, momentum is the weighted direction
    sum of the ends behind head, col is the length column for bounded edges
    and None for ends.  paths maps a vertex to its root path as a list of
    (col, momentum).
    """

    __slots__ = ("edges", "paths", "nbounded", "root")

    def __init__(self, edges, paths, nbounded, root):
        self.edges = edges
        self.paths = paths
        self.nbounded = nbounded
        self.root = root


def orient_tree(
    tree: Sequence[Tuple[int, int]],
    end_momenta: Sequence[Vec],
) -> Optional[Skeleton]:
    """Root the tree and push end momenta down; None if a bounded edge dies.

    A bounded edge whose subtree momenta cancel would be contracted in any
    realisation, so the whole shape is skipped.
    """
    nleaves = len(end_momenta)
    root = nleaves
    adj: Dict[int, List[int]] = {}
    for u, v in tree:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    parent = {root: None}
    order = [root]
    stack = [root]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
                stack.append(w)
    subtotal: Dict[int, Vec] = {}
    for v in reversed(order):
        if v < nleaves:
            subtotal[v] = end_momenta[v]
        else:
            mx = my = 0
            for w in adj[v]:
                if w != parent[v]:
                    mx += subtotal[w][0]
                    my += subtotal[w][1]
            subtotal[v] = (mx, my)
    edges = []
    ncol = 0
    paths: Dict[int, List[Tuple[int, Vec]]] = {root: []}
    for v in order:
        if v == root:
            continue
        m = subtotal[v]
        if v < nleaves:
            edges.append((parent[v], v, m, None))
        else:
            if m == (0, 0):
                return None
            edges.append((parent[v], v, m, ncol))
            paths[v] = paths[parent[v]] + [(ncol, m)]
            ncol += 1
    return Skeleton(tuple(edges), paths, ncol, root)


# ---------------------------------------------------------------------------
# placement search


def _content(m: Vec) -> int:
    return math.gcd(m[0], m[1])


def _assemble_curve(
    sk: Skeleton,
    ends: Sequence[Tuple[Vec, int]],
    sol: Sequence[Fraction],
    assignment: Sequence[int],
    npoints: int,
) -> TropicalCurve:
    """Rebuild the drawn curve: skeleton vertices, then marks as 2-valent
    subdivision points carrying contracted labelled ends."""
    nleaves = len(ends)
    base = 2 + sk.nbounded
    positions: Dict[int, Point] = {}
    positions[sk.root] = (sol[0], sol[1])
    for v, path in sk.paths.items():
        if v == sk.root:
            continue
        x, y = sol[0], sol[1]
        for col, m in path:
            x += sol[2 + col] * m[0]
            y += sol[2 + col] * m[1]
        positions[v] = (x, y)
    # marks per skeleton edge, sorted by offset
    on_edge: Dict[int, List[int]] = {}
    for j, eidx in enumerate(assignment):
        on_edge.setdefault(eidx, []).append(j)
    next_v = max(positions) + 1 + nleaves
    curve_edges: List[Edge] = []
    for eidx, (tail, head, m, col) in enumerate(sk.edges):
        w = _content(m)
        d = (m[0] // w, m[1] // w)
        marks = sorted(on_edge.get(eidx, ()), key=lambda j: sol[base + j])
        tx, ty = positions[tail]
        prev_v = tail
        prev_t = Fraction(0)
        for j in marks:
            t = sol[base + j]
            mv = next_v
            next_v += 1
            positions[mv] = (tx + t * m[0], ty + t * m[1])
            curve_edges.append(Edge(prev_v, mv, w, d, t - prev_t))
            curve_edges.append(Edge(mv, None, 0, (0, 0), marking=f"m{j:02d}"))
            prev_v, prev_t = mv, t
        if col is None:
            curve_edges.append(Edge(prev_v, None, w, d))
        else:
            curve_edges.append(Edge(prev_v, head, w, d, sol[2 + col] - prev_t))
    return TropicalCurve(positions, curve_edges)


def canonical_key(curve: TropicalCurve):
    """Hashable image of the drawn curve, independent of labelling order."""

    def num(p: Point):
        return (p[0].numerator, p[0].denominator, p[1].numerator, p[1].denominator)

    items = []
    for e in curve.edges:
        tp = curve.positions[e.tail]
        if e.is_marking:
            items.append(("m", num(tp), e.marking))
        elif e.is_end:
            items.append(("e", num(tp), e.direction, e.weight))
        elif e.tail == e.head:
            items.append(("o", num(tp), str(e.length)))
        else:
            hp = curve.positions[e.head]
            a, b = sorted((num(tp), num(hp)))
            items.append(("b", a, b, e.weight))
    return tuple(sorted(items))


def _search_skeleton(
    sk: Skeleton,
    ends: Sequence[Tuple[Vec, int]],
    points: Sequence[Point],
    out: Dict,
) -> None:
    npoints = len(points)
    ncols = 2 + sk.nbounded + npoints
    sys = AffineSystem(ncols)
    base = 2 + sk.nbounded
    nedges = len(sk.edges)

    # per-edge row template: the root path of the tail, plus the momentum
    templates = []
    for tail, head, m, col in sk.edges:
        templates.append((sk.paths[tail], m))

    assignment = [0] * npoints
    nonneg = list(range(2, base))
    pairs: List[Tuple[int, int]] = []
    order = sorted(range(npoints), key=lambda j: points[j][1], reverse=True)

    def place(depth: int) -> None:
        j = order[depth]
        px, py = points[j]
        tcol = base + j
        for eidx in range(nedges):
            path, m = templates[eidx]
            rowx = [0] * ncols
            rowy = [0] * ncols
            rowx[0] = 1
            rowy[1] = 1
            for pcol, pm in path:
                rowx[2 + pcol] = pm[0]
                rowy[2 + pcol] = pm[1]
            rowx[tcol] = m[0]
            rowy[tcol] = m[1]
            token = sys.mark()
            r1 = sys.add(rowx, px)
            if r1 is REDUNDANT:
                raise DegenerateConfig("redundant evaluation row")
            if r1 is INCONSISTENT:
                continue
            r2 = sys.add(rowy, py)
            if r2 is REDUNDANT:
                sys.rollback(token)
                raise DegenerateConfig("redundant evaluation row")
            if r2 is INCONSISTENT:
                sys.rollback(token)
                continue
            ecol = sk.edges[eidx][3]
            nonneg.append(tcol)
            if ecol is not None:
                pairs.append((tcol, 2 + ecol))
            live = depth + 1 == npoints or sys.box_feasible(nonneg, pairs)
            if live:
                assignment[j] = eidx
                if depth + 1 == npoints:
                    _finalize()
                else:
                    place(depth + 1)
            nonneg.pop()
            if ecol is not None:
                pairs.pop()
            sys.rollback(token)

    def _finalize() -> None:
        sol = sys.solve()
        if sol is None:
            raise DegenerateConfig("rank-deficient full placement")
        ok = True
        for col in range(sk.nbounded):
            v = sol[2 + col]
            if v == 0:
                raise DegenerateConfig("zero edge length")
            if v < 0:
                ok = False
                break
        if ok:
            seen_edges = {}
            for j in range(npoints):
                t = sol[base + j]
                eidx = assignment[j]
                col = sk.edges[eidx][3]
                if t == 0 or (col is not None and t == sol[2 + col]):
                    raise DegenerateConfig("marked point at a vertex")
                if t < 0 or (col is not None and t > sol[2 + col]):
                    ok = False
                    break
                if eidx in seen_edges and t == sol[base + seen_edges[eidx]]:
                    raise DegenerateConfig("marked points collide")
                seen_edges[eidx] = j
        if not ok:
            return
        curve = _assemble_curve(sk, ends, sol, assignment, npoints)
        key = canonical_key(curve)
        if key in out:
            return
        out[key] = (curve, multiplicity_genus0(curve))

    place(0)


def _line_count(
    ends: Sequence[Tuple[Vec, int]], points: Sequence[Point]
) -> Tuple[int, List[Tuple[TropicalCurve, int]]]:
    """Two ends only: the curve is a straight line, rigid through one point."""
    (d1, w1), (d2, w2) = ends
    if len(points) != 1:
        return 0, []
    (px, py) = points[0]
    positions = {0: (px, py)}
    edges = [
        Edge(0, None, w1, d1),
        Edge(0, None, w2, d2),
        Edge(0, None, 0, (0, 0), marking="m00"),
    ]
    curve = TropicalCurve(positions, edges)
    mult = multiplicity_genus0(curve)
    return mult, [(curve, mult)]


def enumerate_rational(
    surface_n: int,
    a: int,
    b: int,
    tangency,
    points: Sequence[Point],
) -> Tuple[int, List[Tuple[TropicalCurve, int]]]:
    """All rigid rational curves of the given degree through the points.

    Returns (total multiplicity, [(curve, multiplicity)...]).  Raises
    DegenerateConfig when the configuration shows a coincidence.
    """
    degree = degree_of_query(surface_n, a, b, tangency)
    ends = list(degree.ends)
    if len(points) != degree.num_ends - 1:
        if len(points) > degree.num_ends - 1:
            return 0, []
        raise ValueError("non-rigid configuration")
    if degree.num_ends == 2:
        return _line_count(ends, points)
    end_momenta = [(d[0] * w, d[1] * w) for d, w in ends]
    class_of: Dict[Tuple[Vec, int], int] = {}
    classes = []
    for e in ends:
        classes.append(class_of.setdefault(e, len(class_of)))
    out: Dict = {}
    seen_shapes = set()
    for tree in trivalent_trees(len(ends)):
        sk = orient_tree(tree, end_momenta)
        if sk is None:
            continue
        shape = tree_class_key(tree, classes)
        if shape in seen_shapes:
            continue
        seen_shapes.add(shape)
        _search_skeleton(sk, ends, points, out)
    witnesses = list(out.values())
    total = sum(m for _, m in witnesses)
    return total, witnesses
