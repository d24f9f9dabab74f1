"""Direct enumeration of genus-one curves with a fixed cycle length.

A genus-one tropical curve through 2b+(n+2)a-1 generic points falls into one
of three families by the dimension of its cycle's image, and each family is
searched differently:

* planar cycle (deficiency 0): full combinatorial-type search.  A trivalent
  genus-one graph is a cycle of k >= 3 vertices with a rooted tree hanging
  off each cycle vertex, so types are enumerated as cyclic arrangements of
  end blocks, rooted trees per block, and one free cycle momentum.  Each
  type gives a square affine system (position, lengths, mark offsets versus
  evaluations, two closure rows and the cycle-length row), solved exactly.
* flat cycle (deficiency 1): the cycle is a bigon of two parallel arcs lying
  on a straight piece of a rational curve through the same points.  Every
  such curve contracts to a rational witness, so bigons are constructed on
  the witnesses' straight pieces of weight >= 2; the fixed cycle length
  dictates the bigon's lattice size and well-spacedness pins it to the
  centre of its piece.
* contracted cycle (deficiency 2): a zero-momentum loop of metric length j
  on a rational witness, either at a trivalent vertex or somewhere along a
  straight piece (the position along the piece is a modulus of the cell, so
  one representative is placed per piece).

Free cycle momentum range (deficiency 0).  Writing p_i for the cycle edge
momenta and S_i for the partial sums of the hanging-tree momenta, balancing
gives p_i = p_0 - S_i.  A realisation has positive lengths l_i with
sum l_i p_i = 0, which forces min_i p_i.x <= 0 <= max_i p_i.x and the same
in y; hence p_0.x lies between min_i S_i.x and max_i S_i.x.  That range is
intrinsic to the type and makes the enumeration finite without any appeal
to duality.

Genericity failures raise DegenerateConfig exactly as in the rational
engine, including a marked point landing on a flat cycle (the multiplicity
of a marked flat cycle is undefined here, so the configuration is redrawn).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from tropicount._enum import (
    DegenerateConfig,
    Skeleton,
    _assemble_curve,
    canonical_key,
    enumerate_rational,
    trivalent_trees,
)
from tropicount._linsys import ADDED, INCONSISTENT, REDUNDANT, AffineSystem
from tropicount.polygon_lattice import degree_standard
from tropicount.tropical_core import (
    Edge,
    TropicalCurve,
    is_well_spaced,
    multiplicity_contracted_loop,
    multiplicity_flat_cycle,
    multiplicity_genus1_def0,
)

Vec = Tuple[int, int]
Point = Tuple[Fraction, Fraction]


# ---------------------------------------------------------------------------
# deficiency 0: combinatorial types with a planar cycle


def _rooted_layouts(block: Tuple[int, ...], end_momenta, classes):
    """Rooted trivalent layouts of one block of ends.

    Yields (bounded, legs, nlocal, relpaths, enc) where
      bounded: list of (tail_local, head_local, momentum) with local 0 the
        attachment (cycle) vertex and 1.. fresh internal vertices, listed in
        column-creation order (local column c is bounded[c]);
      legs: list of (tail_local, momentum) for the unbounded ends;
      relpaths: local vertex -> tuple of (local column, momentum) down from
        the attachment;
      enc: canonical encoding over end classes, for shape deduplication.
    Layouts with a zero bounded momentum are dropped: such an edge would be
    contracted in any realisation.
    """
    s = len(block)
    if s == 1:
        m = end_momenta[block[0]]
        yield [], [(0, m)], 1, {}, ("L", classes[block[0]])
        return
    for tree in trivalent_trees(s + 1):
        adj: Dict[int, List[int]] = {}
        for u, v in tree:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        root = s  # the attachment leaf
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
            if v < s:
                subtotal[v] = end_momenta[block[v]]
            else:
                mx = my = 0
                for w in adj[v]:
                    if w != parent[v]:
                        mx += subtotal[w][0]
                        my += subtotal[w][1]
                subtotal[v] = (mx, my)
        local = {root: 0}
        nlocal = 1
        bounded: List[Tuple[int, int, Vec]] = []
        legs: List[Tuple[int, Vec]] = []
        relpaths: Dict[int, Tuple[Tuple[int, Vec], ...]] = {0: ()}
        dead = False
        for v in order:
            if v == root:
                continue
            m = subtotal[v]
            if v < s:
                legs.append((local[parent[v]], m))
                continue
            if m == (0, 0):
                dead = True
                break
            col = len(bounded)
            local[v] = nlocal
            nlocal += 1
            bounded.append((local[parent[v]], local[v], m))
            relpaths[local[v]] = relpaths[local[parent[v]]] + ((col, m),)
        if dead:
            continue

        def canon(v: int, par: int):
            if v < s:
                return ("L", classes[block[v]])
            kids = tuple(sorted(canon(w, v) for w in adj[v] if w != par))
            return ("I",) + kids

        enc = canon(adj[root][0], root)
        yield bounded, legs, nlocal, relpaths, enc


def _anchored_blocks(nends: int, k: int):
    """Ordered partitions of 0..nends-1 into k nonempty blocks, end 0 fixed
    in block 0.  Rotation symmetry of the cycle is thereby spent; reflections
    remain and are removed by the shape key."""
    assign = [0] * nends
    counts = [0] * k
    counts[0] = 1
    out: List[List[int]] = [[] for _ in range(k)]
    out[0].append(0)

    def rec(i: int):
        if i == nends:
            if all(counts):
                yield tuple(tuple(b) for b in out)
            return
        # cannot fill k-j empty blocks with fewer than k-j remaining ends
        empty = sum(1 for c in counts if c == 0)
        if empty > nends - i:
            return
        for blk in range(k):
            counts[blk] += 1
            out[blk].append(i)
            yield from rec(i + 1)
            counts[blk] -= 1
            out[blk].pop()

    yield from rec(1)


def _dihedral_min(seq: Sequence) -> Tuple:
    """Least rotation or reflected rotation of a cyclic sequence."""
    k = len(seq)
    best = None
    for r in range(k):
        cand = tuple(seq[(r + i) % k] for i in range(k))
        if best is None or cand < best:
            best = cand
        cand = tuple(seq[(r - i) % k] for i in range(k))
        if cand < best:
            best = cand
    return best


def _dihedral_stabilizer(seq: Sequence) -> List[Tuple[int, bool]]:
    """Dihedral symmetries (shift, reflected) fixing the cyclic sequence."""
    k = len(seq)
    stab = []
    for r in range(k):
        if all(seq[(r + i) % k] == seq[i] for i in range(k)):
            stab.append((r, False))
        if all(seq[(r - i) % k] == seq[i] for i in range(k)):
            stab.append((r, True))
    return stab


def _momenta_orbit_min(ps: Sequence[Vec], stab: Sequence[Tuple[int, bool]]):
    """Least image of the cycle momenta under the block-shape stabilizer.

    A reflection reverses the traversal, so momenta negate and shift by one
    position: edge i of the relabelled cycle is edge (r-1-i) run backwards.
    """
    k = len(ps)
    best = None
    for r, refl in stab:
        if refl:
            cand = tuple(
                (-ps[(r - 1 - i) % k][0], -ps[(r - 1 - i) % k][1])
                for i in range(k)
            )
        else:
            cand = tuple(ps[(r + i) % k] for i in range(k))
        if best is None or cand < best:
            best = cand
    return best


def _positively_spans(ps: Sequence[Vec]) -> bool:
    """Whether some strictly positive combination of the vectors is zero.

    The cycle closure needs positive lengths, so the momenta must not fit
    in any closed half-plane unless they all lie on its boundary line.  It
    suffices to test the half-planes bounded by each momentum's own line.
    """
    for p in ps:
        u = (-p[1], p[0])
        for ux, uy in (u, (-u[0], -u[1])):
            strict = False
            for qx, qy in ps:
                s = ux * qx + uy * qy
                if s < 0:
                    break
                if s > 0:
                    strict = True
            else:
                if strict:
                    return False
    return True


def _search_cycle_type(
    sk: Skeleton,
    cycle_momenta: Sequence[Vec],
    ends,
    points: Sequence[Point],
    j_length: Fraction,
    out: Dict,
) -> None:
    """Place the marks on one deficiency-0 type and collect rigid solutions.

    Mirrors the rational engine's search, with the two cycle-closure rows
    and the cycle-length row seeded before any mark is placed so that the
    interval prune can use them.  One policy deliberately differs from the
    rational engine: solutions sitting exactly on a cell boundary (a zero
    length, a mark at a vertex) are skipped instead of triggering a redraw.
    The closure rows force two right-hand sides to be identically zero, so
    for some types such a boundary solution is forced for every point
    configuration, and a redraw could never escape it.
    """
    npoints = len(points)
    nbounded = sk.nbounded
    ncols = 2 + nbounded + npoints
    base = 2 + nbounded
    sys = AffineSystem(ncols)
    k = len(cycle_momenta)

    closex = [0] * ncols
    closey = [0] * ncols
    jrow = [0] * ncols
    for i, p in enumerate(cycle_momenta):
        closex[2 + i] = p[0]
        closey[2 + i] = p[1]
        jrow[2 + i] = 1
    for row, rhs in ((closex, Fraction(0)), (closey, Fraction(0)), (jrow, j_length)):
        if sys.add(row, rhs) is not ADDED:
            return  # the type admits no cycle of this length
    nonneg = list(range(2, base))
    pairs: List[Tuple[int, int]] = []
    if not sys.box_feasible(nonneg, pairs):
        return

    templates = []
    for tail, head, m, col in sk.edges:
        templates.append((sk.paths[tail], m))
    nedges = len(sk.edges)
    assignment = [0] * npoints
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
        for col in range(nbounded):
            if sol[2 + col] <= 0:
                return
        seen_edges = {}
        for j in range(npoints):
            t = sol[base + j]
            eidx = assignment[j]
            col = sk.edges[eidx][3]
            if t <= 0 or (col is not None and t >= sol[2 + col]):
                return
            if eidx in seen_edges and t == sol[base + seen_edges[eidx]]:
                return
            seen_edges[eidx] = j
        curve = _assemble_curve(sk, ends, sol, assignment, npoints)
        key = canonical_key(curve)
        if key in out:
            return
        mult = multiplicity_genus1_def0(curve)
        # a unique solution of the square placement system has nonzero
        # determinant, and the multiplicity is that same determinant up to
        # a unimodular change of columns
        if mult == 0:
            raise AssertionError("rigid solution with vanishing determinant")
        if not is_well_spaced(curve):
            return
        out[key] = (curve, mult)

    place(0)


def _def0_search(ends, points: Sequence[Point], j_length: Fraction, out: Dict) -> None:
    """Search every deficiency-0 type once.

    Ends of a common direction and weight are interchangeable, and the cycle
    has dihedral symmetry, so duplication is cut in three layers before any
    placement search runs: block arrangements keyed by their cyclic sequence
    of end-class multisets, tree layouts keyed by their cyclic sequence of
    shape encodings, and circulations keyed modulo the stabilizer of that
    shape sequence.  Each layer identifies types whose curve sets coincide
    under relabelling, so one representative suffices.
    """
    nends = len(ends)
    end_momenta = [(d[0] * w, d[1] * w) for d, w in ends]
    class_of: Dict[Tuple[Vec, int], int] = {}
    classes = [class_of.setdefault(e, len(class_of)) for e in ends]
    layout_cache: Dict[Tuple[int, ...], List] = {}

    def layouts(block: Tuple[int, ...]) -> List:
        got = layout_cache.get(block)
        if got is None:
            got = []
            encs_seen = set()
            # layouts with equal class encodings differ by a swap of
            # same-class ends, so one of each is enough
            for lay in _rooted_layouts(block, end_momenta, classes):
                if lay[4] not in encs_seen:
                    encs_seen.add(lay[4])
                    got.append(lay)
            layout_cache[block] = got
        return got

    seen_blocks = set()
    seen_shapes = set()
    for k in range(3, nends + 1):
        for blocks in _anchored_blocks(nends, k):
            mseq = tuple(
                tuple(sorted(classes[e] for e in block)) for block in blocks
            )
            bkey = _dihedral_min(mseq)
            if bkey in seen_blocks:
                continue
            seen_blocks.add(bkey)
            layout_lists = [layouts(block) for block in blocks]
            if any(not ls for ls in layout_lists):
                continue
            us = []
            for block in blocks:
                ux = sum(end_momenta[e][0] for e in block)
                uy = sum(end_momenta[e][1] for e in block)
                us.append((ux, uy))
            # partial sums S_i with S_0 = 0; p_i = p0 - S_i, and a feasible
            # closure needs min p_i <= 0 <= max p_i in each coordinate
            ss = [(0, 0)]
            for i in range(1, k):
                ss.append((ss[-1][0] + us[i][0], ss[-1][1] + us[i][1]))
            xs = [s[0] for s in ss]
            ys = [s[1] for s in ss]
            circulations = []
            for p0x in range(min(xs), max(xs) + 1):
                for p0y in range(min(ys), max(ys) + 1):
                    ps = tuple((p0x - sx, p0y - sy) for sx, sy in ss)
                    if any(p == (0, 0) for p in ps):
                        continue
                    q0 = ps[0]
                    if all(q0[0] * p[1] - q0[1] * p[0] == 0 for p in ps[1:]):
                        continue  # flat cycle: handled via witnesses
                    if not _positively_spans(ps):
                        continue  # closure insolvable with positive lengths
                    circulations.append(ps)
            if not circulations:
                continue
            for combo in itertools.product(*layout_lists):
                encs = tuple(c[4] for c in combo)
                skey = _dihedral_min(encs)
                if skey in seen_shapes:
                    continue
                seen_shapes.add(skey)
                stab = _dihedral_stabilizer(encs)
                seen_ps = set()
                for ps in circulations:
                    if len(stab) > 1:
                        pkey = _momenta_orbit_min(ps, stab)
                        if pkey in seen_ps:
                            continue
                        seen_ps.add(pkey)
                    sk = _materialize(blocks, combo, ps)
                    _search_cycle_type(sk, ps, ends, points, j_length, out)


def _materialize(blocks, combo, ps) -> Skeleton:
    """Assemble the full genus-one skeleton for one type and circulation."""
    k = len(blocks)
    edges: List[Tuple[int, Optional[int], Vec, Optional[int]]] = []
    paths: Dict[int, Tuple[Tuple[int, Vec], ...]] = {0: ()}
    for i in range(k):
        edges.append((i, (i + 1) % k, ps[i], i))
        if i + 1 < k:
            paths[i + 1] = paths[i] + ((i, ps[i]),)
    next_vertex = k
    next_col = k
    for i, (bounded, legs, nlocal, relpaths, enc) in enumerate(combo):
        vmap = {0: i}
        for lv in range(1, nlocal):
            vmap[lv] = next_vertex
            next_vertex += 1
        for c, (lt, lh, m) in enumerate(bounded):
            edges.append((vmap[lt], vmap[lh], m, next_col + c))
        for lv in range(1, nlocal):
            paths[vmap[lv]] = paths[i] + tuple(
                (next_col + c, m) for c, m in relpaths[lv]
            )
        for lt, m in legs:
            edges.append((vmap[lt], None, m, None))
        next_col += len(bounded)
    return Skeleton(tuple(edges), paths, next_col, 0)


# ---------------------------------------------------------------------------
# straight pieces of rational witnesses


class _Piece:
    """A maximal straight run of bounded edges of one rational curve.

    Mark vertices are 2-valent and never bend a balanced curve, so a piece
    is a chain of collinear equal-weight bounded edges joined at marked
    vertices, ending where the curve branches or the edge becomes unbounded.
    Offsets along the piece are lattice lengths (metric length times weight).
    """

    __slots__ = ("subs", "weight", "direction", "lattice_length", "junctions")

    def __init__(self, subs, weight, direction, lattice_length, junctions):
        self.subs = subs  # list of (edge_index, tail_v, head_v, metric_length)
        self.weight = weight
        self.direction = direction
        self.lattice_length = lattice_length
        self.junctions = junctions  # list of (vertex, lattice offset)


def _witness_pieces(curve: TropicalCurve) -> List[_Piece]:
    real: Dict[int, List[int]] = {v: [] for v in curve.positions}
    for i, e in enumerate(curve.edges):
        if e.is_marking:
            continue
        real[e.tail].append(i)
        if e.head is not None:
            real[e.head].append(i)

    def chains_through(v: int) -> bool:
        ids = real[v]
        return len(ids) == 2 and all(
            curve.edges[i].head is not None for i in ids
        )

    def step(v: int, used_edge: int) -> Optional[int]:
        if not chains_through(v):
            return None
        a, b = real[v]
        return b if a == used_edge else a

    pieces: List[_Piece] = []
    visited = set()
    for i, e in enumerate(curve.edges):
        if e.is_end or e.is_contracted or i in visited:
            continue
        # walk to one extreme of the chain
        cur, at = i, e.tail
        while True:
            nxt = step(at, cur)
            if nxt is None:
                break
            cur = nxt
            ce = curve.edges[cur]
            at = ce.head if ce.tail == at else ce.tail
        # at is an extreme endpoint of the chain containing edge cur
        start = at
        ordered: List[Tuple[int, int, int, Fraction]] = []
        v = start
        eidx = cur
        while True:
            ce = curve.edges[eidx]
            u = ce.head if ce.tail == v else ce.tail
            ordered.append((eidx, v, u, ce.length))
            visited.add(eidx)
            nxt = step(u, eidx)
            if nxt is None:
                break
            eidx = nxt
            v = u
        # canonical orientation: smaller endpoint position first
        first = curve.positions[ordered[0][1]]
        last = curve.positions[ordered[-1][2]]
        if last < first:
            ordered = [(ei, hv, tv, ln) for ei, tv, hv, ln in reversed(ordered)]
        w = curve.edges[ordered[0][0]].weight
        e0 = curve.edges[ordered[0][0]]
        tpos = curve.positions[ordered[0][1]]
        hpos = curve.positions[ordered[0][2]]
        dx, dy = hpos[0] - tpos[0], hpos[1] - tpos[1]
        d = e0.direction
        if (dx * d[1] - dy * d[0]) != 0:
            raise AssertionError("piece edge leaves its own line")
        if (d[0] and dx * d[0] < 0) or (d[1] and dy * d[1] < 0):
            d = (-d[0], -d[1])
        junctions = []
        offset = Fraction(0)
        for nsub, (ei, tv, hv, ln) in enumerate(ordered):
            se = curve.edges[ei]
            if se.weight != w:
                raise AssertionError("piece weight changes at a 2-valent vertex")
            offset += ln * w
            if nsub + 1 < len(ordered):
                junctions.append((hv, offset))
        pieces.append(_Piece(ordered, w, d, offset, junctions))
    return pieces


def _fresh_vertex(curve: TropicalCurve) -> int:
    return max(curve.positions) + 1


def _shift(p: Point, d: Vec, lattice: Fraction) -> Point:
    return (p[0] + lattice * d[0], p[1] + lattice * d[1])


# ---------------------------------------------------------------------------
# deficiency 2: contracted loops on witnesses


def _def2_from_witness(
    curve: TropicalCurve, j_length: Fraction, out: Dict
) -> None:
    marked = {e.tail for e in curve.edges if e.is_marking}
    real_count: Dict[int, int] = {v: 0 for v in curve.positions}
    for e in curve.edges:
        if e.is_marking:
            continue
        real_count[e.tail] += 1
        if e.head is not None:
            real_count[e.head] += 1

    def record(candidate: TropicalCurve) -> None:
        key = canonical_key(candidate)
        if key in out:
            return
        mult = multiplicity_contracted_loop(candidate)
        if mult == 0:
            return
        if not is_well_spaced(candidate):
            return
        out[key] = (candidate, mult)

    # loops at branch vertices
    for v in curve.positions:
        if real_count[v] != 3 or v in marked:
            continue
        loop = Edge(v, v, 0, (0, 0), length=j_length)
        record(TropicalCurve(dict(curve.positions), list(curve.edges) + [loop]))

    # one loop per straight piece of weight >= 2 (its position along the
    # piece is a modulus of the cell, so a single representative counts)
    for piece in _witness_pieces(curve):
        if piece.weight < 2:
            continue
        ei, tv, hv, ln = piece.subs[0]
        old = curve.edges[ei]
        mid = _fresh_vertex(curve)
        positions = dict(curve.positions)
        positions[mid] = _shift(
            positions[tv], piece.direction, ln * piece.weight / 2
        )
        edges = [e for i, e in enumerate(curve.edges) if i != ei]
        half = ln / 2
        edges.append(Edge(tv, mid, piece.weight, piece.direction, half))
        edges.append(Edge(mid, hv, piece.weight, piece.direction, half))
        edges.append(Edge(mid, mid, 0, (0, 0), length=j_length))
        record(TropicalCurve(positions, edges))


# ---------------------------------------------------------------------------
# deficiency 1: flat bigons on witnesses


def _def1_from_witness(
    curve: TropicalCurve, j_length: Fraction, out: Dict
) -> None:
    for piece in _witness_pieces(curve):
        w = piece.weight
        if w < 2:
            continue
        lat = piece.lattice_length
        for w1 in range(1, w // 2 + 1):
            w2 = w - w1
            hi, lo = max(w1, w2), min(w1, w2)
            size = j_length * hi * lo / w
            if size > lat:
                continue  # the cycle no longer fits on this piece
            if size == lat:
                raise DegenerateConfig("flat cycle fills its straight piece")
            gap = (lat - size) / 2
            lo_off, hi_off = gap, gap + size
            for jv, joff in piece.junctions:
                if lo_off <= joff <= hi_off:
                    # a marked point on the cycle has no defined multiplicity;
                    # treat the configuration as non-generic and redraw
                    raise DegenerateConfig("marked point on a flat cycle")
            # after the junction check the bigon sits inside a single sub-edge
            cum = Fraction(0)
            host = None
            for ei, tv, hv, ln in piece.subs:
                nxt = cum + ln * w
                if cum < lo_off and hi_off < nxt:
                    host = (ei, tv, hv, ln, cum)
                    break
                cum = nxt
            if host is None:
                # junction offsets are the only interior sub-edge boundaries
                # and were excluded above
                raise AssertionError("flat cycle escaped its straight piece")
            ei, tv, hv, ln, cum = host
            d = piece.direction
            va = _fresh_vertex(curve)
            vb = va + 1
            positions = dict(curve.positions)
            positions[va] = _shift(positions[tv], d, lo_off - cum)
            positions[vb] = _shift(positions[tv], d, hi_off - cum)
            edges = [e for i, e in enumerate(curve.edges) if i != ei]
            edges.append(Edge(tv, va, w, d, (lo_off - cum) / w))
            edges.append(Edge(va, vb, hi, d, size / hi))
            edges.append(Edge(va, vb, lo, d, size / lo))
            edges.append(Edge(vb, hv, w, d, (cum + ln * w - hi_off) / w))
            candidate = TropicalCurve(positions, edges)
            if not is_well_spaced(candidate):
                continue
            key = canonical_key(candidate)
            if key in out:
                continue
            mult = multiplicity_flat_cycle(candidate)
            if mult == 0:
                continue
            out[key] = (candidate, mult)


# ---------------------------------------------------------------------------
# entry point


def enumerate_elliptic(
    surface_n: int,
    a: int,
    b: int,
    j_length,
    points: Sequence[Point],
) -> Tuple[int, List[Tuple[TropicalCurve, int]]]:
    """All rigid genus-one curves of standard degree (a, b) through the
    points whose cycle has metric length ``j_length``.

    Returns (total multiplicity, [(curve, multiplicity)...]).  The rational
    curves through the same points are enumerated as part of the run; flat
    and contracted cycles are grafted onto them, planar cycles are searched
    directly.  Raises DegenerateConfig on any genericity failure.
    """
    j_length = Fraction(j_length)
    if j_length <= 0:
        raise ValueError("cycle length must be positive")
    degree = degree_standard(surface_n, a, b)
    ends = list(degree.ends)
    if len(points) != degree.num_ends - 1:
        if len(points) > degree.num_ends - 1:
            return 0, []
        raise ValueError("non-rigid configuration")
    out: Dict = {}
    if degree.num_ends >= 3:
        _def0_search(ends, points, j_length, out)
    _, witnesses = enumerate_rational(surface_n, a, b, None, points)
    for witness, _mult in witnesses:
        _def1_from_witness(witness, j_length, out)
        _def2_from_witness(witness, j_length, out)
    found = list(out.values())
    total = sum(m for _, m in found)
    return total, found
