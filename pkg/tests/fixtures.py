"""Hand-built curves with independently derived multiplicities.

Every expected value in the tests that import from here was computed by
hand (vertex determinants, Laplace expansions, lattice point counts)
before the library code existed, so these fixtures act as the oracle for
the curve machinery.
"""

from fractions import Fraction

from tropicount.tropical_core import Edge, TropicalCurve

F = Fraction


def line_curve() -> TropicalCurve:
    """Degree-1 curve in the plane through two points; multiplicity 1."""
    positions = {
        1: (0, 0),
        2: (-2, 0),
        3: (1, 1),
    }
    edges = [
        Edge(1, 2, 1, (-1, 0), F(2)),
        Edge(2, None, 1, (-1, 0)),
        Edge(2, None, 0, (0, 0), marking="p1"),
        Edge(1, 3, 1, (1, 1), F(1)),
        Edge(3, None, 1, (1, 1)),
        Edge(3, None, 0, (0, 0), marking="p2"),
        Edge(1, None, 1, (0, -1)),
    ]
    return TropicalCurve(positions, edges)


def vertex3_curve() -> TropicalCurve:
    """Single vertex with star (-2,1), (1,-2), (1,1); multiplicity 3."""
    positions = {1: (0, 0), 2: (-2, 1), 3: (1, -2)}
    edges = [
        Edge(1, 2, 1, (-2, 1), F(1)),
        Edge(2, None, 1, (-2, 1)),
        Edge(2, None, 0, (0, 0), marking="p1"),
        Edge(1, 3, 1, (1, -2), F(1)),
        Edge(3, None, 1, (1, -2)),
        Edge(3, None, 0, (0, 0), marking="p2"),
        Edge(1, None, 1, (1, 1)),
    ]
    return TropicalCurve(positions, edges)


def crossing_cycle_curve() -> TropicalCurve:
    """Genus-1 curve whose cycle closes through a contracted crossing edge.

    The cycle momenta span an index-2 lattice, the crossing pair is
    (2,1) x (0,1) with lattice area 2, and the curve obtained by removing
    the contracted edge has multiplicity 8; hand expansion of the full
    evaluation-and-cycle matrix gives |det| = 16.
    """
    positions = {
        1: (0, 0),            # A
        2: (2, 1),            # B
        3: (2, 0),            # C
        4: (1, 0),            # D
        5: (1, 2),            # E
        6: (1, F(1, 2)),      # X1 on the A-B edge
        7: (1, F(1, 2)),      # X2 on the D-E edge, same image point
        8: (-1, -1),
        9: (-2, 0),
        10: (3, 2),
        11: (4, -1),
        12: (-3, -2),
        13: (0, 3),
    }
    edges = [
        Edge(1, 8, 1, (-1, -1), F(1)),
        Edge(8, None, 1, (-1, -1)),
        Edge(8, None, 0, (0, 0), marking="p1"),
        Edge(1, 9, 1, (-1, 0), F(2)),
        Edge(9, None, 1, (-1, 0)),
        Edge(9, None, 0, (0, 0), marking="p2"),
        Edge(1, 6, 1, (2, 1), F(1, 2)),
        Edge(6, 2, 1, (2, 1), F(1, 2)),
        Edge(2, 10, 2, (1, 1), F(1, 2)),
        Edge(10, None, 2, (1, 1)),
        Edge(10, None, 0, (0, 0), marking="p3"),
        Edge(2, 3, 1, (0, -1), F(1)),
        Edge(3, 11, 1, (2, -1), F(1)),
        Edge(11, None, 1, (2, -1)),
        Edge(11, None, 0, (0, 0), marking="p4"),
        Edge(3, 4, 2, (-1, 0), F(1, 2)),
        Edge(4, 12, 1, (-2, -1), F(2)),
        Edge(12, None, 1, (-2, -1)),
        Edge(12, None, 0, (0, 0), marking="p5"),
        Edge(4, 7, 1, (0, 1), F(1, 2)),
        Edge(7, 5, 1, (0, 1), F(3, 2)),
        Edge(5, 13, 1, (-1, 1), F(1)),
        Edge(13, None, 1, (-1, 1)),
        Edge(13, None, 0, (0, 0), marking="p6"),
        Edge(5, None, 1, (1, 0)),
        Edge(6, 7, 0, (0, 0), F(1)),  # contracted crossing edge
    ]
    return TropicalCurve(positions, edges)


def triangle_cycle_curve() -> TropicalCurve:
    """Planar triangle cycle with ends (-1,-1), (2,-1), (-1,2); |det| = 9."""
    positions = {
        1: (0, 0),
        2: (2, 0),
        3: (0, 2),
        4: (-1, -1),
        5: (4, -1),
    }
    edges = [
        Edge(1, 2, 1, (1, 0), F(2)),
        Edge(2, 3, 1, (-1, 1), F(2)),
        Edge(3, 1, 1, (0, -1), F(2)),
        Edge(1, 4, 1, (-1, -1), F(1)),
        Edge(4, None, 1, (-1, -1)),
        Edge(4, None, 0, (0, 0), marking="p1"),
        Edge(2, 5, 1, (2, -1), F(1)),
        Edge(5, None, 1, (2, -1)),
        Edge(5, None, 0, (0, 0), marking="p2"),
        Edge(3, None, 1, (-1, 2)),
    ]
    return TropicalCurve(positions, edges)


def flat_bulge_curve(centered: bool = True) -> TropicalCurve:
    """Flat cycle of arc weights (1, 1) inside a weight-2 horizontal edge.

    The flattened curve has multiplicity 4*2*2 = 16, so the cycle formula
    gives (1+1)*16 = 32.  With centered=True the bulge sits at equal
    distances 1/2 from both departure vertices (well spaced); otherwise at
    distances 1/4 and 5/4 (not well spaced).
    """
    if centered:
        p, q, arc = F(9, 2), F(11, 2), F(1)
    else:
        p, q, arc = F(17, 4), F(19, 4), F(1, 2)
    positions = {
        1: (0, 0),        # A
        2: (4, 1),        # B
        3: (p, 1),        # P
        4: (q, 1),        # Q
        5: (6, 1),        # C
        6: (0, -1),
        7: (-4, 0),
        8: (6, 2),
        9: (7, 2),
    }
    edges = [
        Edge(1, 6, 1, (0, -1), F(1)),
        Edge(6, None, 1, (0, -1)),
        Edge(6, None, 0, (0, 0), marking="p1"),
        Edge(1, 7, 4, (-1, 0), F(1)),
        Edge(7, None, 4, (-1, 0)),
        Edge(7, None, 0, (0, 0), marking="p2"),
        Edge(1, 2, 1, (4, 1), F(1)),
        Edge(2, 8, 1, (2, 1), F(1)),
        Edge(8, None, 1, (2, 1)),
        Edge(8, None, 0, (0, 0), marking="p3"),
        Edge(2, 3, 2, (1, 0), (p - 4) / 2),
        Edge(3, 4, 1, (1, 0), q - p),
        Edge(3, 4, 1, (1, 0), q - p),
        Edge(4, 5, 2, (1, 0), (6 - q) / 2),
        Edge(5, 9, 1, (1, 1), F(1)),
        Edge(9, None, 1, (1, 1)),
        Edge(9, None, 0, (0, 0), marking="p4"),
        Edge(5, None, 1, (1, -1)),
    ]
    return TropicalCurve(positions, edges)


def loop_at_vertex_curve() -> TropicalCurve:
    """Contracted loop at the 5-valent vertex of the degree-1 triangle star.

    Dual triangle of (-1,-1), (2,-1), (-1,2) has one interior point and the
    loopless curve has multiplicity 3, so the loop mult is 1 * 3 = 3.
    """
    positions = {1: (0, 0), 2: (-1, -1), 3: (2, -1)}
    edges = [
        Edge(1, 2, 1, (-1, -1), F(1)),
        Edge(2, None, 1, (-1, -1)),
        Edge(2, None, 0, (0, 0), marking="p1"),
        Edge(1, 3, 1, (2, -1), F(1)),
        Edge(3, None, 1, (2, -1)),
        Edge(3, None, 0, (0, 0), marking="p2"),
        Edge(1, None, 1, (-1, 2)),
        Edge(1, 1, 0, (0, 0), F(1)),  # contracted loop
    ]
    return TropicalCurve(positions, edges)


def loop_on_edge_curve() -> TropicalCurve:
    """Contracted loop on the interior of a weight-2 edge; mult (2-1)*16."""
    positions = {
        1: (0, 0),
        2: (4, 1),
        3: (5, 1),        # L, the 4-valent loop vertex
        4: (6, 1),
        5: (0, -1),
        6: (-4, 0),
        7: (6, 2),
        8: (7, 2),
    }
    edges = [
        Edge(1, 5, 1, (0, -1), F(1)),
        Edge(5, None, 1, (0, -1)),
        Edge(5, None, 0, (0, 0), marking="p1"),
        Edge(1, 6, 4, (-1, 0), F(1)),
        Edge(6, None, 4, (-1, 0)),
        Edge(6, None, 0, (0, 0), marking="p2"),
        Edge(1, 2, 1, (4, 1), F(1)),
        Edge(2, 7, 1, (2, 1), F(1)),
        Edge(7, None, 1, (2, 1)),
        Edge(7, None, 0, (0, 0), marking="p3"),
        Edge(2, 3, 2, (1, 0), F(1, 2)),
        Edge(3, 3, 0, (0, 0), F(1)),  # contracted loop
        Edge(3, 4, 2, (1, 0), F(1, 2)),
        Edge(4, 8, 1, (1, 1), F(1)),
        Edge(8, None, 1, (1, 1)),
        Edge(8, None, 0, (0, 0), marking="p4"),
        Edge(4, None, 1, (1, -1)),
    ]
    return TropicalCurve(positions, edges)


def kind2_string_curve() -> TropicalCurve:
    """Bidegree (2,0) curve on the second Hirzebruch surface whose planar
    cycle runs through the string and both unit connecting edges.

    The single component has multiplicity 1 and the connecting weights are
    (1, 1), so the decomposition formula gives 2*1*1*1 = 2.
    """
    positions = {
        1: (0, 0),        # G1
        2: (1, 1),        # G2
        3: (3, 2),        # G3
        4: (6, 3),        # G4
        5: (10, 4),       # G5
        6: (13, 5),       # G6
        7: (14, 4),       # S1
        8: (15, 5),       # S2
        9: (0, -2),
        10: (-2, 0),
        11: (-1, 1),
        12: (1, 2),
        13: (2, 3),
        14: (15, 6),
        15: (F(23, 2), F(9, 2)),  # marked point on the G5-G6 edge
    }
    edges = [
        Edge(1, 2, 1, (1, 1), F(1)),
        Edge(2, 3, 1, (2, 1), F(1)),
        Edge(3, 4, 1, (3, 1), F(1)),
        Edge(4, 5, 1, (4, 1), F(1)),
        Edge(5, 15, 1, (3, 1), F(1, 2)),
        Edge(15, None, 0, (0, 0), marking="p7"),
        Edge(15, 6, 1, (3, 1), F(1, 2)),
        Edge(5, 7, 1, (1, 0), F(4)),   # connector to the string, weight 1
        Edge(6, 8, 1, (1, 0), F(2)),   # connector to the string, weight 1
        Edge(7, 8, 1, (1, 1), F(1)),   # string edge
        Edge(7, None, 1, (0, -1)),     # string down end
        Edge(8, None, 1, (2, 1)),      # string up end
        Edge(1, 9, 1, (0, -1), F(2)),
        Edge(9, None, 1, (0, -1)),
        Edge(9, None, 0, (0, 0), marking="p1"),
        Edge(1, 10, 1, (-1, 0), F(2)),
        Edge(10, None, 1, (-1, 0)),
        Edge(10, None, 0, (0, 0), marking="p2"),
        Edge(2, 11, 1, (-1, 0), F(2)),
        Edge(11, None, 1, (-1, 0)),
        Edge(11, None, 0, (0, 0), marking="p3"),
        Edge(3, 12, 1, (-1, 0), F(2)),
        Edge(12, None, 1, (-1, 0)),
        Edge(12, None, 0, (0, 0), marking="p4"),
        Edge(4, 13, 1, (-1, 0), F(4)),
        Edge(13, None, 1, (-1, 0)),
        Edge(13, None, 0, (0, 0), marking="p5"),
        Edge(6, 14, 1, (2, 1), F(1)),
        Edge(14, None, 1, (2, 1)),
        Edge(14, None, 0, (0, 0), marking="p6"),
    ]
    return TropicalCurve(positions, edges)


def kind3_string_curve() -> TropicalCurve:
    """Bidegree (2,0) curve on the second Hirzebruch surface with a flat
    cycle of arc weights (1, 1) on the weight-2 connecting edge and one
    marked point on the string.

    The component multiplicity is 2, so the decomposition formula gives
    (equal arcs) w0 * Mult = 2 * 2 = 4, while flattening the cycle leaves a
    curve of multiplicity 4 and the deficiency-1 formula gives (1+1)*4 = 8.
    """
    positions = {
        1: (0, 0),        # G1
        2: (1, 1),        # G2
        3: (3, 2),        # G3
        4: (6, 3),        # G4
        5: (10, 4),       # G5
        6: (11, 4),       # P
        7: (13, 4),       # Q
        8: (14, 4),       # S1
        9: (16, 5),       # S2, carries the string's marked point
        10: (0, -2),
        11: (-2, 0),
        12: (-1, 1),
        13: (1, 2),
        14: (2, 3),
        15: (12, 5),
    }
    edges = [
        Edge(1, 2, 1, (1, 1), F(1)),
        Edge(2, 3, 1, (2, 1), F(1)),
        Edge(3, 4, 1, (3, 1), F(1)),
        Edge(4, 5, 1, (4, 1), F(1)),
        Edge(5, 6, 2, (1, 0), F(1, 2)),   # flank
        Edge(6, 7, 1, (1, 0), F(2)),      # arc
        Edge(6, 7, 1, (1, 0), F(2)),      # arc
        Edge(7, 8, 2, (1, 0), F(1, 2)),   # flank
        Edge(8, 9, 1, (2, 1), F(1)),      # string edge
        Edge(8, None, 1, (0, -1)),        # string down end
        Edge(9, None, 1, (2, 1)),         # string up end
        Edge(9, None, 0, (0, 0), marking="p7"),
        Edge(1, 10, 1, (0, -1), F(2)),
        Edge(10, None, 1, (0, -1)),
        Edge(10, None, 0, (0, 0), marking="p1"),
        Edge(1, 11, 1, (-1, 0), F(2)),
        Edge(11, None, 1, (-1, 0)),
        Edge(11, None, 0, (0, 0), marking="p2"),
        Edge(2, 12, 1, (-1, 0), F(2)),
        Edge(12, None, 1, (-1, 0)),
        Edge(12, None, 0, (0, 0), marking="p3"),
        Edge(3, 13, 1, (-1, 0), F(2)),
        Edge(13, None, 1, (-1, 0)),
        Edge(13, None, 0, (0, 0), marking="p4"),
        Edge(4, 14, 1, (-1, 0), F(4)),
        Edge(14, None, 1, (-1, 0)),
        Edge(14, None, 0, (0, 0), marking="p5"),
        Edge(5, 15, 1, (2, 1), F(1)),
        Edge(15, None, 1, (2, 1)),
        Edge(15, None, 0, (0, 0), marking="p6"),
    ]
    return TropicalCurve(positions, edges)
