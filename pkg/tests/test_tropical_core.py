"""Curve machinery tests against hand-computed fixtures.

The expected numbers live next to the fixtures in fixtures.py; they were
worked out on paper (determinant expansions, Pick counts) before the code
under test existed.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropicount.polygon_lattice import LatticePolygon, interior_lattice_points
from tropicount.tropical_core import (
    CombinatorialCell,
    Edge,
    StringDecomposition,
    TropicalCurve,
    cell_weight,
    check_balancing,
    contracted_edge_total,
    contracted_loop_raw_multiplicity,
    decompose_string_curve,
    deficiency,
    departure_distances,
    expected_contracted_edge_total,
    find_strings,
    flat_cycle_raw_multiplicity,
    is_simple,
    is_well_spaced,
    multiplicity_contracted_loop,
    multiplicity_flat_cycle,
    multiplicity_genus0,
    multiplicity_genus1_def0,
    multiplicity_string,
    polygon_of_ends,
    resolve_sixvalent,
)

from fixtures import (
    crossing_cycle_curve,
    flat_bulge_curve,
    kind2_string_curve,
    kind3_string_curve,
    line_curve,
    loop_at_vertex_curve,
    loop_on_edge_curve,
    triangle_cycle_curve,
    vertex3_curve,
)

F = Fraction

ALL_FIXTURES = [
    line_curve,
    vertex3_curve,
    crossing_cycle_curve,
    triangle_cycle_curve,
    flat_bulge_curve,
    loop_at_vertex_curve,
    loop_on_edge_curve,
    kind2_string_curve,
    kind3_string_curve,
]


# -- structural sanity ------------------------------------------------------


@pytest.mark.parametrize("make", ALL_FIXTURES)
def test_fixtures_balance(make):
    assert check_balancing(make())


def test_genus_and_deficiency():
    assert line_curve().genus == 0
    assert deficiency(crossing_cycle_curve()) == 0
    assert deficiency(triangle_cycle_curve()) == 0
    assert deficiency(flat_bulge_curve()) == 1
    assert deficiency(loop_at_vertex_curve()) == 2
    assert deficiency(loop_on_edge_curve()) == 2


def test_serialization_roundtrip():
    for make in ALL_FIXTURES:
        c = make()
        again = TropicalCurve.from_json(c.to_json())
        assert again.positions == c.positions
        assert again.edges == c.edges


# -- rational multiplicities -------------------------------------------------


def test_line_multiplicity():
    c = line_curve()
    assert multiplicity_genus0(c) == 1
    assert is_simple(c)
    assert contracted_edge_total(c) == 0
    assert expected_contracted_edge_total(c) == 0


def test_vertex3_multiplicity():
    c = vertex3_curve()
    assert multiplicity_genus0(c) == 3
    # single trivalent vertex: the dual triangle has one interior point
    assert contracted_edge_total(c) == 3


def test_non_rigid_rejected():
    c = line_curve()
    # drop one marking: the system is no longer square
    edges = [e for e in c.edges if e.marking != "p2"]
    short = TropicalCurve(dict(c.positions), edges)
    with pytest.raises(ValueError, match="non-rigid configuration"):
        multiplicity_genus0(short)


# -- genus 1, deficiency 0 ---------------------------------------------------


def test_crossing_cycle_multiplicity():
    assert multiplicity_genus1_def0(crossing_cycle_curve()) == 16


def test_triangle_cycle_multiplicity():
    assert multiplicity_genus1_def0(triangle_cycle_curve()) == 9
    assert is_well_spaced(triangle_cycle_curve())


# -- flat cycles ---------------------------------------------------------------


def test_flat_bulge_multiplicity_matches_determinant():
    for centered in (True, False):
        c = flat_bulge_curve(centered=centered)
        assert multiplicity_flat_cycle(c) == 32
        assert flat_cycle_raw_multiplicity(c) == 32


def test_departure_distances():
    assert departure_distances(flat_bulge_curve(centered=True)) == [F(1, 2), F(1, 2)]
    assert departure_distances(flat_bulge_curve(centered=False)) == [F(1, 4), F(5, 4)]


def test_well_spacedness():
    assert is_well_spaced(flat_bulge_curve(centered=True))
    assert not is_well_spaced(flat_bulge_curve(centered=False))
    assert is_well_spaced(loop_at_vertex_curve())


def test_marked_cycle_rejected():
    c = flat_bulge_curve()
    # pin a marked point onto one cycle vertex (vertex 3 sits on an arc)
    edges = list(c.edges) + [Edge(3, None, 0, (0, 0), marking="px")]
    marked = TropicalCurve(dict(c.positions), edges)
    with pytest.raises(ValueError, match="unsupported: marked cycle"):
        multiplicity_flat_cycle(marked)
    with pytest.raises(ValueError, match="unsupported: marked cycle"):
        flat_cycle_raw_multiplicity(marked)


# -- contracted loops ----------------------------------------------------------


def test_loop_multiplicities_match_determinants():
    v = loop_at_vertex_curve()
    assert multiplicity_contracted_loop(v) == 3
    assert contracted_loop_raw_multiplicity(v) == 3
    e = loop_on_edge_curve()
    assert multiplicity_contracted_loop(e) == 16
    assert contracted_loop_raw_multiplicity(e) == 16


# -- cell weights --------------------------------------------------------------


def test_cell_weight_flat():
    assert cell_weight(CombinatorialCell(1, (), (2, 1))) == 1
    assert cell_weight(CombinatorialCell(1, (), (2, 2))) == 1
    assert cell_weight(CombinatorialCell(1, (), (2, 2), marked_cycle=True)) == 2
    assert cell_weight(CombinatorialCell.of_curve(flat_bulge_curve())) == F(1, 2)


def test_cell_weight_loop():
    # loop on an edge of lattice length 3
    cell = CombinatorialCell(2, (), None, False, ((3, 0), (-3, 0)))
    assert cell_weight(cell) == 1
    assert cell_weight(CombinatorialCell.of_curve(loop_at_vertex_curve())) == 1


def test_cell_weight_planar_index():
    cell = CombinatorialCell(0, ((2, 1), (0, -1), (-2, 0), (0, 1)))
    assert cell_weight(cell) == 2
    assert cell_weight(CombinatorialCell.of_curve(crossing_cycle_curve())) == 2


# -- strings -------------------------------------------------------------------


def test_find_strings_path():
    # two free horizontal rays joined through unmarked vertices: one string
    strings = find_strings(kind2_string_curve())
    assert len(strings) == 1
    (s,) = strings
    assert not s.is_cycle
    assert len(s.edge_indices) == 3


def test_find_strings_all_ends_marked():
    c = line_curve()
    extra = []
    names = iter(["q1", "q2", "q3"])
    for _, e in c.end_edges():
        extra.append(Edge(e.tail, None, 0, (0, 0), marking=next(names)))
    blocked = TropicalCurve(dict(c.positions), list(c.edges) + extra)
    assert find_strings(blocked) == []


def test_find_strings_cycle():
    strings = find_strings(triangle_cycle_curve())
    assert len(strings) == 1
    assert strings[0].is_cycle


# -- string-type decomposition ---------------------------------------------------


def test_decompose_kind2():
    c = kind2_string_curve()
    dec = decompose_string_curve(c)
    assert dec.kind == 2
    assert dec.w0 == (1, 1)
    assert len(dec.components) == 1
    comp, weights = dec.components[0]
    assert weights == (1, 1)
    assert multiplicity_string(dec) == 2
    assert multiplicity_genus1_def0(c) == 2


def test_decompose_kind3():
    c = kind3_string_curve()
    dec = decompose_string_curve(c)
    assert dec.kind == 3
    assert dec.w0 == (1, 1)
    assert len(dec.components) == 1
    comp, weights = dec.components[0]
    assert weights == (2,)
    assert multiplicity_genus0(comp) == 2
    assert multiplicity_string(dec) == 4
    assert multiplicity_flat_cycle(c) == 8
    assert flat_cycle_raw_multiplicity(c) == 8


def test_decompose_rejects_planar_cycle():
    with pytest.raises(ValueError, match="not a string-type curve"):
        decompose_string_curve(crossing_cycle_curve())
    with pytest.raises(ValueError, match="not a string-type curve"):
        decompose_string_curve(triangle_cycle_curve())


def test_string_multiplicity_abstract():
    two_comp = StringDecomposition(
        2, (1, 1), [(None, (1, 1)), (None, (1,))], (), (1, 1)
    )
    assert multiplicity_string(two_comp) == 2
    unequal = StringDecomposition(3, (2, 1), [(None, (3,))], (), (1,))
    assert multiplicity_string(unequal) == 6
    equal = StringDecomposition(3, (1, 1), [(None, (2,))], (), (1,))
    assert multiplicity_string(equal) == 2


# -- six-valent resolutions -------------------------------------------------------


def test_resolve_triangle():
    fams = resolve_sixvalent(LatticePolygon([(0, 0), (3, 0), (0, 3)]), 1)
    assert len(fams) == 1
    assert sum(r.multiplicity for r in fams[0]) == 1


def test_resolve_triangle_without_interior():
    p = LatticePolygon([(0, 0), (2, 0), (0, 2)])
    assert interior_lattice_points(p) == 0
    assert resolve_sixvalent(p, 1) == []


def test_resolve_unit_square():
    assert resolve_sixvalent(LatticePolygon([(0, 0), (1, 0), (1, 1), (0, 1)]), 5) == []


def test_resolve_quadrilateral_families():
    p = LatticePolygon([(0, 0), (1, 0), (2, 2), (-3, 1)])
    assert interior_lattice_points(p) == 4
    fams = resolve_sixvalent(p, 2)
    assert len(fams) == 3
    for fam in fams:
        assert sum(r.multiplicity for r in fam) == 8


# -- invariance properties ---------------------------------------------------------


def _rescale(c: TropicalCurve, k: int) -> TropicalCurve:
    positions = {v: (k * x, k * y) for v, (x, y) in c.positions.items()}
    edges = [
        Edge(
            e.tail,
            e.head,
            e.weight,
            e.direction,
            None if e.length is None else e.length * k,
            e.marking,
        )
        for e in c.edges
    ]
    return TropicalCurve(positions, edges)


def _unimodular(c: TropicalCurve, mat, shift) -> TropicalCurve:
    (a, b), (d, e) = mat
    assert abs(a * e - b * d) == 1
    positions = {
        v: (a * x + b * y + shift[0], d * x + e * y + shift[1])
        for v, (x, y) in c.positions.items()
    }
    edges = []
    for ed in c.edges:
        dx, dy = ed.direction
        edges.append(
            Edge(
                ed.tail,
                ed.head,
                ed.weight,
                (a * dx + b * dy, d * dx + e * dy),
                ed.length,
                ed.marking,
            )
        )
    return TropicalCurve(positions, edges)


@pytest.mark.parametrize(
    "make", [crossing_cycle_curve, flat_bulge_curve, loop_at_vertex_curve]
)
@pytest.mark.parametrize("k", [2, 5])
def test_deficiency_rescale_invariant(make, k):
    c = make()
    assert deficiency(_rescale(c, k)) == deficiency(c)


def test_multiplicity_rescale_invariant():
    c = flat_bulge_curve()
    assert multiplicity_flat_cycle(_rescale(c, 3)) == 32
    assert flat_cycle_raw_multiplicity(_rescale(c, 3)) == 32


@pytest.mark.parametrize("mat", [((1, 1), (0, 1)), ((0, -1), (1, 0)), ((2, 1), (1, 1))])
def test_well_spaced_affine_invariant(mat):
    for centered, expect in ((True, True), (False, False)):
        c = _unimodular(flat_bulge_curve(centered=centered), mat, (7, -3))
        assert is_well_spaced(c) is expect


@pytest.mark.parametrize("mat", [((1, 1), (0, 1)), ((0, -1), (1, 0))])
def test_multiplicities_unimodular_invariant(mat):
    assert multiplicity_genus1_def0(
        _unimodular(crossing_cycle_curve(), mat, (1, 2))
    ) == 16
    assert multiplicity_contracted_loop(
        _unimodular(loop_on_edge_curve(), mat, (0, 0))
    ) == 16


# -- randomized harmonicity of six-valent resolutions -------------------------------


@st.composite
def convex_quadrilaterals(draw):
    pts = draw(
        st.lists(
            st.tuples(
                st.integers(min_value=-6, max_value=6),
                st.integers(min_value=-6, max_value=6),
            ),
            min_size=4,
            max_size=4,
            unique=True,
        )
    )
    hull = _convex_hull(pts)
    if len(hull) != 4:
        from hypothesis import assume

        assume(False)
    return LatticePolygon(hull)


def _convex_hull(points):
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts

    def half(seq):
        out = []
        for p in seq:
            while (
                len(out) >= 2
                and (out[-1][0] - out[-2][0]) * (p[1] - out[-2][1])
                - (out[-1][1] - out[-2][1]) * (p[0] - out[-2][0])
                <= 0
            ):
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


@settings(max_examples=120, deadline=None)
@given(p=convex_quadrilaterals(), m=st.integers(min_value=1, max_value=4))
def test_resolution_families_sum_to_interior(p, m):
    target = interior_lattice_points(p) * m
    fams = resolve_sixvalent(p, m)
    if target == 0:
        assert fams == []
    else:
        assert fams
        for fam in fams:
            assert sum(r.multiplicity for r in fam) == target


# -- Newton polygon from the end data -------------------------------------------------


def test_polygon_of_ends_triangle():
    conic = polygon_of_ends([((-1, 0), 2), ((0, -1), 2), ((1, 1), 2)])
    assert conic.area == 2
    assert interior_lattice_points(conic) == 0
    cubic = polygon_of_ends([((-1, 0), 3), ((0, -1), 3), ((1, 1), 3)])
    assert interior_lattice_points(cubic) == 1
