"""Kernel tests: determinants and exact solves against slow references."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from tropicount import _puredet
from tropicount._exact import det_int, lattice_index_rank2, primitive, solve_int


def det_reference(rows):
    """Cofactor expansion, exact. Only for tiny matrices."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * det_reference(minor)
        total += term if j % 2 == 0 else -term
    return total


def test_det_small_cases():
    assert det_int([]) == 1
    assert det_int([[7]]) == 7
    assert det_int([[2, 1], [1, 1]]) == 1
    assert det_int([[0, 1], [1, 0]]) == -1
    assert det_int([[1, 2], [2, 4]]) == 0


@settings(max_examples=200, deadline=None)
@given(
    st.integers(min_value=1, max_value=5).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(min_value=-30, max_value=30), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
)
def test_det_matches_cofactor_expansion(rows):
    assert det_int(rows) == det_reference(rows)


@settings(max_examples=100, deadline=None)
@given(
    st.integers(min_value=1, max_value=6).flatmap(
        lambda n: st.tuples(
            st.lists(
                st.lists(
                    st.integers(min_value=-20, max_value=20), min_size=n, max_size=n
                ),
                min_size=n,
                max_size=n,
            ),
            st.lists(st.integers(min_value=-50, max_value=50), min_size=n, max_size=n),
        )
    )
)
def test_solve_satisfies_system(mat_rhs):
    rows, rhs = mat_rhs
    x = solve_int(rows, rhs)
    if det_int(rows) == 0:
        assert x is None
        return
    assert x is not None
    for row, b in zip(rows, rhs):
        assert sum(Fraction(c) * xi for c, xi in zip(row, x)) == b


def test_pure_and_selected_kernels_agree():
    rows = [[3, -1, 4, 1], [5, 9, -2, 6], [5, 3, 5, 8], [9, 7, -9, 3]]
    rhs = [1, 2, 3, 4]
    assert det_int(rows) == _puredet.det_int(rows)
    assert solve_int(rows, rhs) == _puredet.solve_int(rows, rhs)


def test_lattice_index():
    assert lattice_index_rank2([(1, 0), (0, 1)]) == 1
    assert lattice_index_rank2([(2, 0), (0, 3)]) == 6
    assert lattice_index_rank2([(2, 0), (0, 3), (1, 1)]) == 1
    assert lattice_index_rank2([(2, 4), (1, 2)]) == 0
    assert lattice_index_rank2([(3, 6)]) == 0


def test_primitive():
    assert primitive((4, -6)) == ((2, -3), 2)
    assert primitive((0, 5)) == ((0, 1), 5)
    assert primitive((-3, 0)) == ((-1, 0), 3)
