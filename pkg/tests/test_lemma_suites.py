"""Randomized determinant identity suites.

For each of the three reduction formulas (flat cycle, contracted loop,
string decomposition) we draw 200 random valid curves and check the closed
formula against the raw exact determinant of the corresponding
evaluation-plus-cycle system.  Seeds are fixed so failures reproduce.
"""

import random

from tropicount.tropical_core import (
    contracted_loop_raw_multiplicity,
    decompose_string_curve,
    deficiency,
    flat_cycle_raw_multiplicity,
    multiplicity_contracted_loop,
    multiplicity_flat_cycle,
    multiplicity_genus1_def0,
    multiplicity_string,
)

from generators import random_flat_curve, random_kind2_curve, random_loop_curve

TRIALS = 200


def test_flat_cycle_formula_matches_determinant():
    rng = random.Random(91201)
    nonzero = 0
    for _ in range(TRIALS):
        c = random_flat_curve(rng)
        assert deficiency(c) == 1
        lhs = multiplicity_flat_cycle(c)
        rhs = flat_cycle_raw_multiplicity(c)
        assert lhs == rhs
        nonzero += lhs != 0
    assert nonzero >= TRIALS // 2


def test_contracted_loop_formula_matches_determinant():
    rng = random.Random(47111)
    nonzero = 0
    for _ in range(TRIALS):
        c = random_loop_curve(rng)
        assert deficiency(c) == 2
        lhs = multiplicity_contracted_loop(c)
        rhs = contracted_loop_raw_multiplicity(c)
        assert lhs == rhs
        nonzero += lhs != 0
    assert nonzero >= TRIALS // 4


def test_string_decomposition_matches_determinant():
    rng = random.Random(260815)
    nonzero = 0
    for _ in range(TRIALS):
        c = random_kind2_curve(rng)
        dec = decompose_string_curve(c)
        assert dec.kind == 2
        lhs = multiplicity_string(dec)
        rhs = multiplicity_genus1_def0(c)
        assert lhs == rhs
        nonzero += lhs != 0
    assert nonzero >= TRIALS // 2
