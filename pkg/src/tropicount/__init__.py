"""tropicount: exact counts of tropical curves on P2 and Hirzebruch surfaces.

The package computes rational curve counts (absolute and with boundary
tangency) and elliptic curve counts with fixed tropical j-invariant, entirely
in exact integer/rational arithmetic.  The five public modules:

``polygon_lattice``
    lattice polygons, tropical degrees, and the duality between them
``tropical_core``
    tropical curves, multiplicity rules by deficiency, strings,
    well-spacedness, wall resolutions
``rational_count``
    rational counting engines (sweep enumeration, WDVV recursion,
    brute-force oracle) and the direct genus-1 engine
``elliptic_formula``
    the fixed-j elliptic count as a sum over reducible degenerations
``cli``
    command line front end (``tropicount ...``)
"""

__version__ = "0.1.0"

from tropicount.polygon_lattice import (
    LatticePolygon,
    TropicalDegree,
    degree_relative,
    degree_standard,
    interior_lattice_points,
    pick_data,
    polygon_of_degree,
)
from tropicount.tropical_core import Edge, TropicalCurve
from tropicount.rational_count import (
    CountQuery,
    CountRecord,
    brute_force_enumerate,
    count_elliptic_direct,
    count_rational,
    wdvv_f1,
    wdvv_p2,
)
from tropicount.elliptic_formula import (
    CachedCounts,
    EllipticResult,
    PartitionTerm,
    elliptic_count,
    enumerate_terms,
    f1_elliptic,
    p2_elliptic,
)

__all__ = [
    "LatticePolygon",
    "TropicalDegree",
    "degree_relative",
    "degree_standard",
    "interior_lattice_points",
    "pick_data",
    "polygon_of_degree",
    "Edge",
    "TropicalCurve",
    "CountQuery",
    "CountRecord",
    "brute_force_enumerate",
    "count_elliptic_direct",
    "count_rational",
    "wdvv_f1",
    "wdvv_p2",
    "CachedCounts",
    "EllipticResult",
    "PartitionTerm",
    "elliptic_count",
    "enumerate_terms",
    "f1_elliptic",
    "p2_elliptic",
    "__version__",
]
