"""Exact arithmetic facade.

Selects the compiled kernel when present (and not disabled via the
TROPICOUNT_PURE environment variable) and adds the small lattice helpers the
multiplicity rules need.  Everything here is deterministic and pure.
"""

import math
import os

if os.environ.get("TROPICOUNT_PURE"):
    from tropicount import _puredet as _kernel

    USING_SPEEDUPS = False
else:
    try:
        from tropicount import _speedups as _kernel  # type: ignore[attr-defined]

        USING_SPEEDUPS = True
    except ImportError:
        from tropicount import _puredet as _kernel

        USING_SPEEDUPS = False

det_int = _kernel.det_int
solve_int = _kernel.solve_int


def lattice_index_rank2(columns):
    """Index in Z^2 of the sublattice spanned by integer column vectors.

    Returns 0 when the span has rank < 2 (infinite index).
    """
    g = 0
    cols = list(columns)
    for i in range(len(cols)):
        xi, yi = cols[i]
        for j in range(i + 1, len(cols)):
            xj, yj = cols[j]
            g = math.gcd(g, xi * yj - xj * yi)
    return g


def primitive(vec):
    """Primitive integer vector parallel to vec, plus the positive weight.

    (0, 0) is rejected: a direction must be nonzero.
    """
    x, y = vec
    g = math.gcd(x, y)
    if g == 0:
        raise ValueError("zero vector has no direction")
    return (x // g, y // g), g
