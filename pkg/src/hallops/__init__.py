"""Exact operators on symmetric functions over Q(q^(1/2), t^(1/2)).

Subpackages: coefficient field (coeffs), the ring of symmetric functions
(symfunc), vertex-operator contour evaluation (vertexops), the shuffle
algebra (shuffle), elliptic-Hall-algebra relation checks (hallalg), and a
command-line front end (cli).
"""

from . import _poly

__version__ = "0.1.0"


def kernel_lane():
    """Name of the active polynomial-kernel lane (pure or cython)."""
    return _poly.LANE
