"""Kernel lane selection: compiled extension if available, pure Python otherwise.

The environment variable ``HALLOPS_KERNEL`` forces a lane (``pure`` /
``cython`` / ``auto``, default ``auto``).  ``activate`` rebinds the kernel
functions at runtime; callers import this module and reference functions
through it (``_poly.pmul(...)``) so that switching lanes takes effect
everywhere, which the lane-equivalence tests and the benchmark rely on.
"""

import os

from . import _poly_py

_KERNEL_FUNCS = (
    "padd",
    "psub",
    "pneg",
    "pmul",
    "pscale",
    "pshift",
    "pexp_scale",
    "icontent",
    "pquo_int",
    "min_exps",
)

LANE = "pure"


def _load_cython():
    from . import _poly_cy

    return _poly_cy


def available_lanes():
    lanes = ["pure"]
    try:
        _load_cython()
        lanes.append("cython")
    except ImportError:
        pass
    return lanes


def activate(lane):
    """Bind this module's kernel functions to the given lane."""
    global LANE
    if lane == "auto":
        lane = "cython" if "cython" in available_lanes() else "pure"
    if lane == "pure":
        mod = _poly_py
    elif lane == "cython":
        mod = _load_cython()
    else:
        raise ValueError(f"unknown kernel lane {lane!r}")
    g = globals()
    for name in _KERNEL_FUNCS:
        g[name] = getattr(mod, name)
    LANE = lane
    return lane


activate(os.environ.get("HALLOPS_KERNEL", "auto"))
