"""Bivariate integer-polynomial gcd and exact division.

Inputs are coefficient dicts as in ``_poly`` with polynomial support
(no negative exponents).  The heavy lifting is delegated to sympy's
low-level dense polynomial ring over ZZ, which implements heuristic gcd
with a subresultant fallback; everything around it (fast paths, sign
conventions) is done on plain dicts to keep the hot paths cheap.
"""

from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

from . import _poly

_RING, _GQ, _GT = ring("Q,T", ZZ)

ONE = {(0, 0): 1}


def _to_ring(p):
    return _RING.from_dict({k: ZZ(c) for k, c in p.items()})


def _from_ring(e):
    return {(int(a), int(b)): int(c) for (a, b), c in e.items()}


def lead_key(p):
    """Largest exponent pair under lex order (Q before T)."""
    return max(p)


def normalize_sign(p):
    """Scale by -1 if the lex-leading coefficient is negative."""
    if p and p[lead_key(p)] < 0:
        return _poly.pneg(p)
    return dict(p)


def poly_gcd(p, q):
    """Gcd in Z[Q,T] with positive lex-leading coefficient.

    Both inputs must have polynomial support.  gcd(p, 0) = +-p.
    """
    if not p:
        return normalize_sign(q)
    if not q:
        return normalize_sign(p)
    cp = _poly.icontent(p)
    cq = _poly.icontent(q)
    c = _igcd(cp, cq)
    pp = _poly.pquo_int(p, cp)
    qq = _poly.pquo_int(q, cq)
    if pp == qq:
        return _poly.pscale(normalize_sign(pp), c)
    if pp == _poly.pneg(qq):
        return _poly.pscale(normalize_sign(pp), c)
    if len(pp) == 1 or len(qq) == 1:
        # a monomial gcd: componentwise min of supports
        ap, bp = _poly.min_exps(pp)
        aq, bq = _poly.min_exps(qq)
        return {(min(ap, aq), min(bp, bq)): c}
    # strip common monomial factors before handing off
    ap, bp = _poly.min_exps(pp)
    aq, bq = _poly.min_exps(qq)
    ma, mb = min(ap, aq), min(bp, bq)
    g = _to_ring(_poly.pshift(pp, -ap, -bp)).gcd(_to_ring(_poly.pshift(qq, -aq, -bq)))
    out = _poly.pshift(_from_ring(g), ma, mb)
    return _poly.pscale(normalize_sign(out), c)


def divexact(p, g):
    """Exact quotient p / g of dicts with polynomial support.

    Raises ValueError when the division is not exact.
    """
    if not p:
        return {}
    if g == ONE:
        return dict(p)
    if len(g) == 1:
        (da, db), gc = next(iter(g.items()))
        out = {}
        for (a, b), c in p.items():
            if c % gc:
                raise ValueError("inexact division")
            out[(a - da, b - db)] = c // gc
        if min(min_a for min_a, _ in out) < 0 or min(min_b for _, min_b in out) < 0:
            raise ValueError("inexact division")
        return out
    quo, rem = divmod(_to_ring(p), _to_ring(g))
    if rem:
        raise ValueError("inexact division")
    return _from_ring(quo)


def _igcd(a, b):
    while b:
        a, b = b, a % b
    return a if a >= 0 else -a
