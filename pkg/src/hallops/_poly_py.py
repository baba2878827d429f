"""Pure-Python kernels for sparse bivariate Laurent polynomials.

A polynomial is a dict mapping exponent pairs ``(a, b)`` (powers of the two
formal variables) to nonzero integer coefficients.  The zero polynomial is the
empty dict.  These functions are the innermost loops of all field arithmetic;
a compiled twin with the same signatures lives in ``_poly_cy.pyx``.
"""

LANE = "pure"


def padd(p, q):
    if not p:
        return dict(q)
    if not q:
        return dict(p)
    out = dict(p)
    for k, c in q.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            del out[k]
    return out


def psub(p, q):
    if not q:
        return dict(p)
    out = dict(p)
    for k, c in q.items():
        s = out.get(k, 0) - c
        if s:
            out[k] = s
        else:
            del out[k]
    return out


def pneg(p):
    return {k: -c for k, c in p.items()}


def pmul(p, q):
    if not p or not q:
        return {}
    if len(p) > len(q):
        p, q = q, p
    out = {}
    for (a1, b1), c1 in p.items():
        for (a2, b2), c2 in q.items():
            k = (a1 + a2, b1 + b2)
            s = out.get(k, 0) + c1 * c2
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def pscale(p, c):
    if c == 0:
        return {}
    if c == 1:
        return dict(p)
    return {k: v * c for k, v in p.items()}


def pshift(p, da, db):
    if da == 0 and db == 0:
        return dict(p)
    return {(a + da, b + db): c for (a, b), c in p.items()}


def pexp_scale(p, m):
    """Map every monomial Q^a T^b to Q^(m*a) T^(m*b)."""
    if m == 1:
        return dict(p)
    return {(m * a, m * b): c for (a, b), c in p.items()}


def icontent(p):
    """Gcd of all coefficients (0 for the zero polynomial)."""
    g = 0
    for c in p.values():
        if c < 0:
            c = -c
        while c:
            g, c = c, g % c
        if g == 1:
            return 1
    return g


def pquo_int(p, n):
    """Divide every coefficient by the integer n (must be exact)."""
    if n == 1:
        return dict(p)
    return {k: c // n for k, c in p.items()}


def min_exps(p):
    """Componentwise minimum of the exponent pairs (p nonempty)."""
    it = iter(p)
    a0, b0 = next(it)
    for a, b in it:
        if a < a0:
            a0 = a
        if b < b0:
            b0 = b
    return a0, b0
