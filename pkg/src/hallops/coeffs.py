"""Exact arithmetic in the field Q(q^(1/2), t^(1/2)).

Scalars are fractions of Laurent polynomials in two formal variables Q and T
with q = Q^2 and t = T^2, so every half-integer power of q and t has integer
exponents.  A ``Coeff`` is kept in canonical form:

* the denominator is a genuine polynomial touching exponent 0 in each
  variable (all common monomial factors are pushed into the numerator),
* numerator and denominator are coprime in Z[Q,T] with joint integer
  content 1,
* the denominator's lex-leading (Q before T) coefficient is positive.

Canonical form makes structural equality decide mathematical equality, which
the verification suites depend on.
"""

from fractions import Fraction
from math import gcd as _igcd

from . import _poly
from ._gcd import ONE as _PONE
from ._gcd import divexact, lead_key, poly_gcd


class PoleError(ZeroDivisionError):
    """Raised when a substitution point lies on the denominator's zero set."""


class HalfLaurent:
    """Laurent polynomial in Q, T with rational coefficients.

    Thin construction-side wrapper; all heavy arithmetic happens on the
    integer-normalized pairs inside ``Coeff``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for key, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[key] = c

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, HalfLaurent) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        res = HalfLaurent()
        res.terms = out
        return res

    def __mul__(self, other):
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    del out[k]
        res = HalfLaurent()
        res.terms = out
        return res

    def __repr__(self):
        return f"HalfLaurent({self.terms!r})"


def _clear_fractions(num_terms, den_terms):
    """Scale two Fraction dicts by a common rational into integer dicts."""
    lcm = 1
    for c in num_terms.values():
        lcm = lcm * c.denominator // _igcd(lcm, c.denominator)
    for c in den_terms.values():
        lcm = lcm * c.denominator // _igcd(lcm, c.denominator)
    num = {k: int(c * lcm) for k, c in num_terms.items()}
    den = {k: int(c * lcm) for k, c in den_terms.items()}
    return num, den


def _canon(num, den, coprime=False):
    """Normalize an integer num/den pair to canonical form."""
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return {}, {(0, 0): 1}
    cn = _poly.icontent(num)
    cd = _poly.icontent(den)
    c = _igcd(cn, cd)
    if c > 1:
        num = _poly.pquo_int(num, c)
        den = _poly.pquo_int(den, c)
    da, db = _poly.min_exps(den)
    if da or db:
        den = _poly.pshift(den, -da, -db)
        num = _poly.pshift(num, -da, -db)
    if not coprime and den != _PONE:
        na, nb = _poly.min_exps(num)
        npoly = _poly.pshift(num, -na, -nb) if (na or nb) else num
        g = poly_gcd(npoly, den)
        if g != _PONE:
            npoly = divexact(npoly, g)
            den = divexact(den, g)
            num = _poly.pshift(npoly, na, nb)
    if den[lead_key(den)] < 0:
        num = _poly.pneg(num)
        den = _poly.pneg(den)
    return num, den


class Coeff:
    """Element of Q(q^(1/2), t^(1/2)) in canonical num/den form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _raw=False):
        if _raw:
            self.num = num
            self.den = den
            return
        if isinstance(num, HalfLaurent):
            dterms = den.terms if isinstance(den, HalfLaurent) else {(0, 0): Fraction(1)}
            n, d = _clear_fractions(num.terms, dterms)
        else:
            n = {k: int(c) for k, c in num.items() if c}
            d = {(0, 0): 1} if den is None else {k: int(c) for k, c in den.items() if c}
        self.num, self.den = _canon(n, d)

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_int(n):
        if n == 0:
            return ZERO
        return Coeff({(0, 0): int(n)}, {(0, 0): 1}, _raw=True)

    @staticmethod
    def from_fraction(fr):
        fr = Fraction(fr)
        if not fr:
            return ZERO
        num = {(0, 0): fr.numerator}
        den = {(0, 0): fr.denominator}
        return Coeff(num, den, _raw=True)

    @staticmethod
    def monomial(qhalf, thalf, coeff=1):
        """coeff * Q^qhalf * T^thalf (exponents count half-powers of q, t)."""
        fr = Fraction(coeff)
        if not fr:
            return ZERO
        num = {(qhalf, thalf): fr.numerator}
        den = {(0, 0): fr.denominator}
        return Coeff(*_canon(num, den, coprime=True), _raw=True)

    # -- predicates ----------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == _PONE and self.den == _PONE

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Coeff.from_int(other)
        if not isinstance(other, Coeff):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(
            (frozenset(self.num.items()), frozenset(self.den.items()))
        )

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = Coeff.from_int(other)
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            num = _poly.padd(self.num, other.num)
            return Coeff(*_canon(num, dict(self.den)), _raw=True)
        num = _poly.padd(
            _poly.pmul(self.num, other.den), _poly.pmul(other.num, self.den)
        )
        den = _poly.pmul(self.den, other.den)
        return Coeff(*_canon(num, den), _raw=True)

    __radd__ = __add__

    def __neg__(self):
        return Coeff(_poly.pneg(self.num), self.den, _raw=True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Coeff.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = Coeff.from_int(other)
        if not self.num or not other.num:
            return ZERO
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        # cross-cancellation keeps the final pair coprime without a big gcd
        if d2 != _PONE:
            n1, d2 = _cross_cancel(n1, d2)
        if d1 != _PONE:
            n2, d1 = _cross_cancel(n2, d1)
        num = _poly.pmul(n1, n2)
        den = _poly.pmul(d1, d2)
        return Coeff(*_canon(num, den, coprime=True), _raw=True)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return Coeff(*_canon(dict(self.den), dict(self.num), coprime=True), _raw=True)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Coeff.from_int(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k == 0:
            return ONE
        base = self if k > 0 else self.inverse()
        out = base
        for _ in range(abs(k) - 1):
            out = out * base
        return out

    # -- other operations -----------------------------------------------

    def power_shift(self, k):
        """Ring homomorphism Q -> Q^k, T -> T^k (k nonzero)."""
        if k == 0:
            raise ValueError("power_shift requires k != 0")
        num = _poly.pexp_scale(self.num, k)
        den = _poly.pexp_scale(self.den, k)
        return Coeff(*_canon(num, den), _raw=True)

    def substitute(self, qhalf, thalf):
        """Evaluate at Q = qhalf, T = thalf (exact rationals, both nonzero)."""
        qv = Fraction(qhalf)
        tv = Fraction(thalf)
        if not qv or not tv:
            raise ValueError("substitution point must avoid Q = 0 and T = 0")
        dval = _eval_dict(self.den, qv, tv)
        if not dval:
            raise PoleError(f"denominator vanishes at Q={qhalf}, T={thalf}")
        return _eval_dict(self.num, qv, tv) / dval

    def __repr__(self):
        return f"Coeff({to_string(self)})"


def _cross_cancel(num, den):
    """Cancel the polynomial gcd of a Laurent num against a poly den."""
    if not num:
        return num, den
    na, nb = _poly.min_exps(num)
    npoly = _poly.pshift(num, -na, -nb) if (na or nb) else num
    g = poly_gcd(npoly, den)
    if g == _PONE:
        return num, den
    npoly = divexact(npoly, g)
    den = divexact(den, g)
    return _poly.pshift(npoly, na, nb), den


def _eval_dict(p, qv, tv):
    total = Fraction(0)
    for (a, b), c in p.items():
        total += c * qv**a * tv**b
    return total


ZERO = Coeff({}, {(0, 0): 1}, _raw=True)
ONE = Coeff({(0, 0): 1}, {(0, 0): 1}, _raw=True)


# -- named elements ------------------------------------------------------


def q_power(k=1):
    """q^k as a Coeff."""
    return Coeff.monomial(2 * k, 0)


def t_power(k=1):
    """t^k as a Coeff."""
    return Coeff.monomial(0, 2 * k)


def qt_half(k=1):
    """(qt)^(k/2) as a Coeff."""
    return Coeff.monomial(k, k)


def beta(k):
    """(q^(k/2) - q^(-k/2)) (t^(k/2) - t^(-k/2))."""
    if k < 1:
        raise ValueError("beta requires k >= 1")
    qpart = Coeff.monomial(k, 0) - Coeff.monomial(-k, 0)
    tpart = Coeff.monomial(0, k) - Coeff.monomial(0, -k)
    return qpart * tpart


def arith(a, b, op):
    """Field operation dispatch: op is one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise ZeroDivisionError("division by zero Coeff")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def power_shift(c, k):
    return c.power_shift(k)


def substitute(c, qhalf, thalf):
    return c.substitute(qhalf, thalf)


# -- text grammar ---------------------------------------------------------


def _term_str(key, c):
    a, b = key
    if a == 0 and b == 0:
        return str(c)
    parts = [str(c)]
    if a:
        parts.append(f"Q^{a}")
    if b:
        parts.append(f"T^{b}")
    return "*".join(parts)


def _side_str(p):
    if not p:
        return "0"
    keys = sorted(p, reverse=True)
    pieces = []
    for i, k in enumerate(keys):
        c = p[k]
        mag = _term_str(k, abs(c))
        if i == 0:
            pieces.append(mag if c > 0 else "-" + mag)
        else:
            pieces.append((" + " if c > 0 else " - ") + mag)
    return "".join(pieces)


def to_string(c):
    """Serialize to the ``(num)/(den)`` grammar; round-trips bit-exactly."""
    return f"({_side_str(c.num)})/({_side_str(c.den)})"


def _parse_term(tok):
    coeff = Fraction(1)
    a = b = 0
    saw_coeff = False
    for factor in tok.split("*"):
        factor = factor.strip()
        if factor.startswith("Q^"):
            a += int(factor[2:])
        elif factor == "Q":
            a += 1
        elif factor.startswith("T^"):
            b += int(factor[2:])
        elif factor == "T":
            b += 1
        else:
            coeff *= Fraction(factor)
            saw_coeff = True
    if not saw_coeff and a == 0 and b == 0:
        raise ValueError(f"cannot parse term {tok!r}")
    return (a, b), coeff


def _parse_side(text):
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    # split into signed terms at top level (no nested parentheses occur)
    terms = []
    sign = 1
    cur = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "+-" and (not cur or cur[-1] not in "^*/eE"):
            if "".join(cur).strip():
                terms.append((sign, "".join(cur).strip()))
                cur = []
                sign = 1
            sign *= -1 if ch == "-" else 1
        else:
            cur.append(ch)
        i += 1
    if "".join(cur).strip():
        terms.append((sign, "".join(cur).strip()))
    out = {}
    for s, tok in terms:
        key, c = _parse_term(tok)
        c *= s
        cc = out.get(key, Fraction(0)) + c
        if cc:
            out[key] = cc
        else:
            out.pop(key, None)
    return out


def parse(text):
    """Parse the ``(num)/(den)`` grammar back into a canonical Coeff."""
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"malformed Coeff text {text!r}")
    depth = 0
    split = -1
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0 and i + 1 < len(text) and text[i + 1] == "/":
                split = i
                break
    if split < 0:
        raise ValueError(f"malformed Coeff text {text!r}")
    num_text = text[1:split]
    den_part = text[split + 2 :]
    if not (den_part.startswith("(") and den_part.endswith(")")):
        raise ValueError(f"malformed Coeff text {text!r}")
    num = _parse_side(num_text)
    den = _parse_side(den_part[1:-1])
    hl_num = HalfLaurent(num)
    hl_den = HalfLaurent(den)
    if not hl_den:
        raise ZeroDivisionError("zero denominator in Coeff text")
    return Coeff(hl_num, hl_den)
