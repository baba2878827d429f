"""The shuffle algebra: symmetric rational functions with the omega-twisted
symmetrized product.

Elements live over the canonical denominator
prod_(i != j) (z_i - q z_j)(z_i - t z_j), stored as Laurent-polynomial
numerators with Coeff coefficients (dict mapping exponent tuples to Coeff).
All products and equality tests are exact polynomial arithmetic; nothing is
ever evaluated numerically.
"""

import itertools
import json
from functools import lru_cache
from math import gcd

from . import _linalg
from .coeffs import ONE, ZERO, Coeff, beta, parse, q_power, qt_half, t_power, to_string

# ---------------------------------------------------------------------------
# multivariate Laurent polynomials over Coeff
# ---------------------------------------------------------------------------


def mv_add(a, b):
    out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        s = c if s is None else s + c
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def mv_scale(a, c):
    if c.is_zero():
        return {}
    return {k: c * v for k, v in a.items()}


def mv_mul(a, b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            k = tuple(x + y for x, y in zip(k1, k2))
            s = out.get(k)
            term = c1 * c2
            s = term if s is None else s + term
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
    return out


def _linear(n, i, j, c):
    """The binomial z_i - c * z_j as an exponent dict (1-based indices)."""
    ei = tuple(1 if v == i else 0 for v in range(1, n + 1))
    ej = tuple(1 if v == j else 0 for v in range(1, n + 1))
    out = {ei: ONE}
    mc = -c
    if not mc.is_zero():
        out[ej] = mc
    return out


def mv_divide_linear(num, n, i, j, c):
    """Exact division by (z_i - c z_j); returns None when not divisible."""
    if not num:
        return {}
    ii, jj = i - 1, j - 1
    shift = min(k[ii] for k in num)
    if shift:
        num = {k[:ii] + (k[ii] - shift,) + k[ii + 1 :]: v for k, v in num.items()}
    layers = {}
    for k, v in num.items():
        layers.setdefault(k[ii], {})[k] = v
    kmax = max(layers)
    quot = {}
    carry = {}  # c * z_j * (previous quotient layer), at the current z_i level
    for level in range(kmax, -1, -1):
        cur = dict(layers.get(level, {}))
        for k, v in carry.items():
            s = cur.get(k)
            s = v if s is None else s + v
            if s.is_zero():
                cur.pop(k, None)
            else:
                cur[k] = s
        if level == 0:
            if cur:
                return None
            break
        # quotient layer at z_i^(level-1): entries keep their full exponent
        # keys but with the z_i entry lowered by one
        carry = {}
        for k, v in cur.items():
            qk = k[:ii] + (k[ii] - 1,) + k[ii + 1 :]
            quot[qk] = v
            ck = qk[:jj] + (qk[jj] + 1,) + qk[jj + 1 :]
            cv = c * v
            if not cv.is_zero():
                s = carry.get(ck)
                s = cv if s is None else s + cv
                if s.is_zero():
                    carry.pop(ck, None)
                else:
                    carry[ck] = s
    if shift:
        quot = {k[:ii] + (k[ii] + shift,) + k[ii + 1 :]: v for k, v in quot.items()}
    return quot


def mv_substitute_ratio(num, n, assignments):
    """Substitute z_i -> alpha_i * z_base for (i, alpha_i) pairs; the
    substituted variables' exponents collapse onto the base variable."""
    out = {}
    for k, v in num.items():
        coeff = v
        newk = list(k)
        for (i, base, alpha) in assignments:
            e = newk[i - 1]
            if e:
                coeff = coeff * alpha**e
                newk[base - 1] += e
                newk[i - 1] = 0
        key = tuple(newk)
        s = out.get(key)
        s = coeff if s is None else s + coeff
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s
    return out


# ---------------------------------------------------------------------------
# ShuffleElem
# ---------------------------------------------------------------------------


class ShuffleElem:
    """Symmetric rational function over the canonical pole structure.

    num maps exponent tuples of length n to Coeff; the denominator is
    prod_(i != j) (z_i - q z_j)(z_i - t z_j) ("wheel" form).  n = 0 elements
    are scalars.
    """

    __slots__ = ("n", "num")

    def __init__(self, n, num):
        self.n = n
        self.num = {k: v for k, v in num.items() if not v.is_zero()}

    @staticmethod
    def unit(coeff=ONE):
        return ShuffleElem(0, {(): coeff})

    @staticmethod
    def monomial(word):
        """One-variable generators composed: here just z_1^m for len-1 word."""
        word = tuple(word)
        if len(word) != 1:
            raise ValueError("monomial expects a single exponent")
        return ShuffleElem(1, {(word[0],): ONE})

    def is_zero(self):
        return not self.num

    def __eq__(self, other):
        return (
            isinstance(other, ShuffleElem)
            and self.n == other.n
            and self.num == other.num
        )

    def scale(self, c):
        return ShuffleElem(self.n, mv_scale(self.num, c))

    def __repr__(self):
        return f"ShuffleElem(n={self.n}, {len(self.num)} terms)"

    def is_symmetric(self):
        for sigma in itertools.permutations(range(self.n)):
            for k, v in self.num.items():
                kk = tuple(k[sigma[i]] for i in range(self.n))
                if not (self.num.get(kk, ZERO) == v):
                    return False
        return True


@lru_cache(maxsize=None)
def _omega_factors(n, a, b):
    """Numerator factors of omega(z_a/z_b) plus the complementary canonical
    denominator factors for the ordered pair (a, b): the product
    (z_a - z_b)(z_a - qt z_b)(z_b - q z_a)(z_b - t z_a)."""
    q = q_power(1)
    t = t_power(1)
    out = _linear(n, a, b, ONE)
    out = mv_mul(out, _linear(n, a, b, qt_half(2)))
    out = mv_mul(out, _linear(n, b, a, q))
    out = mv_mul(out, _linear(n, b, a, t))
    return out


def _mono_num(n, exps, coeff=ONE):
    return {tuple(exps): coeff}


def word_elem(word):
    """Sym[z_1^m1 ... z_n^mn prod_(i<j) omega(z_i/z_j)] over the canonical
    denominator."""
    word = tuple(word)
    n = len(word)
    if n == 0:
        raise ValueError("empty word")
    if n == 1:
        return ShuffleElem(1, {(word[0],): ONE})
    total = {}
    for sigma in itertools.permutations(range(1, n + 1)):
        exps = [0] * n
        for pos, var in enumerate(sigma):
            exps[var - 1] = word[pos]
        term = _mono_num(n, exps)
        for i in range(n):
            for j in range(i + 1, n):
                term = mv_mul(term, _omega_factors(n, sigma[i], sigma[j]))
        total = mv_add(total, term)
    return ShuffleElem(n, total)


def shuffle_mul(P, Pp):
    """The omega-twisted product, summed over shuffles of the variables."""
    if P.n == 0:
        return Pp.scale(P.num.get((), ZERO)) if P.num else ShuffleElem(Pp.n, {})
    if Pp.n == 0:
        return P.scale(Pp.num.get((), ZERO)) if Pp.num else ShuffleElem(P.n, {})
    n, m = P.n, Pp.n
    N = n + m
    total = {}
    for A in itertools.combinations(range(1, N + 1), n):
        B = tuple(v for v in range(1, N + 1) if v not in A)
        term = {}
        for k, v in P.num.items():
            exps = [0] * N
            for pos, var in enumerate(A):
                exps[var - 1] = k[pos]
            term[tuple(exps)] = v
        term2 = {}
        for k, v in Pp.num.items():
            exps = [0] * N
            for pos, var in enumerate(B):
                exps[var - 1] = k[pos]
            term2[tuple(exps)] = v
        term = mv_mul(term, term2)
        for a in A:
            for b in B:
                term = mv_mul(term, _omega_factors(N, a, b))
        total = mv_add(total, term)
    return ShuffleElem(N, total)


def rat_eq(P, Pp):
    """Exact equality of the rational functions (same variable count)."""
    if P.n != Pp.n:
        raise ValueError("rat_eq requires the same variable count")
    return P.num == Pp.num


# ---------------------------------------------------------------------------
# membership in the shuffle algebra
# ---------------------------------------------------------------------------

_WHEEL_VALUES = None


def _wheel_assignments():
    global _WHEEL_VALUES
    if _WHEEL_VALUES is None:
        vals = (q_power(1), t_power(1), (q_power(1) * t_power(1)).inverse())
        out = []
        for A, B, C in itertools.permutations(vals):
            out.append((A * B, B))
        dedup = []
        for pair in out:
            if pair not in dedup:
                dedup.append(pair)
        _WHEEL_VALUES = tuple(dedup)
    return _WHEEL_VALUES


def is_in_S(P, with_diagnostics=False):
    """Membership test: the eqn-shuf pole shape plus the wheel conditions.

    Returns a bool, or (bool, diagnostics dict) with with_diagnostics.
    """
    diag = {"form": True, "wheel": True, "detail": ""}
    n = P.n
    if n <= 1:
        if with_diagnostics:
            return True, diag
        return True
    num = dict(P.num)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for _ in range(2):
                nxt = mv_divide_linear(num, n, i, j, ONE)
                if nxt is None:
                    diag["form"] = False
                    diag["detail"] = f"numerator not divisible by (z_{i} - z_{j})^2"
                    if with_diagnostics:
                        return False, diag
                    return False
                num = nxt
    # num is now the symmetric Laurent polynomial p of the canonical form
    if n >= 3:
        for alpha, beta_val in _wheel_assignments():
            subbed = mv_substitute_ratio(
                num, n, ((1, 3, alpha), (2, 3, beta_val))
            )
            if subbed:
                diag["wheel"] = False
                diag["detail"] = "wheel substitution does not vanish"
                if with_diagnostics:
                    return False, diag
                return False
    if with_diagnostics:
        return True, diag
    return True


# ---------------------------------------------------------------------------
# the distinguished elements
# ---------------------------------------------------------------------------


def _chain_cancelled_base(n, mono, extra_terms):
    """Numerator of z^mono * extras / prod(1 - qt z_(i+1)/z_i) times
    prod_(i<j) omega(z_i/z_j), with the chain denominators cancelled against
    the (z_i - qt z_j) omega numerator factors, for the identity ordering.

    Returns the numerator Laurent dict for the identity permutation; the
    canonical-denominator complement factors for sigma = id are included.
    """
    q = q_power(1)
    t = t_power(1)
    qt = qt_half(2)
    base = {}
    for vec, coeff in extra_terms.items():
        exps = tuple(m + v for m, v in zip(mono, vec))
        cur = base.get(exps)
        cur = coeff if cur is None else cur + coeff
        if cur.is_zero():
            base.pop(exps, None)
        else:
            base[exps] = cur
    # chain cancellation: each (1 - qt z_{i+1}/z_i)^{-1} = z_i / (z_i - qt z_{i+1})
    chain_mono = [0] * n
    for i in range(1, n):
        chain_mono[i - 1] += 1
    base = mv_mul(base, _mono_num(n, chain_mono))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            base = mv_mul(base, _linear(n, i, j, ONE))
            if j != i + 1:
                base = mv_mul(base, _linear(n, i, j, qt))
            base = mv_mul(base, _linear(n, j, i, q))
            base = mv_mul(base, _linear(n, j, i, t))
    return base


def _symmetrize(n, base):
    total = {}
    for sigma in itertools.permutations(range(1, n + 1)):
        if sigma == tuple(range(1, n + 1)):
            total = mv_add(total, base)
            continue
        term = {}
        for k, v in base.items():
            kk = [0] * n
            for pos in range(n):
                kk[sigma[pos] - 1] = k[pos]
            term[tuple(kk)] = v
        total = mv_add(total, term)
    return total


def P_mn(m, n):
    """The symmetric rational function generating the (m, n) ray."""
    if n < 1:
        raise ValueError("P_mn requires n >= 1")
    g = gcd(abs(m), n) if m else n
    a = n // g
    mono = [(i * m) // n - ((i - 1) * m) // n for i in range(1, n + 1)]
    extras = {}
    zero = (0,) * n
    for x in range(g):
        vec = list(zero)
        for y in range(1, x + 1):
            hi = a * (g - y) + 1
            lo = a * (g - y)
            vec[hi - 1] += 1
            vec[lo - 1] -= 1
        key = tuple(vec)
        extras[key] = extras.get(key, ZERO) + qt_half(2 * x)
    base = _chain_cancelled_base(n, mono, extras)
    total = _symmetrize(n, base)
    denom = (q_power(g) - ONE) * (t_power(g) - ONE)
    pref = ((q_power(1) - ONE) ** n) * ((t_power(1) - ONE) ** n) * denom.inverse()
    return ShuffleElem(n, mv_scale(total, pref))


def upsilon_ribbon(m, n, eps, k, subscript="i_over_n"):
    """Image of the ribbon Schur function s_eps under the (m, n) embedding.

    subscript selects the reading of the epsilon indices in the displayed
    formula: "i_over_n" (default; reproduces the ribbon eigenoperator kernel
    at (m, n) = (0, 1)) or "i_over_k" (the printed subscript).
    """
    if gcd(abs(m), n) != 1:
        raise ValueError("upsilon_ribbon requires gcd(m, n) = 1")
    eps = tuple(int(x) for x in eps)
    if any(x not in (0, 1) for x in eps):
        raise ValueError("ribbon word entries must be 0 or 1")
    if len(eps) != k - 1:
        raise ValueError("ribbon word length must be k - 1")
    N = k * n

    def eps_at(x):
        # eps_x = 0 unless x in {1, .., k-1}
        return eps[x - 1] if 1 <= x <= k - 1 else 0

    divisor = n if subscript == "i_over_n" else k
    if subscript not in ("i_over_n", "i_over_k"):
        raise ValueError(f"unknown subscript convention {subscript!r}")
    mono = []
    for i in range(1, N + 1):
        e_i = eps_at(i // divisor) if i % divisor == 0 else 0
        e_prev = eps_at((i - 1) // divisor) if (i - 1) % divisor == 0 else 0
        mono.append((i * m) // n - ((i - 1) * m) // n - e_i + e_prev)
    ones = sum(eps)
    pref = Coeff.monomial(2 * ones, 2 * ones, (-1) ** ones)
    base = _chain_cancelled_base(N, mono, {(0,) * N: ONE})
    total = _symmetrize(N, base)
    return ShuffleElem(N, mv_scale(total, pref))


# ---------------------------------------------------------------------------
# linear relations
# ---------------------------------------------------------------------------


def words_of_degree(length, total, lo, hi):
    """All words of the given length and total degree with entries in [lo, hi]."""
    return [
        w
        for w in itertools.product(range(lo, hi + 1), repeat=length)
        if sum(w) == total
    ]


def find_linear_relations(words):
    """Exact kernel of the evaluation map word -> rational function.

    All words must share their length (the variable count); mixed total
    degrees are admitted (relations then pair equal-degree pieces only).
    Returns a list of Coeff-vector relations, one per kernel basis element.
    """
    words = [tuple(w) for w in words]
    if not words:
        return []
    n = len(words[0])
    for w in words:
        if len(w) != n:
            raise ValueError("words must share their length")
    elems = [word_elem(w) for w in words]
    support = sorted(set().union(*[set(e.num) for e in elems]))
    if not support:
        return [
            [ONE if i == j else ZERO for i in range(len(words))]
            for j in range(len(words))
        ]
    rows = [[e.num.get(k, ZERO) for e in elems] for k in support]
    return _linalg.nullspace(rows)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def to_text(P):
    terms = [
        {"exp": list(k), "coeff": to_string(P.num[k])}
        for k in sorted(P.num, reverse=True)
    ]
    return json.dumps({"n": P.n, "den": "wheel", "num": terms})


def from_text(text):
    data = json.loads(text)
    if data.get("den") != "wheel":
        raise ValueError("only the canonical denominator form is serialized")
    num = {tuple(t["exp"]): parse(t["coeff"]) for t in data["num"]}
    return ShuffleElem(int(data["n"]), num)
