"""The ring of symmetric functions over Q(q^(1/2), t^(1/2)).

Elements are stored in the power-sum basis: a ``SymFunc`` maps partitions
(weakly decreasing tuples of positive ints) to ``Coeff`` values.  The module
provides basis conversions, the deformed inner product and its adjoints,
ribbon (rim-hook) skew Schur functions, spectral eigenvalues of the Macdonald
eigenoperators, and Macdonald polynomials realized as eigenvectors of the
degree-preserving operator D_1.
"""

import json
from functools import lru_cache

from . import _linalg
from .coeffs import ONE, ZERO, Coeff, beta, parse, q_power, t_power, to_string


class DegeneracyError(RuntimeError):
    """Eigenvalue collision while separating Macdonald eigenvectors."""


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------


def as_parts(lam):
    """Validate and normalize a partition-like input to a tuple."""
    if isinstance(lam, Partition):
        return lam.parts
    parts = tuple(int(x) for x in lam)
    if any(x <= 0 for x in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition parts must weakly decrease: {parts}")
    return parts


class Partition:
    """Weakly decreasing tuple of positive integers (empty allowed)."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        object.__setattr__(self, "parts", as_parts(parts))

    def __setattr__(self, *a):
        raise AttributeError("Partition is immutable")

    @property
    def size(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        return self.parts == tuple(other)

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts!r}"


@lru_cache(maxsize=None)
def partitions_of(d):
    """Partitions of d as tuples, in reverse-lexicographic order."""
    if d < 0:
        return ()
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(maxpart, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(d, d if d else 0, [])
    if d == 0:
        out = [()]
    out.sort(reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def z_factor(parts):
    """z_lambda = prod_k k^(m_k) m_k! for multiplicities m_k."""
    z = 1
    mult = {}
    for x in parts:
        mult[x] = mult.get(x, 0) + 1
    for k, m in mult.items():
        z *= k**m
        for j in range(1, m + 1):
            z *= j
    return z


# ---------------------------------------------------------------------------
# SymFunc
# ---------------------------------------------------------------------------


class SymFunc:
    """Finite Coeff-linear combination of power-sum basis elements."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for lam, c in terms.items():
                if isinstance(c, int):
                    c = Coeff.from_int(c)
                if not c.is_zero():
                    self.terms[as_parts(lam)] = c

    @staticmethod
    def _raw(terms):
        out = SymFunc.__new__(SymFunc)
        out.terms = terms
        return out

    @staticmethod
    def one():
        return SymFunc._raw({(): ONE})

    @staticmethod
    def p(k):
        """The power sum p_k."""
        if k < 1:
            raise ValueError("p_k requires k >= 1")
        return SymFunc._raw({(k,): ONE})

    @staticmethod
    def p_of(lam):
        return SymFunc._raw({as_parts(lam): ONE})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = SymFunc({(): Coeff.from_int(other)})
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for lam, c in other.terms.items():
            s = out.get(lam)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(lam, None)
            else:
                out[lam] = s
        return SymFunc._raw(out)

    def __neg__(self):
        return SymFunc._raw({lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if isinstance(c, int):
            c = Coeff.from_int(c)
        if c.is_zero():
            return SymFunc._raw({})
        return SymFunc._raw({lam: c * v for lam, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (Coeff, int)):
            return self.scale(other)
        out = {}
        for lam, a in self.terms.items():
            for mu, b in other.terms.items():
                key = tuple(sorted(lam + mu, reverse=True))
                c = a * b
                s = out.get(key)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return SymFunc._raw(out)

    __rmul__ = scale

    def degree(self):
        """Largest homogeneous degree present (-1 for zero)."""
        return max((sum(lam) for lam in self.terms), default=-1)

    def homogeneous_components(self):
        comps = {}
        for lam, c in self.terms.items():
            comps.setdefault(sum(lam), {})[lam] = c
        return {d: SymFunc._raw(t) for d, t in sorted(comps.items())}

    def is_homogeneous(self):
        degs = {sum(lam) for lam in self.terms}
        return len(degs) <= 1

    def coefficient(self, lam):
        return self.terms.get(as_parts(lam), ZERO)

    def __repr__(self):
        if not self.terms:
            return "SymFunc(0)"
        bits = []
        for lam in sorted(self.terms, key=lambda p: (sum(p), p)):
            bits.append(f"p{list(lam)}*{to_string(self.terms[lam])}")
        return "SymFunc(" + " + ".join(bits) + ")"


# ---------------------------------------------------------------------------
# inner product and adjoints
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def p_norm(parts):
    """<p_lambda, p_lambda> = z_lambda * prod_i (-1/beta_(lambda_i))."""
    val = Coeff.from_int(z_factor(parts))
    for k in parts:
        val = val * (-beta(k).inverse())
    return val


def inner(f, g):
    """The deformed Hall pairing, diagonal on power sums."""
    total = ZERO
    for lam, a in f.terms.items():
        b = g.terms.get(lam)
        if b is not None:
            total = total + a * b * p_norm(lam)
    return total


def p_derivative(k, f):
    """Formal partial derivative with respect to p_k in the p-basis."""
    out = {}
    for lam, c in f.terms.items():
        m = lam.count(k)
        if not m:
            continue
        idx = lam.index(k)
        reduced = lam[:idx] + lam[idx + 1 :]
        s = out.get(reduced)
        add = c * m
        s = add if s is None else s + add
        if s.is_zero():
            out.pop(reduced, None)
        else:
            out[reduced] = s
    return SymFunc._raw(out)


def adjoint_p(k, f):
    """p_k^dagger = -(k/beta_k) d/dp_k, the adjoint of multiplication by p_k."""
    if k < 1:
        raise ValueError("adjoint_p requires k >= 1")
    return p_derivative(k, f).scale(-Coeff.from_int(k) * beta(k).inverse())


# ---------------------------------------------------------------------------
# spectral eigenvalues
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _spectral_ck(k, parts):
    """Eigenvalue substituted for p_k: the closed form of the geometric sums
    over the lattice weights outside the partition, scaled by (1-q)(1-t)."""
    qk = q_power(k)
    total = ZERO
    for i, part in enumerate(parts):
        total = total + q_power(k * i) * (t_power(k * part) - ONE)
    return ONE + (ONE - qk) * total


def spectral_eigenvalue(g, lam, orientation="direct"):
    """Evaluate the eigenvalue of the eigenoperator attached to g on P_lambda."""
    parts = as_parts(lam)
    total = ZERO
    for mu, c in g.terms.items():
        val = c
        for k in mu:
            val = val * _spectral_ck(k, parts)
        total = total + val
    if orientation == "inverted":
        return total.power_shift(-1)
    if orientation != "direct":
        raise ValueError(f"unknown orientation {orientation!r}")
    return total


# ---------------------------------------------------------------------------
# classical bases in the p-basis
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def h_in_p(n):
    """Complete homogeneous h_n = sum over partitions of p_lambda / z_lambda."""
    if n == 0:
        return SymFunc.one()
    terms = {}
    for lam in partitions_of(n):
        terms[lam] = Coeff.from_fraction(1) / Coeff.from_int(z_factor(lam))
    return SymFunc._raw(terms)


@lru_cache(maxsize=None)
def e_in_p(n):
    """Elementary e_n: alternating power-sum expansion."""
    if n == 0:
        return SymFunc.one()
    terms = {}
    for lam in partitions_of(n):
        sign = -1 if (n - len(lam)) % 2 else 1
        terms[lam] = Coeff.from_fraction(sign) / Coeff.from_int(z_factor(lam))
    return SymFunc._raw(terms)


def _prod_basis(parts, unit_fn):
    out = SymFunc.one()
    for k in parts:
        out = out * unit_fn(k)
    return out


def _det_symfunc(m):
    n = len(m)
    if n == 0:
        return SymFunc.one()
    if n == 1:
        return m[0][0]
    total = SymFunc._raw({})
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * _det_symfunc(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


class SkewShape:
    """A pair of nested partitions outer/inner."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer, inner=()):
        outer = as_parts(outer)
        inner = as_parts(inner)
        padded = inner + (0,) * (len(outer) - len(inner))
        if len(inner) > len(outer) or any(
            padded[i] > outer[i] for i in range(len(outer))
        ):
            raise ValueError(f"inner {inner} does not fit inside outer {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def __setattr__(self, *a):
        raise AttributeError("SkewShape is immutable")

    @property
    def size(self):
        return sum(self.outer) - sum(self.inner)

    def cells(self):
        """English-convention cells (row, col), row 0 on top."""
        padded = self.inner + (0,) * (len(self.outer) - len(self.inner))
        return [
            (r, c)
            for r in range(len(self.outer))
            for c in range(padded[r], self.outer[r])
        ]

    def has_2x2(self):
        cells = set(self.cells())
        return any(
            (r, c + 1) in cells and (r + 1, c) in cells and (r + 1, c + 1) in cells
            for (r, c) in cells
        )

    def is_connected(self):
        cells = set(self.cells())
        if not cells:
            return True
        seen = set()
        stack = [next(iter(cells))]
        while stack:
            r, c = stack.pop()
            if (r, c) in seen:
                continue
            seen.add((r, c))
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in cells and nb not in seen:
                    stack.append(nb)
        return seen == cells

    def is_ribbon(self):
        return self.size >= 1 and self.is_connected() and not self.has_2x2()

    def __eq__(self, other):
        return self.outer == other.outer and self.inner == other.inner

    def __repr__(self):
        return f"SkewShape({self.outer!r}/{self.inner!r})"


def skew_schur(shape):
    """Jacobi-Trudi determinant det(h_(outer_i - inner_j - i + j))."""
    outer = shape.outer
    inner = shape.inner + (0,) * (len(shape.outer) - len(shape.inner))
    n = len(outer)
    if n == 0:
        return SymFunc.one()
    m = []
    for i in range(n):
        row = []
        for j in range(n):
            k = outer[i] - inner[j] - i + j
            if k < 0:
                row.append(SymFunc._raw({}))
            else:
                row.append(h_in_p(k))
        m.append(row)
    return _det_symfunc(m)


def ribbon_shape(eps):
    """Skew shape of the ribbon encoded by a 0/1 word (0: left, 1: up)."""
    eps = tuple(int(x) for x in eps)
    if any(x not in (0, 1) for x in eps):
        raise ValueError("ribbon word entries must be 0 or 1")
    row, col = 0, 0
    rows = {0: [0, 0]}  # row -> [min col, max col], built bottom-up
    for step in eps:
        if step == 0:
            col -= 1
        else:
            row += 1
        lo_hi = rows.setdefault(row, [col, col])
        lo_hi[0] = min(lo_hi[0], col)
        lo_hi[1] = max(lo_hi[1], col)
    shift = -min(lo for lo, _ in rows.values())
    nrows = max(rows) + 1
    outer = tuple(rows[r][1] + shift + 1 for r in range(nrows))
    inner = tuple(x for x in (rows[r][0] + shift for r in range(nrows)) if x > 0)
    return SkewShape(outer, inner)


def ribbon_schur(eps):
    """Skew Schur function of the ribbon encoded by eps."""
    return skew_schur(ribbon_shape(eps))


# ---------------------------------------------------------------------------
# basis conversion
# ---------------------------------------------------------------------------


def _monomial_expansion(f_terms, d):
    """Expand a homogeneous degree-d p-expression in d variables and read off
    monomial-basis coefficients (each m_mu contains the sorted exponent)."""
    nvars = max(d, 1)
    acc = {}
    for lam, coeff in f_terms.items():
        poly = {(0,) * nvars: ONE}
        for k in lam:
            new = {}
            for expv, c in poly.items():
                for i in range(nvars):
                    key = expv[:i] + (expv[i] + k,) + expv[i + 1 :]
                    s = new.get(key)
                    s = c if s is None else s + c
                    if s.is_zero():
                        new.pop(key, None)
                    else:
                        new[key] = s
            poly = new
        for expv, c in poly.items():
            s = acc.get(expv)
            s = coeff * c if s is None else s + coeff * c
            if s.is_zero():
                acc.pop(expv, None)
            else:
                acc[expv] = s
    out = []
    for mu in partitions_of(d):
        key = mu + (0,) * (nvars - len(mu))
        c = acc.get(key)
        if c is not None and not c.is_zero():
            out.append((mu, c))
    return out


@lru_cache(maxsize=None)
def _basis_matrix(basis, d):
    """Columns: p-basis coordinates of the basis elements of degree d."""
    lams = partitions_of(d)
    cols = []
    for mu in lams:
        if basis == "h":
            elem = _prod_basis(mu, h_in_p)
        elif basis == "e":
            elem = _prod_basis(mu, e_in_p)
        elif basis == "s":
            elem = skew_schur(SkewShape(mu))
        else:
            raise ValueError(f"unknown basis {basis!r}")
        cols.append([elem.coefficient(lam) for lam in lams])
    return _linalg.transpose(cols)


def convert(f, basis):
    """Exact change of basis; returns a list of (partition, Coeff) pairs."""
    if basis == "p":
        return [
            (lam, f.terms[lam])
            for lam in sorted(f.terms, key=lambda p: (sum(p), tuple(-x for x in p)))
        ]
    out = []
    for d, comp in f.homogeneous_components().items():
        if basis == "m":
            out.extend(_monomial_expansion(comp.terms, d))
            continue
        lams = partitions_of(d)
        vec = [comp.coefficient(lam) for lam in lams]
        sol = _linalg.solve(_basis_matrix(basis, d), vec)
        if sol is None:
            raise RuntimeError("basis conversion failed")
        out.extend((mu, c) for mu, c in zip(lams, sol) if not c.is_zero())
    return out


def from_basis(pairs, basis):
    """Rebuild a SymFunc (p-basis) from (partition, Coeff) pairs in a basis."""
    total = SymFunc._raw({})
    for mu, c in pairs:
        mu = as_parts(mu)
        if basis == "p":
            elem = SymFunc.p_of(mu)
        elif basis == "h":
            elem = _prod_basis(mu, h_in_p)
        elif basis == "e":
            elem = _prod_basis(mu, e_in_p)
        elif basis == "s":
            elem = skew_schur(SkewShape(mu))
        elif basis == "m":
            elem = _m_in_p(mu)
        else:
            raise ValueError(f"unknown basis {basis!r}")
        total = total + elem.scale(c)
    return total


@lru_cache(maxsize=None)
def _m_in_p(mu):
    """Monomial symmetric function in the p-basis (by inverting columns)."""
    d = sum(mu)
    lams = partitions_of(d)
    cols = []
    for lam in lams:
        expansion = dict(_monomial_expansion({lam: ONE}, d))
        cols.append([expansion.get(nu, ZERO) for nu in lams])
    mat = _linalg.transpose(cols)  # rows: m-basis index, cols: p-basis index
    inv = _linalg.inverse(mat)
    idx = lams.index(as_parts(mu))
    return SymFunc._raw(
        {lam: inv[r][idx] for r, lam in enumerate(lams) if not inv[r][idx].is_zero()}
    )


# ---------------------------------------------------------------------------
# Macdonald polynomials as D_1 eigenvectors
# ---------------------------------------------------------------------------

_MACD_CACHE = {}


def resolve_orientation(orientation):
    if orientation in ("direct", "inverted"):
        return orientation
    if orientation == "auto":
        from . import hallalg

        return hallalg.determine_orientation()
    raise ValueError(f"unknown orientation {orientation!r}")


def macdonald(lam, max_cache_degree=12, orientation="auto"):
    """The Macdonald polynomial P_lambda, as the D_1 eigenvector whose
    eigenvalue is the spectral value of p_1 at lambda.

    Normalized so the first nonzero p-coefficient in reverse-lex partition
    order equals 1.  All partitions of |lambda| are solved and cached at once.
    """
    parts = as_parts(lam)
    d = sum(parts)
    if d > max_cache_degree:
        raise ValueError(f"degree {d} exceeds max_cache_degree {max_cache_degree}")
    orientation = resolve_orientation(orientation)
    key = (parts, orientation)
    if key in _MACD_CACHE:
        return _MACD_CACHE[key]

    from . import vertexops

    lams = partitions_of(d)
    eigs = [spectral_eigenvalue(SymFunc.p(1), mu, orientation) for mu in lams]
    for i in range(len(eigs)):
        for j in range(i + 1, len(eigs)):
            if eigs[i] == eigs[j]:
                raise DegeneracyError(
                    f"spectral eigenvalue collision at degree {d}: "
                    f"{lams[i]} vs {lams[j]}"
                )
    cols = []
    for mu in lams:
        image = vertexops.apply_Dn(1, SymFunc.p_of(mu))
        cols.append([image.coefficient(nu) for nu in lams])
    mat = _linalg.transpose(cols)
    for mu, ev in zip(lams, eigs):
        shifted = [
            [mat[i][j] - (ev if i == j else ZERO) for j in range(len(lams))]
            for i in range(len(lams))
        ]
        kernel = _linalg.nullspace(shifted)
        if len(kernel) != 1:
            raise DegeneracyError(
                f"D_1 eigenspace at degree {d}, eigenvalue of {mu}, has "
                f"dimension {len(kernel)}"
            )
        vec = kernel[0]
        lead = next(c for c in vec if not c.is_zero())
        inv = lead.inverse()
        terms = {
            nu: c * inv for nu, c in zip(lams, vec) if not c.is_zero()
        }
        _MACD_CACHE[(mu, orientation)] = SymFunc._raw(terms)
    return _MACD_CACHE[key]


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------


def to_json_dict(f):
    order = sorted(f.terms, key=lambda p: (sum(p), tuple(-x for x in p)))
    return {
        "basis": "p",
        "terms": [
            {"partition": list(lam), "coeff": to_string(f.terms[lam])}
            for lam in order
        ],
    }


def to_json(f):
    return json.dumps(to_json_dict(f))


def from_json_dict(data):
    if data.get("basis") != "p":
        raise ValueError("only p-basis JSON is accepted")
    terms = {}
    for item in data["terms"]:
        lam = as_parts(item["partition"])
        c = parse(item["coeff"])
        if not c.is_zero():
            terms[lam] = terms.get(lam, ZERO) + c
    return SymFunc(terms)


def from_json(text):
    return from_json_dict(json.loads(text))
