import random
from fractions import Fraction

import pytest

from hallops import symfunc as sf
from hallops.coeffs import Coeff, ONE, ZERO, beta, q_power, t_power
from hallops.symfunc import (
    Partition,
    SkewShape,
    SymFunc,
    adjoint_p,
    convert,
    from_basis,
    inner,
    partitions_of,
    ribbon_schur,
    ribbon_shape,
    skew_schur,
    spectral_eigenvalue,
    z_factor,
)

q = q_power()
t = t_power()
half = Coeff.from_fraction(Fraction(1, 2))
third = Coeff.from_fraction(Fraction(1, 3))


def random_symfunc(rng, max_deg=4, nterms=3):
    terms = {}
    for _ in range(nterms):
        d = rng.randint(0, max_deg)
        lam = rng.choice(partitions_of(d))
        terms[lam] = Coeff.from_fraction(
            Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        )
    return SymFunc(terms)


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------


def test_partition_validation():
    assert Partition((3, 1, 1)).parts == (3, 1, 1)
    assert Partition(()).size == 0
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((0,))


def test_partitions_of_reverse_lex():
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert partitions_of(0) == ((),)
    assert len(partitions_of(5)) == 7
    assert len(partitions_of(6)) == 11


def test_z_factor():
    assert z_factor((1, 1)) == 2
    assert z_factor((2,)) == 2
    assert z_factor((2, 1, 1)) == 4
    assert z_factor(()) == 1


# ---------------------------------------------------------------------------
# conversions (spec examples)
# ---------------------------------------------------------------------------


def test_p2_in_m_basis():
    assert convert(SymFunc.p(2), "m") == [((2,), ONE)]


def test_h2_in_p_basis():
    assert sf.h_in_p(2) == SymFunc({(2,): half, (1, 1): half})


def test_s21_in_p_basis():
    s21 = skew_schur(SkewShape((2, 1)))
    assert s21 == SymFunc({(1, 1, 1): third, (3,): -third})


def test_round_trips_all_bases():
    rng = random.Random(23)
    for basis in ("p", "m", "e", "h", "s"):
        for _ in range(4):
            f = random_symfunc(rng, max_deg=6 if basis in ("p", "h") else 5)
            pairs = convert(f, basis)
            assert from_basis(pairs, basis) == f


# ---------------------------------------------------------------------------
# skew and ribbon Schur functions
# ---------------------------------------------------------------------------


def test_skew_schur_row_and_column():
    assert skew_schur(SkewShape((2,))) == sf.h_in_p(2)
    assert skew_schur(SkewShape((1, 1))) == sf.e_in_p(2)


def test_skew_schur_22_over_1():
    expected = sf.h_in_p(1) * sf.h_in_p(2) - sf.h_in_p(3)
    assert skew_schur(SkewShape((2, 2), (1,))) == expected
    assert expected == skew_schur(SkewShape((2, 1)))


def test_skew_invalid_containment():
    with pytest.raises(ValueError):
        SkewShape((2, 1), (3,))


def test_ribbon_shape_examples():
    assert ribbon_shape(()) == SkewShape((1,))
    assert ribbon_shape((0, 0)) == SkewShape((3,))
    assert ribbon_shape((0, 1)) == SkewShape((2, 1))
    assert ribbon_shape((1, 1)) == SkewShape((1, 1, 1))
    assert ribbon_shape((1, 0)) == SkewShape((2, 2), (1,))


def test_ribbon_shapes_are_ribbons():
    for size in range(0, 7):
        for code in range(2**size):
            eps = tuple((code >> i) & 1 for i in range(size))
            shape = ribbon_shape(eps)
            assert shape.size == size + 1
            assert shape.is_ribbon()
            assert not shape.has_2x2()


def test_ribbon_schur_h_e():
    assert ribbon_schur((0, 0)) == sf.h_in_p(3)
    assert ribbon_schur((1, 1)) == sf.e_in_p(3)
    assert ribbon_schur((0, 1)) == sf.h_in_p(1) * sf.h_in_p(2) - sf.h_in_p(3)


def test_power_sum_alternating_ribbons():
    # p_k equals the alternating sum over ribbons with ones packed right
    for k in range(1, 6):
        total = SymFunc({})
        for j in range(k):
            eps = (0,) * (k - 1 - j) + (1,) * j
            term = ribbon_schur(eps)
            total = total + term if j % 2 == 0 else total - term
        assert total == SymFunc.p(k)


def test_ribbon_product_rule():
    # s_eps * s_eps' = s_(eps 0 eps') + s_(eps 1 eps')
    words = [(), (0,), (1,), (0, 1), (1, 0), (0, 0), (1, 1)]
    for eps in words:
        for eps2 in words:
            if len(eps) + len(eps2) > 4:
                continue
            lhs = ribbon_schur(eps) * ribbon_schur(eps2)
            rhs = ribbon_schur(eps + (0,) + eps2) + ribbon_schur(eps + (1,) + eps2)
            assert lhs == rhs


# ---------------------------------------------------------------------------
# inner product and adjoints
# ---------------------------------------------------------------------------


def test_inner_p1():
    assert inner(SymFunc.p(1), SymFunc.p(1)) == -beta(1).inverse()


def test_inner_p11():
    p11 = SymFunc.p_of((1, 1))
    expected = Coeff.from_int(2) / (beta(1) * beta(1))
    assert inner(p11, p11) == expected


def test_inner_orthogonality():
    assert inner(SymFunc.p(1), SymFunc.p(2)).is_zero()


def test_adjoint_p_examples():
    assert adjoint_p(1, SymFunc.p(1)) == SymFunc.one().scale(-beta(1).inverse())
    assert adjoint_p(2, SymFunc.p(1)).is_zero()
    expected = SymFunc.p(1).scale(Coeff.from_int(-2) * beta(1).inverse())
    assert adjoint_p(1, SymFunc.p_of((1, 1))) == expected


def test_adjointness():
    rng = random.Random(31)
    for k in (1, 2, 3):
        for _ in range(5):
            a = random_symfunc(rng, max_deg=5)
            b = random_symfunc(rng, max_deg=5)
            lhs = inner(adjoint_p(k, a), b)
            rhs = inner(a, SymFunc.p(k) * b)
            assert lhs == rhs


# ---------------------------------------------------------------------------
# spectral eigenvalues
# ---------------------------------------------------------------------------


def test_spectral_empty():
    assert spectral_eigenvalue(SymFunc.p(1), ()) == ONE


def test_spectral_p1_single_box():
    assert spectral_eigenvalue(SymFunc.p(1), (1,)) == q + t - q * t


def test_spectral_p2_single_box():
    expected = q * q + t * t - q * q * t * t
    assert spectral_eigenvalue(SymFunc.p(2), (1,)) == expected


def test_spectral_inverted():
    direct = spectral_eigenvalue(SymFunc.p(1), (2, 1))
    inv = spectral_eigenvalue(SymFunc.p(1), (2, 1), orientation="inverted")
    assert inv == direct.power_shift(-1)


def test_spectral_linear_in_g():
    lam = (2, 1)
    g = SymFunc.p(1) * SymFunc.p(2) + SymFunc.p(3).scale(Coeff.from_int(2))
    val = spectral_eigenvalue(g, lam)
    expected = spectral_eigenvalue(SymFunc.p(1), lam) * spectral_eigenvalue(
        SymFunc.p(2), lam
    ) + Coeff.from_int(2) * spectral_eigenvalue(SymFunc.p(3), lam)
    assert val == expected


# ---------------------------------------------------------------------------
# JSON round-trip
# ---------------------------------------------------------------------------


def test_json_round_trip():
    rng = random.Random(41)
    for _ in range(10):
        f = random_symfunc(rng)
        assert sf.from_json(sf.to_json(f)) == f


def test_json_shape():
    f = SymFunc({(2, 1): ONE})
    data = sf.to_json_dict(f)
    assert data["basis"] == "p"
    assert data["terms"][0]["partition"] == [2, 1]
