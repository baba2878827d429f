import random
from fractions import Fraction

import pytest

from hallops import coeffs
from hallops.coeffs import Coeff, HalfLaurent, arith, beta, parse, to_string


def C(n, d=1):
    return Coeff.from_fraction(Fraction(n, d))


def mono(a, b, c=1):
    return Coeff.monomial(a, b, c)


q = coeffs.q_power()
t = coeffs.t_power()


def random_coeff(rng, size=3, span=3):
    num = HalfLaurent(
        {
            (rng.randint(-span, span), rng.randint(-span, span)): Fraction(
                rng.randint(-4, 4), rng.randint(1, 3)
            )
            for _ in range(size)
        }
    )
    den = HalfLaurent()
    while not den:
        den = HalfLaurent(
            {
                (rng.randint(-1, 1), rng.randint(-1, 1)): Fraction(rng.randint(-2, 2))
                for _ in range(2)
            }
        )
    return Coeff(num, den)


# ---------------------------------------------------------------------------
# spec examples
# ---------------------------------------------------------------------------


def test_add_q_t():
    assert arith(q, t, "add") == mono(2, 0) + mono(0, 2)


def test_difference_of_squares():
    lhs = arith(mono(1, 0) - mono(-1, 0), mono(1, 0) + mono(-1, 0), "mul")
    assert lhs == q - coeffs.q_power(-1)


def test_beta1_expansion():
    expected = mono(1, 1) - mono(1, -1) - mono(-1, 1) + mono(-1, -1)
    assert beta(1) == expected


def test_beta2_is_beta1_of_squares():
    expected = (q - q.inverse()) * (t - t.inverse())
    assert beta(2) == expected


def test_beta_inversion_invariance():
    for k in (1, 2, 3):
        assert beta(k).power_shift(-1) == beta(k)


def test_beta_rejects_nonpositive():
    with pytest.raises(ValueError):
        beta(0)


def test_substitute_beta1():
    assert beta(1).substitute(2, 3) == Fraction(4)


def test_substitute_q():
    assert q.substitute(2, 3) == Fraction(4)


def test_substitute_pole():
    c = Coeff.from_int(1) / (q - t)
    with pytest.raises(coeffs.PoleError):
        c.substitute(1, 1)


def test_power_shift_square():
    assert (q + t).power_shift(2) == q * q + t * t


def test_power_shift_zero_rejected():
    with pytest.raises(ValueError):
        q.power_shift(0)


def test_power_shift_rational():
    c = q / (Coeff.from_int(1) - t)
    expected = q.inverse() / (Coeff.from_int(1) - t.inverse())
    assert c.power_shift(-1) == expected


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        arith(q, coeffs.ZERO, "div")


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------


def test_cancellation_to_constant():
    c = (q * q - Coeff.from_int(1)) / (q - Coeff.from_int(1))
    assert c == q + 1


def test_structural_equality_det():
    # (q^2 - t^2)/(q - t) == q + t
    a = (q * q - t * t) / (q - t)
    assert a == q + t
    assert a.num == (q + t).num and a.den == (q + t).den


def test_monomial_denominator_absorbed():
    c = Coeff.from_int(1) / q
    assert c.den == {(0, 0): 1}
    assert c.num == {(-2, 0): 1}


def test_canonical_idempotent():
    rng = random.Random(7)
    for _ in range(40):
        c = random_coeff(rng)
        again = Coeff(
            HalfLaurent({k: Fraction(v) for k, v in c.num.items()}),
            HalfLaurent({k: Fraction(v) for k, v in c.den.items()}),
        )
        assert again.num == c.num and again.den == c.den


def test_den_sign_normalized():
    c = q / (t - Coeff.from_int(1))
    d = (-q) / (Coeff.from_int(1) - t)
    assert c == d
    assert c.den[max(c.den)] > 0


# ---------------------------------------------------------------------------
# field laws on random triples
# ---------------------------------------------------------------------------


def test_field_laws():
    rng = random.Random(11)
    for _ in range(12):
        a = random_coeff(rng)
        b = random_coeff(rng)
        c = random_coeff(rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if not a.is_zero():
            assert a * a.inverse() == coeffs.ONE
        assert a - a == coeffs.ZERO


def test_halflaurent_commutative_associative():
    rng = random.Random(3)
    for _ in range(20):
        hs = [
            HalfLaurent(
                {
                    (rng.randint(-2, 2), rng.randint(-2, 2)): Fraction(
                        rng.randint(-3, 3)
                    )
                    for _ in range(3)
                }
            )
            for _ in range(3)
        ]
        a, b, c = hs
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)


def test_substitute_ring_homomorphism():
    rng = random.Random(5)
    for _ in range(15):
        a = random_coeff(rng)
        b = random_coeff(rng)
        try:
            va = a.substitute(2, 3)
            vb = b.substitute(2, 3)
            vab = (a * b).substitute(2, 3)
            vsum = (a + b).substitute(2, 3)
        except coeffs.PoleError:
            continue
        assert vab == va * vb
        assert vsum == va + vb


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def test_beta1_text_matches_grammar():
    assert to_string(beta(1)) == "(1*Q^1*T^1 - 1*Q^1*T^-1 - 1*Q^-1*T^1 + 1*Q^-1*T^-1)/(1)"


def test_round_trip_random():
    rng = random.Random(13)
    for _ in range(40):
        c = random_coeff(rng)
        s = to_string(c)
        back = parse(s)
        assert back == c
        assert to_string(back) == s


def test_round_trip_specials():
    for c in (coeffs.ZERO, coeffs.ONE, C(-3, 7), beta(2), q / (q - t)):
        assert parse(to_string(c)) == c


def test_parse_rational_coefficients():
    assert parse("(3/2)/(1)") == C(3, 2)
    assert parse("(1*Q^2 + 1/3*T^2)/(2)") == (q + t / 3) / 2
