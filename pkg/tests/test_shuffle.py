import pytest

from hallops import shuffle as sh
from hallops.coeffs import Coeff, ONE, ZERO, q_power, t_power, qt_half
from hallops.shuffle import (
    P_mn,
    ShuffleElem,
    find_linear_relations,
    is_in_S,
    rat_eq,
    shuffle_mul,
    upsilon_ribbon,
    word_elem,
    words_of_degree,
)


# ---------------------------------------------------------------------------
# construction and product
# ---------------------------------------------------------------------------


def test_word_single_letter():
    e = word_elem((3,))
    assert e.n == 1 and e.num == {(3,): ONE}


def test_empty_word_rejected():
    with pytest.raises(ValueError):
        word_elem(())


def test_shuffle_of_two_constants_is_word_00():
    one_var = word_elem((0,))
    prod = shuffle_mul(one_var, one_var)
    assert rat_eq(prod, word_elem((0, 0)))


def test_unit_is_neutral():
    for w in ((0,), (1, 0), (0, 1)):
        e = word_elem(w)
        assert rat_eq(shuffle_mul(ShuffleElem.unit(), e), e)
        assert rat_eq(shuffle_mul(e, ShuffleElem.unit()), e)


def test_rat_eq_basic():
    e = word_elem((1, 0))
    assert rat_eq(e, e)
    assert not rat_eq(word_elem((1, 0)), word_elem((0, 1)))
    with pytest.raises(ValueError):
        rat_eq(word_elem((0,)), word_elem((0, 0)))


def test_words_are_iterated_products():
    for w in ((1, 0), (0, 1), (1, -1), (0, 1, 0), (1, 0, -1)):
        acc = word_elem((w[0],))
        for m in w[1:]:
            acc = shuffle_mul(acc, word_elem((m,)))
        assert rat_eq(acc, word_elem(w))


def test_shuffle_associativity_on_generators():
    gens = [word_elem((m,)) for m in (-1, 0, 1)]
    for a in gens:
        for b in gens:
            for c in gens:
                left = shuffle_mul(shuffle_mul(a, b), c)
                right = shuffle_mul(a, shuffle_mul(b, c))
                assert rat_eq(left, right)


def test_constructed_elements_symmetric():
    for w in ((0, 0), (1, 0), (1, -1)):
        assert word_elem(w).is_symmetric()
    assert P_mn(1, 2).is_symmetric()
    assert P_mn(0, 2).is_symmetric()


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------


def test_is_in_S_words():
    assert is_in_S(word_elem((0, 0)))
    for w in ((1, 0), (0, 1), (1, -1), (0, 0, 0), (1, 0, -1)):
        assert is_in_S(word_elem(w))


def test_is_in_S_constant():
    assert is_in_S(word_elem((0,)))
    assert is_in_S(ShuffleElem.unit())


def test_is_in_S_P_mn():
    for m, n in ((0, 2), (1, 2), (-1, 2), (0, 3), (1, 3), (2, 3)):
        assert is_in_S(P_mn(m, n))


def test_form_violation_detected():
    bad = ShuffleElem(2, {(0, 0): ONE})
    ok, diag = is_in_S(bad, with_diagnostics=True)
    assert not ok and not diag["form"]


def test_wheel_violation_detected():
    # numerator prod (z_i - z_j)^2 alone: p = 1 fails the wheel conditions
    num = {(0, 0, 0): ONE}
    for i in range(1, 4):
        for j in range(i + 1, 4):
            for _ in range(2):
                num = sh.mv_mul(num, sh._linear(3, i, j, ONE))
    bad = ShuffleElem(3, num)
    ok, diag = is_in_S(bad, with_diagnostics=True)
    assert not ok and diag["form"] and not diag["wheel"]


# ---------------------------------------------------------------------------
# P_mn
# ---------------------------------------------------------------------------


def test_P_m1_is_monomial():
    for m in (-2, -1, 0, 1, 3):
        assert rat_eq(P_mn(m, 1), word_elem((m,)))


def test_P_mn_rejects_bad_n():
    with pytest.raises(ValueError):
        P_mn(1, 0)


def test_P_02_explicit_structure():
    e = P_mn(0, 2)
    assert e.n == 2 and not e.is_zero()
    assert is_in_S(e)


# ---------------------------------------------------------------------------
# the ribbon embedding
# ---------------------------------------------------------------------------


def test_upsilon_single_box():
    assert rat_eq(upsilon_ribbon(0, 1, (), 1), word_elem((0,)))


def test_upsilon_gcd_guard():
    with pytest.raises(ValueError):
        upsilon_ribbon(2, 2, (), 1)


def test_upsilon_ribbon_multiplicativity():
    # the embedding is a homomorphism to the shuffle product:
    # Y(s_eps) * Y(s_eps') = Y(s_(eps 0 eps')) + Y(s_(eps 1 eps'))
    for eps, eps2 in (((), ()), ((), (0,)), ((0,), ()), ((), (1,))):
        k1 = len(eps) + 1
        k2 = len(eps2) + 1
        lhs = shuffle_mul(
            upsilon_ribbon(0, 1, eps, k1), upsilon_ribbon(0, 1, eps2, k2)
        )
        rhs_num = sh.mv_add(
            upsilon_ribbon(0, 1, eps + (0,) + eps2, k1 + k2).num,
            upsilon_ribbon(0, 1, eps + (1,) + eps2, k1 + k2).num,
        )
        assert lhs.num == rhs_num


def test_upsilon_subscript_flag():
    # both readings agree at n = 1, k = 2 only if the word has no interior
    # multiples; the flag switches the reading without erroring
    a = upsilon_ribbon(0, 1, (1,), 2, subscript="i_over_n")
    b = upsilon_ribbon(0, 1, (1,), 2, subscript="i_over_k")
    assert a.n == b.n == 2
    with pytest.raises(ValueError):
        upsilon_ribbon(0, 1, (1,), 2, subscript="bogus")


def test_upsilon_one_carries_qt_prefactor():
    # a single up-step multiplies by -qt and shifts one exponent pair
    e = upsilon_ribbon(0, 1, (1,), 2)
    assert e.n == 2 and not e.is_zero()
    assert is_in_S(e)


# ---------------------------------------------------------------------------
# linear relations
# ---------------------------------------------------------------------------


def test_no_relations_for_single_letters():
    assert find_linear_relations([(m,) for m in (-1, 0, 1, 2)]) == []


def test_duplicate_word_relation():
    rels = find_linear_relations([(1, 0), (1, 0)])
    assert len(rels) == 1
    v = rels[0]
    # the relation is proportional to (1, -1)
    assert not v[0].is_zero()
    assert (v[0] + v[1]).is_zero()


def test_relations_annihilate_evaluations():
    for total, lo, hi in ((0, -2, 2), (1, -1, 2)):
        words = words_of_degree(2, total, lo, hi)
        rels = find_linear_relations(words)
        assert rels, f"expected relations among degree-{total} pairs"
        elems = [word_elem(w) for w in words]
        for rel in rels:
            acc = {}
            for c, e in zip(rel, elems):
                acc = sh.mv_add(acc, sh.mv_scale(e.num, c))
            assert not acc


def test_serialization_round_trip():
    for e in (word_elem((1, 0)), P_mn(1, 2), ShuffleElem.unit(qt_half(3))):
        back = sh.from_text(sh.to_text(e))
        assert back == e
