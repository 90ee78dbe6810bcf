import math
import random

import pytest

from mobzero import (
    INTEGERS,
    IntegerModRing,
    MembershipError,
    MinLengthIdeal,
    MonoidMismatchError,
    ProperError,
    RATIONALS,
    ReesQuotient,
    Series,
    TruncationError,
    add,
    augmentation,
    cauchy_product,
    characteristic_series,
    check_oracle_equivalence,
    check_unit_inverse,
    coefficient,
    convolve_oracle,
    first_difference,
    mobius_invert_left,
    mobius_invert_right,
    mobius_series,
    power,
    proper_part,
    random_series,
    scalar_mul,
    star,
    zeta_transform_left,
    zeta_transform_right,
)

from helpers import (
    builtin_monoids,
    commutative,
    free,
    mobius_by_triangular_solve,
    series_from_letterlists,
    standard_words,
)


def w(m, text):
    return m.word_from_letters(list(text))


def S(m, truncation, pairs, ring=INTEGERS):
    return series_from_letterlists(m, truncation, pairs, ring)


# -- construction and normalization ----------------------------------------

def test_construction_normalizes():
    m = free(2)
    f = Series(m, 2, {w(m, "a"): 0, w(m, "ab"): 3, w(m, "aba"): 7})
    assert f.terms == {w(m, "ab"): 3}  # zero dropped, beyond-N projected away


def test_construction_validates_membership():
    m = standard_words()
    with pytest.raises(MembershipError):
        Series(m, 4, {(0, 0): 1})  # aa is not a quotient element


def test_construction_rejects_negative_truncation():
    with pytest.raises(ValueError):
        Series(free(1), -1, {})


def test_equality_is_strict():
    m = free(1)
    assert Series(m, 3, {(0,): 1}) == Series(m, 3, {(0,): 1})
    assert Series(m, 3, {(0,): 1}) != Series(m, 4, {(0,): 1})
    assert Series(m, 3, {(0,): 1}) != Series(m, 3, {(0,): 1}, RATIONALS)
    assert Series(m, 3, {}) == Series.zero(m, 3)


# -- coefficient ------------------------------------------------------------

def test_coefficient_lookup():
    m = standard_words()
    zeta = characteristic_series(m, 4)
    assert coefficient(zeta, w(m, "abc")) == 1
    mu = mobius_series(m, 4)
    assert coefficient(mu, w(m, "ab")) == 0
    assert coefficient(Series.zero(m, 4), w(m, "a")) == 0


def test_coefficient_beyond_truncation():
    m = free(1)
    f = Series.one(m, 2)
    with pytest.raises(TruncationError):
        f.coefficient((0, 0, 0))


def test_coefficient_checks_membership():
    m = standard_words()
    with pytest.raises(MembershipError):
        characteristic_series(m, 4).coefficient((0, 0))


# -- add / scalar_mul -------------------------------------------------------

def test_add_cancellation():
    m = free(2)
    f = S(m, 4, [(2, "a"), (1, "ab")])
    assert add(f, scalar_mul(-1, f)) == Series.zero(m, 4)
    assert (f - f).is_zero()


def test_add_identity_plus_letter():
    m = free(2)
    one_minus_a = S(m, 4, [(1, ""), (-1, "a")])
    a = S(m, 4, [(1, "a")])
    assert add(one_minus_a, a) == Series.one(m, 4)


def test_add_collects_coefficients():
    m = free(2)
    assert add(S(m, 4, [(2, "a")]), S(m, 4, [(3, "a")])) == S(m, 4, [(5, "a")])


def test_add_takes_min_truncation():
    m = free(1)
    f = Series(m, 5, {(0,) * 5: 1, (0,): 1})
    g = Series(m, 2, {(0, 0): 1})
    total = add(f, g)
    assert total.truncation == 2
    assert total.terms == {(0,): 1, (0, 0): 1}


def test_add_rejects_mixed_carriers():
    with pytest.raises(MonoidMismatchError):
        add(Series.one(free(1), 3), Series.one(free(2), 3))
    with pytest.raises(MonoidMismatchError):
        add(Series.one(free(1), 3), Series.one(free(1), 3, RATIONALS))


def test_scalar_mul_by_zero():
    m = free(2)
    assert scalar_mul(0, S(m, 3, [(4, "ab")])).is_zero()


# -- cauchy product ---------------------------------------------------------

def test_cauchy_standard_words_example():
    m = standard_words()
    left = S(m, 4, [(1, "a"), (1, "b")])
    right = S(m, 4, [(1, "a"), (1, "c")])
    got = cauchy_product(left, right)
    # brute force over the four term pairs through the quotient product
    expected = {}
    for x in (w(m, "a"), w(m, "b")):
        for y in (w(m, "a"), w(m, "c")):
            z = m.product(x, y)
            if not isinstance(z, tuple):
                continue
            expected[z] = expected.get(z, 0) + 1
    assert got.terms == expected
    assert got == S(m, 4, [(1, "ac"), (1, "ba"), (1, "bc")])


def test_cauchy_one_is_neutral():
    m = standard_words()
    f = S(m, 4, [(2, "a"), (-1, "bc"), (1, "")])
    assert cauchy_product(Series.one(m, 4), f) == f
    assert cauchy_product(f, Series.one(m, 4)) == f


def test_cauchy_min_length_inverse_pair():
    base = free(2)
    m = ReesQuotient(base, MinLengthIdeal(base, 3))
    f = S(m, 2, [(1, ""), (-1, "a"), (-1, "b")])
    g = S(m, 2, [(1, ""), (1, "a"), (1, "b"), (1, "aa"), (1, "ab"),
                 (1, "ba"), (1, "bb")])
    assert cauchy_product(f, g) == Series.one(m, 2)


def test_cauchy_truncation_is_min():
    m = free(1)
    f = Series(m, 5, {(0,): 1})
    g = Series(m, 3, {(0, 0): 1})
    assert cauchy_product(f, g).truncation == 3


def test_oracle_agrees_on_examples():
    m = standard_words()
    pairs = [
        (S(m, 4, [(1, "a"), (1, "b")]), S(m, 4, [(1, "a"), (1, "c")])),
        (Series.one(m, 4), S(m, 4, [(3, "ab"), (1, "")])),
    ]
    for f, g in pairs:
        assert convolve_oracle(f, g) == cauchy_product(f, g)


def test_oracle_equivalence_randomized():
    rng = random.Random(7)
    for m in (standard_words(), free(2), commutative(2)):
        for _ in range(100):
            f = random_series(rng, m, 6)
            g = random_series(rng, m, 6)
            assert cauchy_product(f, g) == convolve_oracle(f, g)


def test_check_oracle_equivalence_report():
    report = check_oracle_equivalence(standard_words(), 6)
    assert report.passed


# -- augmentation -----------------------------------------------------------

def test_augmentation_values():
    m = standard_words()
    zeta = characteristic_series(m, 4)
    assert augmentation(zeta) == 1
    assert augmentation(proper_part(zeta)) == 0
    assert augmentation(Series.zero(m, 4)) == 0


def test_augmentation_is_multiplicative():
    rng = random.Random(11)
    m = standard_words()
    for _ in range(50):
        f = random_series(rng, m, 5)
        g = random_series(rng, m, 5)
        assert augmentation(cauchy_product(f, g)) == \
            augmentation(f) * augmentation(g)


# -- star -------------------------------------------------------------------

def test_star_of_zero():
    m = free(2)
    assert star(Series.zero(m, 4)) == Series.one(m, 4)


def test_star_standard_words_nilpotent():
    m = standard_words()
    zplus = proper_part(characteristic_series(m, 8))
    result, count = star(-zplus, return_power_count=True)
    assert count == 4  # powers 0 through 3; the fourth power vanishes
    assert result == S(m, 8, [(1, ""), (-1, "a"), (-1, "b"), (-1, "c")])


def test_star_geometric_series():
    m = free(1)
    a = S(m, 5, [(1, "a")])
    expected = Series(m, 5, {(0,) * n: 1 for n in range(6)})
    assert star(a) == expected


def test_star_requires_proper():
    m = free(1)
    with pytest.raises(ProperError):
        star(Series.one(m, 3))


def test_star_inverts_one_minus_f():
    rng = random.Random(23)
    for m in (standard_words(), free(2), commutative(2)):
        one = Series.one(m, 8)
        for _ in range(30):
            f = random_series(rng, m, 8, proper=True)
            fs = star(f)
            assert fs.augmentation() == 1
            assert cauchy_product(one - f, fs) == one
            assert cauchy_product(fs, one - f) == one


# -- characteristic and mobius series ---------------------------------------

def test_characteristic_standard_words():
    m = standard_words()
    zeta = characteristic_series(m, 4)
    assert len(zeta.terms) == 16  # 1 + 3 + 6 + 6
    assert all(c == 1 for c in zeta.terms.values())


def test_characteristic_at_zero_truncation():
    m = free(3)
    assert characteristic_series(m, 0) == Series.one(m, 0)


def test_characteristic_free_two_letters():
    m = free(2)
    zeta = characteristic_series(m, 2)
    assert zeta == S(m, 2, [(1, ""), (1, "a"), (1, "b"), (1, "aa"),
                            (1, "ab"), (1, "ba"), (1, "bb")])


def test_mobius_values():
    m = standard_words()
    assert mobius_series(m, 3) == S(m, 3, [(1, ""), (-1, "a"), (-1, "b"),
                                           (-1, "c")])
    fm = free(3)
    assert mobius_series(fm, 5) == S(fm, 5, [(1, ""), (-1, "a"), (-1, "b"),
                                             (-1, "c")])
    cm = commutative(2)
    assert mobius_series(cm, 2) == S(cm, 2, [(1, ""), (-1, "a"), (-1, "b"),
                                             (1, "ab")])


def test_mobius_matches_triangular_solve():
    for k in (1, 2, 3):
        for m in builtin_monoids(k):
            assert mobius_series(m, 5) == mobius_by_triangular_solve(m, 5), \
                m.describe()


def test_unit_inverse_reports():
    for m in (standard_words(), free(2), commutative(3)):
        report = check_unit_inverse(m, 6)
        assert report.passed, report.counterexample


# -- inversion round trip ---------------------------------------------------

def test_invert_left_roundtrip_single_letter():
    m = standard_words()
    f = S(m, 4, [(1, "a")])
    assert mobius_invert_left(zeta_transform_left(f)) == f


def test_invert_of_one_is_mobius():
    m = standard_words()
    assert mobius_invert_left(Series.one(m, 4)) == mobius_series(m, 4)
    assert mobius_invert_right(Series.one(m, 4)) == mobius_series(m, 4)


def test_transform_of_zero():
    m = free(2)
    assert zeta_transform_left(Series.zero(m, 3)).is_zero()
    assert mobius_invert_left(Series.zero(m, 3)).is_zero()


def test_roundtrip_randomized_both_sides():
    rng = random.Random(31)
    for m in (standard_words(), commutative(2)):
        for _ in range(20):
            f = random_series(rng, m, 6)
            assert mobius_invert_left(zeta_transform_left(f)) == f
            assert mobius_invert_right(zeta_transform_right(f)) == f
            assert zeta_transform_left(mobius_invert_left(f)) == f


# -- power ------------------------------------------------------------------

def test_power_nilpotent_in_standard_words():
    rng = random.Random(41)
    m = standard_words()
    for _ in range(20):
        f = random_series(rng, m, 6, proper=True)
        assert power(f, 4).is_zero()  # max order is 3


def test_power_squared_single_letter():
    m = free(1)
    zplus = proper_part(characteristic_series(m, 3))
    assert power(zplus, 2) == Series(m, 3, {(0, 0): 1, (0, 0, 0): 2})


def test_power_edge_cases():
    m = free(2)
    f = S(m, 3, [(2, "a"), (1, "b")])
    assert power(f, 1) == f
    assert power(f, 0) == Series.one(m, 3)
    with pytest.raises(ValueError):
        power(f, -1)


# -- ring plumbing ----------------------------------------------------------

def sampled_ring_values(ring, rng, count=12):
    return [ring.from_int(rng.randint(-6, 6)) for _ in range(count)]


def test_ring_axioms_sampled():
    rng = random.Random(5)
    for ring in (INTEGERS, RATIONALS, IntegerModRing(7)):
        vals = sampled_ring_values(ring, rng)
        for a in vals[:6]:
            for b in vals[3:9]:
                assert ring.add(a, b) == ring.add(b, a)
                assert ring.mul(a, b) == ring.mul(b, a)
                assert ring.add(a, ring.neg(a)) == ring.zero
                assert ring.mul(a, ring.one) == a
                for c in vals[6:]:
                    assert ring.add(ring.add(a, b), c) == \
                        ring.add(a, ring.add(b, c))
                    assert ring.mul(ring.mul(a, b), c) == \
                        ring.mul(a, ring.mul(b, c))
                    assert ring.mul(a, ring.add(b, c)) == \
                        ring.add(ring.mul(a, b), ring.mul(a, c))


def test_mod_ring_bounds():
    with pytest.raises(ValueError):
        IntegerModRing(1)
    assert IntegerModRing(5) == IntegerModRing(5)
    assert IntegerModRing(5) != IntegerModRing(7)


def test_series_mod_two_freshman_dream():
    ring = IntegerModRing(2)
    m = commutative(2)
    f = Series(m, 4, {(1, 0): 1, (0, 1): 1}, ring)
    sq = cauchy_product(f, f)
    # cross terms carry coefficient 2 = 0 mod 2
    assert sq == Series(m, 4, {(2, 0): 1, (0, 2): 1}, ring)


def test_rational_coefficients():
    from fractions import Fraction

    m = free(1)
    half = Series(m, 3, {(0,): Fraction(1, 2)}, RATIONALS)
    assert cauchy_product(half, half).terms == {(0, 0): Fraction(1, 4)}
    assert star(half).terms[(0, 0, 0)] == Fraction(1, 8)


def test_mobius_over_rationals():
    m = standard_words()
    mu = mobius_series(m, 4, RATIONALS)
    assert mu == S(m, 4, [(1, ""), (-1, "a"), (-1, "b"), (-1, "c")],
                   RATIONALS)


# -- valuation and algebra laws --------------------------------------------

def test_min_order_filtration():
    rng = random.Random(19)
    m = free(2)
    assert Series.zero(m, 4).min_order() == math.inf
    for _ in range(40):
        f = random_series(rng, m, 6)
        g = random_series(rng, m, 6)
        fg = cauchy_product(f, g)
        if not fg.is_zero():
            assert fg.min_order() >= f.min_order() + g.min_order()


def test_product_associativity_and_distributivity_sampled():
    rng = random.Random(3)
    for m in (standard_words(), commutative(2)):
        for _ in range(15):
            f = random_series(rng, m, 6)
            g = random_series(rng, m, 6)
            h = random_series(rng, m, 6)
            assert cauchy_product(cauchy_product(f, g), h) == \
                cauchy_product(f, cauchy_product(g, h))
            assert cauchy_product(f, add(g, h)) == \
                add(cauchy_product(f, g), cauchy_product(f, h))


# -- rendering and misc -----------------------------------------------------

def test_render_conventions():
    m = standard_words()
    assert mobius_series(m, 4).render() == "1 - a - b - c"
    assert Series.zero(m, 4).render() == "0"
    assert S(m, 4, [(2, "a"), (1, "ab")]).render() == "2a + ab"
    assert S(m, 4, [(-1, "a")]).render() == "-a"
    assert S(m, 4, [(-3, ""), (1, "ba")]).render() == "-3 + ba"


def test_items_sorted_order():
    m = commutative(2)
    f = Series(m, 3, {(0, 1): 1, (1, 0): 1, (2, 0): 1, (0, 0): 1})
    rendered = [m.render_word(word) for word, _ in f.items_sorted()]
    assert rendered == ["1", "a", "b", "aa"]


def test_truncated_projection():
    m = free(1)
    f = Series(m, 4, {(0,): 1, (0, 0, 0): 2})
    cut = f.truncated(2)
    assert cut.truncation == 2 and cut.terms == {(0,): 1}
    with pytest.raises(TruncationError):
        f.truncated(9)


def test_first_difference_reporting():
    m = free(2)
    f = S(m, 3, [(1, "a")])
    g = S(m, 3, [(2, "a")])
    assert "at a: 1 != 2" == first_difference(f, g)
    assert first_difference(f, f) is None


def test_operator_sugar():
    m = standard_words()
    f = S(m, 4, [(1, "a")])
    g = S(m, 4, [(1, "b")])
    assert (f + g) - g == f
    assert f * g == cauchy_product(f, g)
    assert 3 * f == scalar_mul(3, f)
    assert (-f) + f == Series.zero(m, 4)
    assert (g - g).star() == Series.one(m, 4)
    assert f.power(2).is_zero()
