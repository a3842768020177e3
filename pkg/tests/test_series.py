"""Fraction substitution, series expansion, and the square e.d = b.a."""

import random

import pytest

from conftest import random_pathless_monomial
from subdivalg.groebner import ideal_generator
from subdivalg.poly import (
    TPoly,
    XPoly,
    d_image,
    mono_from_pairs,
    mono_one,
    parse_tpoly,
)
from subdivalg.rewrite import (
    FirstByOrder,
    LastByOrder,
    random_xpoly,
    reduce_pathless,
)
from subdivalg.ring import ALPHA, BETA, Coeff
from subdivalg.series import (
    QPoly,
    QRatFrac,
    QTruncSeries,
    TWSeries,
    a_image_rat,
    a_s_expand,
    b_map,
    denominator_poly,
    e_image,
    ed_ba_sweep,
    friendly_rows,
    g_substitute,
    is_s_adequate,
    is_s_friendly,
    q_binomial,
    q_to_r_exponent,
    r_to_q_exponent,
    random_tpoly,
    rat_eq,
    verify_a_kills_j,
    verify_e_left_inverse,
    verify_ed_eq_ba,
)


def mono(n: int, *pairs) -> tuple:
    exps = {}
    for i, j in pairs:
        exps[(i, j)] = exps.get((i, j), 0) + 1
    return mono_from_pairs(n, exps)


def test_a_image_single_variable():
    f = a_image_rat(XPoly.variable(1, 2, 2))
    assert f.numerator == QPoly(
        2, {(1, 1): -Coeff.one(), (0, 1): -BETA, (0, 0): -ALPHA}
    )
    assert f.denominator == {(1, 2): 1}
    assert str(f) == "(-q[1]*q[2] - b*q[2] - a) / (q[2]-q[1])"


def test_a_image_constant():
    f = a_image_rat(XPoly.one(3))
    assert f.numerator == QPoly.one(3)
    assert f.denominator == {}


def test_a_image_kills_generator():
    g = ideal_generator(1, 2, 3, 3)
    assert a_image_rat(g).is_zero()
    g5 = ideal_generator(2, 3, 5, 5)
    assert a_image_rat(g5).is_zero()


def test_rat_eq_ignores_representation():
    n = 3
    f = a_image_rat(XPoly.variable(1, 2, n))
    padded = QRatFrac(
        f.numerator * q_binomial(2, 3, n),
        {(1, 2): 1, (2, 3): 1},
    )
    assert rat_eq(f, padded)
    assert not rat_eq(f, QRatFrac.from_poly(QPoly.zero(n)))
    with pytest.raises(ValueError):
        rat_eq(f, QRatFrac.from_poly(QPoly.zero(4)))


def test_a_image_is_multiplicative():
    rng = random.Random(31)
    for trial in range(60):
        n = rng.randint(2, 4)
        max_deg = 3 if trial % 10 == 0 else 2
        p = random_xpoly(n, max_deg, 2, rng)
        q = random_xpoly(n, 2, 2, rng)
        assert rat_eq(a_image_rat(p * q), a_image_rat(p) * a_image_rat(q))
        assert rat_eq(a_image_rat(p + q), a_image_rat(p) + a_image_rat(q))


def test_verify_a_kills_j():
    assert verify_a_kills_j(3, samples=20, seed=5).ok
    report = verify_a_kills_j(4, samples=20, seed=5)
    assert report.ok
    assert report.generators_checked == 4
    assert verify_a_kills_j(4, samples=10, seed=5, beta=1, alpha=0).ok


def test_a_image_detects_perturbed_generator():
    g = ideal_generator(1, 2, 3, 3) + XPoly.constant(3, ALPHA)
    assert not a_image_rat(g).is_zero()
    assert not rat_eq(a_image_rat(g), QRatFrac.from_poly(QPoly.zero(3)))


def test_a_s_expand_identity():
    assert a_s_expand(mono_one(2), {1}, 3) == QTruncSeries.one(2, 3)


def test_a_s_expand_single_variable():
    s = a_s_expand(mono(2, (1, 2)), {1}, 1)
    assert s.terms == {
        (1, 0): -Coeff.one(),
        (0, 0): -BETA,
        (0, -1): -ALPHA,
        (2, -1): -Coeff.one(),
        (1, -1): -BETA,
    }


def test_a_s_expand_support_is_adequate():
    s = a_s_expand(mono(3, (1, 3), (2, 3)), {1, 2}, 3)
    assert s.terms
    for exps in s.terms:
        assert is_s_adequate(exps, frozenset({1, 2}))


def test_a_s_expand_rejects_bad_input():
    with pytest.raises(ValueError):
        a_s_expand(mono(3, (1, 2), (2, 3)), {1, 2}, 2)  # x[1,2] lands inside S
    with pytest.raises(ValueError):
        a_s_expand(mono(2, (1, 2)), {2}, 2)  # subset must avoid the last column


def test_friendly_rows_makes_pathless_monomials_friendly():
    rng = random.Random(37)
    for _ in range(200):
        n = rng.randint(2, 5)
        m = random_pathless_monomial(n, 4, rng)
        subset = friendly_rows(m)
        assert is_s_friendly(m, subset)
        s = a_s_expand(m, subset, 2)
        for exps in s.terms:
            assert is_s_adequate(exps, subset)


def test_s_friendly_examples():
    assert is_s_friendly(mono(3, (1, 3), (2, 3)), frozenset({1, 2}))
    assert not is_s_friendly(mono(3, (1, 2)), frozenset({1, 2}))
    assert is_s_friendly(mono_one(3), frozenset())
    assert is_s_adequate((2, 0, -1), frozenset({1}))
    assert not is_s_adequate((2, -1, 1), frozenset({1}))


def test_b_map_monomials():
    s = QTruncSeries(3, 1, {(2, 0, -1): Coeff.one()})
    image = b_map(s)
    assert image.coeffs[0].is_zero()
    assert image.coeffs[1] == parse_tpoly("t[1]^2", 3)

    s2 = QTruncSeries(2, 2, {(1, -2): Coeff.one()})
    image2 = b_map(s2)
    assert image2.coeffs[0].is_zero()
    assert image2.coeffs[1].is_zero()
    assert image2.coeffs[2] == parse_tpoly("t[1]", 2)


def test_b_map_is_multiplicative_on_adequate_support():
    rng = random.Random(41)

    def random_adequate(n: int, subset: frozenset, order: int) -> QTruncSeries:
        terms = {}
        for _ in range(rng.randint(1, 4)):
            exps = tuple(
                rng.randint(0, 2) if pos in subset else -rng.randint(0, 1)
                for pos in range(1, n + 1)
            )
            terms[exps] = Coeff.rational(rng.randint(-3, 3))
        return QTruncSeries(n, order, terms)

    for _ in range(100):
        n = rng.randint(2, 4)
        subset = frozenset(
            i for i in range(1, n) if rng.random() < 0.6
        ) or frozenset({1})
        order = rng.randint(2, 4)
        f = random_adequate(n, subset, order)
        g = random_adequate(n, subset, order)
        assert b_map(f * g) == b_map(f) * b_map(g)
        assert b_map(f + g) == b_map(f) + b_map(g)


def test_e_image_single_variable():
    series = e_image(parse_tpoly("t[1]", 2), 2)
    assert series.coeffs == (
        parse_tpoly("-t[1] - b", 2),
        parse_tpoly("-t[1]^2 - b*t[1] - a", 2),
        parse_tpoly("-t[1]^3 - b*t[1]^2 - a*t[1]", 2),
    )
    assert str(series) == (
        "(-t[1] - b) + (-t[1]^2 - b*t[1] - a)*w + (-t[1]^3 - b*t[1]^2 - a*t[1])*w^2"
    )


def test_e_image_constant_and_product():
    assert e_image(TPoly.one(3), 2) == TWSeries.one(3, 2)
    product = e_image(parse_tpoly("t[1]*t[2]", 3), 0)
    assert product.coeffs[0] == parse_tpoly(
        "t[1]*t[2] + b*t[1] + b*t[2] + b^2", 3
    )


def test_e_image_rejects_last_variable():
    with pytest.raises(ValueError):
        e_image(parse_tpoly("t[3]", 3), 1)


def test_e_image_specialized():
    series = e_image(parse_tpoly("t[1]", 2), 1, beta=1, alpha=0)
    assert series.coeffs[0] == parse_tpoly("-t[1] - 1", 2)
    assert series.coeffs[1] == parse_tpoly("-t[1]^2 - t[1]", 2)


def test_verify_ed_eq_ba_examples():
    assert verify_ed_eq_ba(mono(2, (1, 2)), 4)
    assert verify_ed_eq_ba(mono_one(2), 3)
    assert verify_ed_eq_ba(mono(3, (1, 3), (2, 3)), 5)
    assert verify_ed_eq_ba(mono(4, (1, 2), (3, 4)), 3, beta=1, alpha=0)
    with pytest.raises(ValueError):
        verify_ed_eq_ba(mono(3, (1, 2), (2, 3)), 3)


def test_ed_ba_sweep_small():
    report3 = ed_ba_sweep(3, 3, 4)
    assert report3.ok
    assert report3.checked == 16
    report4 = ed_ba_sweep(4, 3, 4)
    assert report4.ok
    assert report4.checked == 59


def test_d_image_agrees_across_games():
    rng = random.Random(43)
    for _ in range(50):
        n = rng.randint(3, 4)
        p = random_xpoly(n, 4, 4, rng)
        q1, _ = reduce_pathless(p, FirstByOrder())
        q2, _ = reduce_pathless(p, LastByOrder())
        assert d_image(q1 - q2).is_zero()
        assert d_image(q1) == d_image(q2)


def test_e_left_inverse_manual():
    for text, n in (("t[1]", 2), ("t[1]^2*t[2] + a*t[3]", 4), ("1", 2)):
        p = parse_tpoly(text, n)
        constant = e_image(p, 0).coeffs[0]
        assert g_substitute(constant) == p


def test_verify_e_left_inverse():
    assert verify_e_left_inverse(4, 50, seed=7)
    assert verify_e_left_inverse(3, 20, seed=7, beta=2, alpha=3)


def test_g_substitute_involution():
    rng = random.Random(47)
    for _ in range(100):
        p = random_tpoly(4, 3, 4, rng)
        assert g_substitute(g_substitute(p)) == p


def test_exponent_bijection():
    assert q_to_r_exponent((1, 0, 0)) == (1, 1, 1)
    assert r_to_q_exponent((1, 1, 1)) == (1, 0, 0)
    rng = random.Random(53)
    for _ in range(1000):
        n = rng.randint(1, 6)
        v = tuple(rng.randint(-4, 4) for _ in range(n))
        assert r_to_q_exponent(q_to_r_exponent(v)) == v
        assert q_to_r_exponent(r_to_q_exponent(v)) == v


def test_qtrunc_pruning():
    s = QTruncSeries(2, 1, {(0, -2): Coeff.one(), (1, 0): Coeff.one()})
    assert s.terms == {(1, 0): Coeff.one()}
    deep = QTruncSeries(2, 1, {(0, -1): Coeff.one()})
    assert (deep * deep).terms == {}


def test_denominator_poly():
    assert denominator_poly(3, {}) == QPoly.one(3)
    assert denominator_poly(3, {(1, 2): 2}) == q_binomial(1, 2, 3) * q_binomial(
        1, 2, 3
    )
