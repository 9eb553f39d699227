"""Exact polynomial / fraction arithmetic and the Laurent view."""

import random
from fractions import Fraction
from math import gcd as int_gcd

import pytest

from z2beta.algebra import (
    NEG_INFINITY,
    IntPoly,
    RationalU,
    laurent_expand,
    poly_gcd,
)
from z2beta.errors import DivisionByZero, NonIntegerExpansion, PoleAtPoint

U = IntPoly.u()


# ---------------------------------------------------------------------------
# independent oracle: plain long division in v = 1/u over Fraction

def long_division(num: IntPoly, den: IntPoly, depth: int):
    shift = num.degree - den.degree
    p = [Fraction(num[num.degree - k]) for k in range(num.degree + 1)]
    q = [Fraction(den[den.degree - k]) for k in range(den.degree + 1)]
    width = max(len(p), len(q)) + depth
    p += [Fraction(0)] * (width - len(p))
    q += [Fraction(0)] * (width - len(q))
    out = []
    for _ in range(depth):
        c = p[0] / q[0]
        out.append(c)
        p = [p[j] - c * q[j] for j in range(1, width)] + [Fraction(0)]
    return out, shift


def random_poly(rng, max_degree=8, max_coeff=10 ** 6):
    return IntPoly({e: rng.randint(-max_coeff, max_coeff)
                    for e in range(rng.randint(0, max_degree) + 1)})


def random_fraction(rng):
    den = IntPoly.zero()
    while den.is_zero():
        den = random_poly(rng, max_degree=4)
    return RationalU(random_poly(rng), den)


# ---------------------------------------------------------------------------
# polynomials

def test_poly_ring_ops():
    assert (U + 1) + (U - 1) == IntPoly({1: 2})
    assert (U - 1) * (U + 1) == U ** 2 - 1
    assert IntPoly.zero() * (U ** 3 + 5) == IntPoly.zero()


def test_poly_degree_and_valuation():
    assert IntPoly.zero().degree == NEG_INFINITY
    assert (U ** 5 + U).degree == 5
    assert (U ** 5 + U).valuation == 1
    assert IntPoly({0: 7}).degree == 0


def test_poly_text_roundtrip():
    for text in ["0", "1", "-1", "u", "2u", "u^2 + 1", "u - 1",
                 "-2u^3 + u - 5", "u^10", "3u^2 - 2u + 7"]:
        p = IntPoly.parse(text)
        assert str(p) == text
        assert IntPoly.parse(str(p)) == p


def test_poly_parse_tolerates_star_and_spacing():
    assert IntPoly.parse("2*u^3-u+5") == IntPoly({3: 2, 1: -1, 0: 5})
    assert IntPoly.parse("u-1") == U - 1


def test_poly_parse_rejects_garbage():
    for bad in ["", "u^-1", "x + 1", "u^"]:
        with pytest.raises(ValueError):
            IntPoly.parse(bad)


def test_poly_gcd_primitive():
    a = (U - 1) * (U + 2) * 3
    b = (U - 1) * (U ** 2 + 1) * 2
    assert poly_gcd(a, b) == U - 1
    assert poly_gcd(IntPoly.zero(), b) == (U - 1) * (U ** 2 + 1)


def euclid_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Independent gcd oracle: dense Euclid over Q[u], made primitive."""
    def to_dense(p):
        if p.is_zero():
            return []
        return [Fraction(p[e]) for e in range(p.degree + 1)]

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    fa, fb = to_dense(a), to_dense(b)
    while fb:
        # fa mod fb
        fa = fa[:]
        while len(fa) >= len(fb) and fa:
            factor = fa[-1] / fb[-1]
            shift = len(fa) - len(fb)
            for i, c in enumerate(fb):
                fa[i + shift] -= factor * c
            trim(fa)
        fa, fb = fb, fa
    if not fa:
        return IntPoly.zero()
    denominators = 1
    for c in fa:
        denominators = denominators * c.denominator // int_gcd(denominators,
                                                               c.denominator)
    ints = [int(c * denominators) for c in fa]
    content = 0
    for c in ints:
        content = int_gcd(content, abs(c))
    ints = [c // content for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return IntPoly(dict(enumerate(ints)))


def test_poly_gcd_against_euclid_oracle():
    rng = random.Random(314)
    for _ in range(150):
        g = random_poly(rng, max_degree=3, max_coeff=9)
        a = random_poly(rng, max_degree=4, max_coeff=50)
        b = random_poly(rng, max_degree=4, max_coeff=50)
        if g.is_zero() or a.is_zero() or b.is_zero():
            continue
        assert poly_gcd(a * g, b * g) == euclid_gcd(a * g, b * g)


def test_fraction_route_independence():
    rng = random.Random(2718)
    for _ in range(200):
        f = random_fraction(rng)
        multiplier = random_poly(rng, max_degree=3, max_coeff=20)
        if multiplier.is_zero():
            continue
        assert RationalU(f.numerator * multiplier,
                         f.denominator * multiplier) == f


# ---------------------------------------------------------------------------
# fractions

def test_fraction_examples():
    t = RationalU(U, U - 1)
    assert t - 1 == RationalU(1, U - 1)
    assert RationalU(U - 1) * t == RationalU(U)
    assert t + t == RationalU(2 * U, U - 1)


def test_fraction_normal_form_unique():
    assert RationalU(2 * U ** 2 - 2, 2 * U - 2) == RationalU(U + 1)
    assert RationalU(U ** 3 - U, (U - 1) ** 2) == RationalU(U ** 2 + U, U - 1)
    assert RationalU(4 * U, 2) == RationalU(2 * U)
    # denominator sign is normalized
    assert RationalU(U, 1 - U) == RationalU(-U, U - 1)


def test_fraction_division():
    a = RationalU(U ** 2 + 1, U - 1)
    assert a / a == RationalU.one()
    with pytest.raises(DivisionByZero):
        a / RationalU.zero()
    with pytest.raises(DivisionByZero):
        RationalU(U, IntPoly.zero())


def test_field_axioms_randomized():
    rng = random.Random(1729)
    for _ in range(1000):
        a, b, c = (random_fraction(rng) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        if not b.is_zero():
            assert (a / b) * b == a


def test_degree():
    assert RationalU(U ** 4, U - 1).degree == 3
    assert RationalU(1 + U ** 2).degree == 2
    assert RationalU.zero().degree == NEG_INFINITY


def test_degree_additive_randomized():
    rng = random.Random(7)
    for _ in range(300):
        a, b = random_fraction(rng), random_fraction(rng)
        if not a.is_zero() and not b.is_zero():
            assert (a * b).degree == a.degree + b.degree


def test_eval_at():
    assert RationalU(1 + U).eval_at(1) == 2  # 1 + u^(d-1) at d = 2
    assert RationalU(U ** 2 + U).eval_at(1) == 2
    assert RationalU(U, U - 1).eval_at(2) == 2
    with pytest.raises(PoleAtPoint):
        RationalU(U, U - 1).eval_at(1)


def test_text_form_contract():
    assert str(RationalU(U ** 2 + 1, U - 1)) == "(u^2 + 1)/(u - 1)"
    assert str(RationalU(U, U - 1)) == "u/(u - 1)"
    assert str(RationalU(U ** 2 + 1, U)) == "(u^2 + 1)/u"
    assert str(RationalU.zero()) == "0"
    assert str(RationalU(2 * U, U - 1)) == "2u/(u - 1)"
    for text in ["(u^2 + 1)/(u - 1)", "u/(u - 1)", "1/u^2", "u^2 + 1"]:
        assert str(RationalU.parse(text)) == text


# ---------------------------------------------------------------------------
# Laurent expansion

def test_point_series_window():
    w = laurent_expand(RationalU(U, U - 1), 4)
    assert w.top_degree == 0
    assert w.coefficients == (1, 1, 1, 1)
    assert w.eventually_constant == 1


def test_exact_division_window():
    w = laurent_expand(RationalU(U ** 2 + 1, U), 3)
    assert w.top_degree == 1
    assert w.coefficients == (1, 0, 1)
    assert w.eventually_constant == 0
    # a shallower window cannot certify the tail yet
    assert laurent_expand(RationalU(U ** 2 + 1, U), 2).eventually_constant is None


def test_affine_plane_window():
    w = laurent_expand(RationalU(U ** 3, U - 1), 5)  # d = 2
    assert w.top_degree == 2
    assert w.coefficients == (1, 1, 1, 1, 1)
    assert w.eventually_constant == 1


def test_window_of_zero():
    w = laurent_expand(RationalU.zero(), 3)
    assert w.coefficients == (0, 0, 0)
    assert w.eventually_constant == 0


def test_no_tail_for_other_poles():
    w = laurent_expand(RationalU(1, U + 1), 6)
    assert w.eventually_constant is None
    assert w.coefficients == (1, -1, 1, -1, 1, -1)


def test_non_integer_expansion_detected():
    with pytest.raises(NonIntegerExpansion):
        laurent_expand(RationalU(1, 2 * U - 1), 4)


def test_window_coefficient_lookup():
    w = laurent_expand(RationalU(U, U - 1), 3)
    assert w.coefficient(0) == 1
    assert w.coefficient(-10) == 1  # certified by the tail
    with pytest.raises(IndexError):
        w.coefficient(5)


def test_roundtrip_against_long_division():
    rng = random.Random(42)
    for _ in range(200):
        num = random_poly(rng, max_degree=6, max_coeff=50)
        low = random_poly(rng, max_degree=3, max_coeff=5)
        if num.is_zero() or low.is_zero():
            continue
        den = IntPoly.monomial(low.degree + 1) + low  # monic
        window = laurent_expand(RationalU(num, den), 12)
        oracle, shift = long_division(num, den, 12)
        assert window.top_degree == shift
        assert [Fraction(c) for c in window.coefficients] == oracle
