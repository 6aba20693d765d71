import random
from fractions import Fraction

import pytest

from tropmat.semiring import (
    BOTTOM,
    INF_DIST,
    NEG_INF,
    POS_INF,
    ExtDistance,
    ProjPoint,
    TropScalar,
    delta,
    ext_sub,
    t_add,
    t_mul,
)

SEED = 20260808


def rand_scalar(rng):
    if rng.randrange(5) == 0:
        return BOTTOM
    return TropScalar(Fraction(rng.randrange(-30, 31), rng.randrange(1, 6)))


def rand_point(rng):
    roll = rng.randrange(6)
    if roll == 0:
        return NEG_INF
    if roll == 1:
        return POS_INF
    return ProjPoint(Fraction(rng.randrange(-30, 31), rng.randrange(1, 6)))


def test_t_add_examples():
    assert t_add(3, "-inf") == TropScalar(3)
    assert t_add(2, 5) == TropScalar(5)
    assert t_add(4, 4) == TropScalar(4)


def test_t_mul_examples():
    assert t_mul(7, -7) == TropScalar(0)
    assert t_mul("-inf", 5) == BOTTOM
    assert t_mul("1/2", "1/3") == TropScalar("5/6")


def test_ext_sub_examples():
    assert ext_sub(5, "-inf") == POS_INF
    assert ext_sub("-inf", 5) == NEG_INF
    assert ext_sub(7, 3) == ProjPoint(4)


def test_ext_sub_rejects_double_bottom():
    with pytest.raises(ValueError):
        ext_sub(BOTTOM, BOTTOM)


def test_delta_examples():
    assert delta(2, 5) == ExtDistance(3)
    assert delta(NEG_INF, NEG_INF) == ExtDistance(0)
    assert delta(3, POS_INF) == INF_DIST
    assert delta(POS_INF, POS_INF) == ExtDistance(0)


def test_semiring_laws_on_random_samples():
    """Associativity, commutativity, distributivity, and both identities."""
    rng = random.Random(SEED)
    zero = TropScalar(0)
    for _ in range(2000):
        a, b, c = rand_scalar(rng), rand_scalar(rng), rand_scalar(rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + BOTTOM == a
        assert a * zero == a
        assert a * BOTTOM == BOTTOM
        assert a + a == a


def test_delta_is_a_metric_with_infinity():
    rng = random.Random(SEED + 1)
    for _ in range(2000):
        x, y, z = rand_point(rng), rand_point(rng), rand_point(rng)
        assert (delta(x, y) == ExtDistance(0)) == (x == y)
        assert delta(x, y) == delta(y, x)
        assert delta(x, z) <= delta(x, y) + delta(y, z)


def test_scalar_total_order():
    assert BOTTOM < TropScalar(-1000)
    assert TropScalar("1/3") < TropScalar("1/2")
    assert not BOTTOM < BOTTOM


def test_proj_point_total_order_and_negation():
    assert NEG_INF < ProjPoint(-10**9) < ProjPoint(0) < POS_INF
    assert -NEG_INF == POS_INF
    assert -POS_INF == NEG_INF
    assert -ProjPoint("3/2") == ProjPoint("-3/2")


def test_bottom_has_no_negation():
    with pytest.raises(ValueError):
        -BOTTOM


def test_scalar_tokens_round_trip():
    for token in ["-inf", "0", "7", "-3", "1/2", "-22/7"]:
        assert str(TropScalar(token)) == token
    for token in ["-inf", "+inf", "5/3", "-4"]:
        assert str(ProjPoint(token)) == token


def test_bad_tokens_rejected():
    for bad in ["1.5", "x", "3/0", "1/-2", ""]:
        with pytest.raises((ValueError, ZeroDivisionError)):
            TropScalar(bad)
    with pytest.raises(ValueError):
        TropScalar("+inf")
    with pytest.raises(TypeError):
        TropScalar(0.5)


def test_proj_point_scalar_conversion():
    assert ProjPoint(TropScalar("-inf")) == NEG_INF
    assert NEG_INF.to_scalar() == BOTTOM
    assert ProjPoint(2).to_scalar() == TropScalar(2)
    with pytest.raises(ValueError):
        POS_INF.to_scalar()
