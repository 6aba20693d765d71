import random
from fractions import Fraction

import pytest

from tropmat.geometry import (
    ConvexSet,
    IsoType,
    canonical_set,
    diameter,
    embed_image,
    embeds_isometrically,
    in_column_space,
    iso_type,
    isometric,
    parse_set,
    proj_column_space,
    proj_point_of,
    proj_row_space,
    subset,
)
from tropmat.matrix import TropMatrix, TropVector
from tropmat.sampling import sample_convex_set, sample_matrix, sample_vector
from tropmat.semiring import NEG_INF, POS_INF, ExtDistance, INF_DIST, ProjPoint

SEED = 20260808

FULL = ConvexSet.full_line()


def test_column_space_examples():
    assert proj_column_space(TropMatrix([[0, 0], [1, 2]])) == ConvexSet.interval(1, 2)
    assert proj_column_space(TropMatrix([["-inf", 3], ["-inf", 5]])) == ConvexSet.point(2)
    assert proj_column_space(TropMatrix([[3, "-inf"], ["-inf", 4]])) == FULL
    assert proj_column_space(TropMatrix.zero(2)) == ConvexSet.empty()


def test_row_space_examples():
    assert proj_row_space(TropMatrix.identity(2)) == FULL
    assert proj_row_space(TropMatrix.zero(2)) == ConvexSet.empty()
    a = TropMatrix([[0, 1], [2, 3]])
    assert diameter(proj_row_space(a)) == diameter(proj_column_space(a))


def test_diameter_examples():
    assert diameter(ConvexSet.empty()) == ExtDistance(0)
    assert diameter(ConvexSet.interval(1, 4)) == ExtDistance(3)
    assert diameter(ConvexSet.interval(0, POS_INF)) == INF_DIST
    assert diameter(ConvexSet.point(NEG_INF)) == ExtDistance(0)


def test_isometric_examples():
    assert isometric(ConvexSet.interval(NEG_INF, 0), ConvexSet.interval(0, POS_INF))
    assert isometric(ConvexSet.interval(0, 1), ConvexSet.interval(5, 6))
    assert not isometric(ConvexSet.interval(0, 1), ConvexSet.interval(0, 2))
    assert isometric(ConvexSet.point(NEG_INF), ConvexSet.point(7))


def test_iso_type_examples():
    assert iso_type(ConvexSet.interval(NEG_INF, 3)) == IsoType("halfinf")
    assert iso_type(ConvexSet.point(POS_INF)) == IsoType("point")
    assert iso_type(FULL) == IsoType("fullline")
    assert iso_type(ConvexSet.interval("1/2", 2)) == IsoType("interval", Fraction(3, 2))


def test_embeds_isometrically_examples():
    assert embeds_isometrically(ConvexSet.interval(0, 1), ConvexSet.interval(5, 7))
    assert not embeds_isometrically(ConvexSet.interval(0, POS_INF), ConvexSet.interval(0, 5))
    assert embeds_isometrically(ConvexSet.empty(), ConvexSet.empty())
    assert embeds_isometrically(IsoType("halfinf"), IsoType("fullline"))
    assert not embeds_isometrically(IsoType("fullline"), IsoType("halfinf"))


def test_embedding_is_a_partial_order_on_types():
    rng = random.Random(SEED)
    types = [iso_type(sample_convex_set(rng)) for _ in range(200)]
    for s in types:
        assert embeds_isometrically(s, s)
    for s in types[:50]:
        for t in types[:50]:
            if embeds_isometrically(s, t) and embeds_isometrically(t, s):
                assert s == t
            for u in types[:20]:
                if embeds_isometrically(s, t) and embeds_isometrically(t, u):
                    assert embeds_isometrically(s, u)


def test_iso_type_agrees_with_isometric():
    rng = random.Random(SEED + 1)
    for _ in range(500):
        s, t = sample_convex_set(rng), sample_convex_set(rng)
        assert isometric(s, t) == (iso_type(s) == iso_type(t))


def test_subset_examples():
    assert subset(ConvexSet.interval(1, 2), ConvexSet.interval(0, 3))
    assert subset(ConvexSet.point(2), ConvexSet.interval(0, 3))
    assert not subset(ConvexSet.interval(0, 3), ConvexSet.interval(1, 2))
    assert subset(ConvexSet.empty(), ConvexSet.empty())


def test_interval_normalization():
    assert ConvexSet.interval(5, 1) == ConvexSet.interval(1, 5)
    assert ConvexSet.interval(2, 2) == ConvexSet.point(2)
    assert ConvexSet.interval(2, 2).is_point


def test_duality_on_random_matrices():
    rng = random.Random(SEED + 2)
    for _ in range(2000):
        a = sample_matrix(rng, "with-neginf")
        assert isometric(proj_column_space(a), proj_row_space(a))


def test_membership_examples():
    a = TropMatrix([[0, 0], [1, 2]])
    assert not in_column_space(TropVector([2, 5]), a)
    assert in_column_space(TropVector([2, 4]), a)
    assert in_column_space(TropVector.zero(2), a)
    for j in range(2):
        assert in_column_space(a.column(j), a)


def test_membership_closed_under_scaling():
    rng = random.Random(SEED + 3)
    hits = 0
    for _ in range(800):
        a = sample_matrix(rng, "with-neginf")
        v = sample_vector(rng, "with-neginf")
        if in_column_space(v, a):
            hits += 1
            lam = Fraction(rng.randrange(-9, 10), rng.randrange(1, 4))
            assert in_column_space(v.scaled(lam), a)
    assert hits > 50


def test_membership_agrees_with_projective_geometry():
    """Residuation and interval membership answer identically."""
    rng = random.Random(SEED + 4)
    for _ in range(1500):
        a = sample_matrix(rng, "with-neginf")
        v = sample_vector(rng, "with-neginf")
        algebraic = in_column_space(v, a)
        if v.is_zero:
            geometric = True
        elif a.is_zero:
            geometric = False
        else:
            geometric = proj_column_space(a).contains(proj_point_of(v))
        assert algebraic == geometric


def test_product_columns_stay_in_left_factor_space():
    rng = random.Random(SEED + 5)
    for _ in range(800):
        a = sample_matrix(rng, "with-neginf")
        b = sample_matrix(rng, "with-neginf")
        assert subset(proj_column_space(a @ b), proj_column_space(a))


def test_embed_image_is_a_real_embedding():
    rng = random.Random(SEED + 6)
    for _ in range(600):
        s, t = sample_convex_set(rng), sample_convex_set(rng)
        if not embeds_isometrically(s, t):
            with pytest.raises(ValueError):
                embed_image(s, t)
            continue
        image = embed_image(s, t)
        assert subset(image, t)
        assert isometric(image, s)


def test_canonical_set_round_trips_types():
    for t in [
        IsoType("empty"),
        IsoType("point"),
        IsoType("interval", Fraction(7, 2)),
        IsoType("halfinf"),
        IsoType("fullline"),
    ]:
        assert iso_type(canonical_set(t)) == t
        assert IsoType.parse(str(t)) == t


def test_set_parsing_round_trip():
    for text in ["empty", "{-inf}", "{5/2}", "[-inf,+inf]", "[1,2]", "[-inf,0]"]:
        assert str(parse_set(text)) == text
    with pytest.raises(ValueError):
        parse_set("[2,1]")
    with pytest.raises(ValueError):
        parse_set("(0,1)")
    with pytest.raises(ValueError):
        parse_set("[1,2,3]")


def test_non_square_matrices_rejected():
    with pytest.raises(ValueError):
        proj_column_space(TropMatrix.identity(3))
    with pytest.raises(ValueError):
        in_column_space(TropVector([0, 0, 0]), TropMatrix.identity(3))
